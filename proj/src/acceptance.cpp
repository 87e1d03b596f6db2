#include "nullify/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include "nullify/enumeration.hpp"
#include "nullify/fixtures.hpp"
#include "nullify/montesinos.hpp"
#include "nullify/nullification.hpp"
#include "nullify/parallel.hpp"
#include "nullify/polynomials.hpp"
#include "nullify/rational.hpp"
#include "nullify/seifert.hpp"

namespace nullify {

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

// counts checks and keeps the first few failures
class Tally {
public:
    void check(bool ok, const std::string &what) {
        std::lock_guard<std::mutex> lock(mu_);
        ++checked_;
        if (ok) return;
        ++failed_;
        if (failures_.size() < 3) failures_.push_back(what);
    }
    int checked() const { return checked_; }
    Outcome done(const std::string &unit, const std::string &extra = "") const {
        std::ostringstream out;
        out << checked_ << ' ' << unit << ", " << failed_ << " mismatches";
        if (!extra.empty()) out << "; " << extra;
        for (const std::string &f : failures_) out << "; " << f;
        return {failed_ == 0 && checked_ > 0, out.str()};
    }

private:
    std::mutex mu_;
    int checked_ = 0, failed_ = 0;
    std::vector<std::string> failures_;
};

std::vector<const FixtureRecord *> reduced_alternating(int max_crossings) {
    std::vector<const FixtureRecord *> out;
    for (const FixtureRecord &r : default_fixtures()) {
        if (r.crossing_number > max_crossings) continue;
        const LinkDiagram d = r.diagram();
        if (is_alternating(d) && is_reduced(d)) out.push_back(&r);
    }
    return out;
}

int betti(const LinkDiagram &d) { return d.crossing_count() - seifert_circles(d).circle_count + 1; }

const FixtureRecord &fixture(const std::string &name) {
    const FixtureRecord *r = find_fixture(default_fixtures(), name);
    if (!r) throw std::runtime_error("fixture " + name + " is missing");
    return *r;
}

std::string str(int v) { return std::to_string(v); }

Outcome alternating_search(const AcceptanceOptions &opt) {
    const auto set = reduced_alternating(7);
    Tally t;
    parallel_for(static_cast<int>(set.size()), opt.jobs, [&](int i) {
        const LinkDiagram d = set[static_cast<std::size_t>(i)]->diagram();
        const int got = n_diagram(d).upper, want = betti(d);
        t.check(got == want, set[static_cast<std::size_t>(i)]->name + ": n_D " + str(got) + " vs " + str(want));
    });
    return t.done("fixtures");
}

Outcome homfly_degree(const AcceptanceOptions &opt) {
    const auto set = reduced_alternating(7);
    Tally t;
    parallel_for(static_cast<int>(set.size()), opt.jobs, [&](int i) {
        const LinkDiagram d = set[static_cast<std::size_t>(i)]->diagram();
        const int got = max_z_degree(homfly(d)), want = betti(d);
        t.check(got == want, set[static_cast<std::size_t>(i)]->name + ": z-degree " + str(got) + " vs " + str(want));
    });
    return t.done("fixtures");
}

Outcome curated_820(const AcceptanceOptions &) {
    const LaurentPoly1 table = *fixture("8_20").jones;
    Tally t;
    std::string note;
    for (auto [name, want] : std::vector<std::pair<std::string, int>>{{"8_20_M", 1}, {"8_20_N", 2}}) {
        LinkDiagram d = curated_diagram(name);
        if (jones(d) != table && jones(mirror(d)) == table) {
            d = mirror(d);
            note += name + " taken as its mirror image ";
        }
        t.check(jones(d) == table, name + ": Jones differs from the table");
        const NullResult r = n_diagram(d);
        t.check(r.upper == want && replay_witness(d, r).empty(), name + ": n_D " + str(r.upper) + " vs " + str(want));
    }
    return t.done("checks", note.empty() ? "" : note.substr(0, note.size() - 1));
}

Outcome family_1022(const AcceptanceOptions &) {
    const TangleVector v{1, 2, 3, 1, 3};
    const LinkDiagram d = fourplat_diagram(v);
    const NullResult r = n_general_interval(d);
    const int nd = fourplat_nd(v), sig = signature(d);
    Tally t;
    t.check(nd == 6, "fourplat_nd " + str(nd));
    t.check(!r.upper_exceeded && r.upper == 1, "upper " + str(r.upper));
    t.check(replay_witness(d, r).empty(), "witness does not replay");
    t.check(sig == 0, "signature " + str(sig));
    const LaurentPoly1 j = jones(d), table = *fixture("10_22").jones;
    t.check(j == table || j.inverted() == table, "Jones differs from 10_22");
    return t.done("checks", "n_d 6, interval [" + str(r.lower) + "," + str(r.upper) + "], sigma " + str(sig));
}

Outcome torus_reversed(const AcceptanceOptions &) {
    const LinkDiagram d = reverse_component(torus_diagram(3, 3), 1);
    const NullResult r = n_general_interval(d);
    Tally t;
    t.check(!r.upper_exceeded && r.upper == 1, "upper " + str(r.upper));
    t.check(replay_witness(d, r).empty(), "witness does not replay");
    return t.done("checks", "interval [" + str(r.lower) + "," + str(r.upper) + "]");
}

Outcome eleven_a263(const AcceptanceOptions &) {
    const LinkDiagram d = fixture("11a_263").diagram();
    const NullResult r = n_diagram(d);
    const TwistRegionReport tw = twist_region_bound(d);
    Tally t;
    t.check(r.upper == 8 && replay_witness(d, r).empty(), "n_D " + str(r.upper));
    t.check(tw.bound(0) == 7, "twist region sum " + str(tw.bound(0)));
    t.check(tw.bound(1) == r.upper, "c = 1 gives " + str(tw.bound(1)));
    std::string sizes;
    for (int p : tw.parallel_sizes) sizes += (sizes.empty() ? "" : ",") + str(p);
    return t.done("checks", "n_D " + str(r.upper) + ", regions {" + sizes + "}, A " + str(tw.antiparallel) + ", S " +
                                str(tw.singles) + ", sum " + str(tw.bound(0)));
}

MontesinosParams random_montesinos(std::mt19937_64 &rng) {
    const int t = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Fraction> fs;
    for (int i = 0; i < t; ++i) {
        const long long a = std::uniform_int_distribution<int>(2, 9)(rng);
        long long b;
        do b = std::uniform_int_distribution<long long>(1, a - 1)(rng);
        while (std::gcd(a, b) != 1);
        fs.push_back({rng() % 2 ? -b : b, a});
    }
    MontesinosParams m = montesinos_from_fractions(fs, std::uniform_int_distribution<int>(-3, 3)(rng));
    for (int k = 0; k < 5; ++k) m.flip.push_back(rng() % 2 == 1);
    return m;
}

Outcome montesinos_formula(const AcceptanceOptions &opt) {
    std::mt19937_64 rng(opt.seed + 7);
    Tally t;
    for (int trial = 0; trial < 200; ++trial) {
        const MontesinosParams m = random_montesinos(rng);
        const MontesinosDiagram d = build_montesinos(m);
        const int s = seifert_circles(d.built.diagram).circle_count, f = montesinos_seifert_count(d, m);
        t.check(f == s, montesinos_to_json(m).dump() + ": formula " + str(f) + " vs " + str(s));
    }
    return t.done("instances");
}

Outcome twobridge_signature(const AcceptanceOptions &opt) {
    std::vector<Fraction> fs;
    for (long long p = 3; p <= 25; p += 2)
        for (long long q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1) fs.push_back({p, q});
    Tally t;
    parallel_for(static_cast<int>(fs.size()), opt.jobs, [&](int i) {
        const Fraction f = fs[static_cast<std::size_t>(i)];
        const int formula = fourplat_signature(f);
        const int direct = signature(fourplat_diagram(fraction_to_canonical_vector(f)));
        t.check(formula == direct, f.to_string() + ": " + str(formula) + " vs " + str(direct));
    });
    return t.done("fractions");
}

Outcome writhe_identity(const AcceptanceOptions &opt) {
    const auto set = reduced_alternating(8);
    Tally t;
    parallel_for(static_cast<int>(set.size()), opt.jobs, [&](int i) {
        const NullWrithe w = nullification_writhe(set[static_cast<std::size_t>(i)]->diagram());
        t.check(w.holds(), set[static_cast<std::size_t>(i)]->name + ": sigma " + str(w.signature) + ", writhe " + str(w.writhe));
    });
    return t.done("fixtures");
}

Outcome null_one_table(const AcceptanceOptions &opt) {
    const NullOneTable table = enumerate_null_one(12, 12, opt.jobs);
    Tally t;
    for (const NullOneRecord &r : table.records)
        if (r.crossing_number <= 12) t.check(r.verified, r.derived.to_string() + " not verified");
    const int verified = t.checked();
    for (std::size_t i = 0; i < table.records.size(); ++i)
        for (std::size_t j = i + 1; j < table.records.size(); ++j)
            t.check(!null_one_equivalent(table.records[i], table.records[j]),
                    table.records[i].derived.to_string() + " repeats " + table.records[j].derived.to_string());
    bool six_one = false;
    for (const NullOneRecord &r : enumerate_null_one(6, 0).records)
        six_one = six_one || fourplat_equals_up_to_mirror(r.derived, {9, 4});
    t.check(six_one, "9/4 missing at max_cr 6");
    return t.done("checks", str(verified) + " records verified");
}

Outcome bound_suite(const AcceptanceOptions &opt) {
    const auto &all = default_fixtures();
    Tally t;
    std::atomic<int> pinned{0};
    parallel_for(static_cast<int>(all.size()), opt.jobs, [&](int i) {
        const FixtureRecord &rec = all[static_cast<std::size_t>(i)];
        const NullResult r = n_general_interval(rec.diagram());
        const BoundsReport b = check_bounds(rec, r);
        const int sig = rec.signature ? std::abs(*rec.signature) : 0;
        t.check(b.ok && !r.upper_exceeded && sig <= r.upper,
                rec.name + ": sigma " + str(sig) + ", interval [" + str(r.lower) + "," + str(r.upper) + "]");
        if (rec.components == 1 && rec.signature && rec.unknotting_number && sig == 2 * *rec.unknotting_number) {
            ++pinned;
            t.check(r.exact() && r.upper == sig, rec.name + ": interval [" + str(r.lower) + "," + str(r.upper) +
                                                     "] does not collapse to " + str(sig));
        }
    });
    return t.done("checks", str(pinned.load()) + " fixtures with |sigma| = 2u");
}

LinkDiagram random_braid(std::mt19937_64 &rng, int max_len) {
    const int strands = std::uniform_int_distribution<int>(2, 5)(rng);
    const int len = std::uniform_int_distribution<int>(1, max_len)(rng);
    std::vector<int> word;
    for (int i = 0; i < len; ++i) {
        const int g = std::uniform_int_distribution<int>(1, strands - 1)(rng);
        word.push_back(rng() % 2 ? g : -g);
    }
    return braid_closure(strands, word);
}

Outcome properties(const AcceptanceOptions &opt) {
    std::mt19937_64 rng(opt.seed + 12);
    Tally t;
    const auto &all = default_fixtures();
    int pairs = 0;
    while (pairs < 1000) {
        const LinkDiagram d = rng() % 2 ? all[rng() % all.size()].diagram() : random_braid(rng, 14);
        if (d.crossing_count() == 0) continue;
        const int c = static_cast<int>(rng() % static_cast<unsigned>(d.crossing_count()));
        const LinkDiagram s = smooth(d, c);
        ++pairs;
        t.check(std::abs(s.component_count() - d.component_count()) == 1, serialize_pd(d) + " at " + str(c) + ": components");
        t.check(seifert_circles(s).circle_count == seifert_circles(d).circle_count,
                serialize_pd(d) + " at " + str(c) + ": Seifert circles");
    }

    const LaurentPoly1 delta = -(LaurentPoly1::monomial(1, 1) + LaurentPoly1::monomial(1, -1));
    for (int k = 1; k <= 6; ++k) {
        t.check(jones(LinkDiagram::unlink(k)) == delta.pow(static_cast<unsigned>(k - 1)), "Jones of the " + str(k) + "-unlink");
        std::vector<int> word;
        for (int g = 1; g < k; ++g) word.insert(word.end(), {g, -g});
        if (k > 1) t.check(jones(braid_closure(k, word)) == unlink_jones(k), "Jones of a " + str(k) + "-unlink braid");
    }

    for (int i = 0; i < 60; ++i) {
        const LinkDiagram d = i < 30 ? all[rng() % all.size()].diagram() : random_braid(rng, 9);
        if (d.crossing_count() > 10) continue;
        t.check(jones_from_homfly(homfly(d)) == jones(d), serialize_pd(d) + ": HOMFLY and Jones disagree");
    }

    std::uniform_int_distribution<int> dim(1, 8), val(-5, 5);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = dim(rng);
        IntMatrix a(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n)));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i; j < a.size(); ++j) a[i][j] = a[j][i] = val(rng);
        const IntSymMatrix m(a);
        const auto series = signature_sigma_series(m);
        t.check(series && *series == signature_diag(m), "sigma series disagrees on " + matrix_to_json(a).dump());
    }
    return t.done("checks", "1000 smoothings, 500 matrices");
}

struct Criterion {
    const char *title;
    Outcome (*run)(const AcceptanceOptions &);
};

const std::vector<Criterion> &criteria() {
    static const std::vector<Criterion> all{
        {"exhaustive n_D equals Cr - s + 1 on reduced alternating fixtures up to 7 crossings", alternating_search},
        {"HOMFLY max z-degree equals Cr - s + 1 on the same fixtures", homfly_degree},
        {"8_20 curated diagrams: n_D(M) = 1, n_D(N) = 2", curated_820},
        {"10_22 as (1,2,3,1,3): n_d = 6, general upper 1 with witness, signature 0", family_1022},
        {"T(3,3) with one component reversed: general upper 1", torus_reversed},
        {"11a_263: n_D = 8, twist region sum 7 with c = 1", eleven_a263},
        {"Montesinos Seifert circle formula on 200 seeded instances", montesinos_formula},
        {"2-bridge signature formula against Seifert matrices, p <= 25", twobridge_signature},
        {"signature plus writhe of a minimal nullifying set is 0, alternating fixtures up to 8 crossings", writhe_identity},
        {"null-one enumeration: verified up to 12 crossings, deduplicated mod p^2, 9/4 at max_cr 6", null_one_table},
        {"|signature| bounds the general interval; |signature| = 2u collapses it", bound_suite},
        {"property suites: smoothing, unlink Jones, HOMFLY to Jones, sigma series", properties},
    };
    return all;
}

} // namespace

int criterion_count() { return static_cast<int>(criteria().size()); }

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &opt,
                                            const std::function<void(const CriterionResult &)> &each) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= criterion_count(); ++id) {
        if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
        const Criterion &c = criteria()[static_cast<std::size_t>(id - 1)];
        CriterionResult r;
        r.id = id;
        r.title = c.title;
        const auto start = std::chrono::steady_clock::now();
        try {
            const Outcome o = c.run(opt);
            r.pass = o.pass;
            r.detail = o.detail;
        } catch (const std::exception &e) {
            r.pass = false;
            r.detail = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (each) each(r);
        out.push_back(r);
    }
    return out;
}

std::string format_line(const CriterionResult &r, bool timing) {
    std::string line = std::string(r.pass ? "PASS" : "FAIL") + " " + (r.id < 10 ? " " : "") + std::to_string(r.id) + "  " +
                       r.title + " (tolerance 0): " + r.detail;
    if (!timing) return line;
    char secs[32];
    std::snprintf(secs, sizeof secs, " [%.1f s]", r.seconds);
    return line + secs;
}

} // namespace nullify
