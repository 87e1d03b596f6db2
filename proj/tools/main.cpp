#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nullify/acceptance.hpp"
#include "nullify/enumeration.hpp"
#include "nullify/fixtures.hpp"
#include "nullify/montesinos.hpp"
#include "nullify/nullification.hpp"
#include "nullify/parallel.hpp"
#include "nullify/polynomials.hpp"
#include "nullify/rational.hpp"
#include "nullify/seifert.hpp"

using namespace nullify;
using nlohmann::json;

namespace {

// bad input: exit 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Global {
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string format = "json";
};

struct Input {
    std::string pd, gauss, file, fixture;
    int components = 1;
};

struct Budgets {
    int search_limit = 14;
    int depth = 4;
    int max_bracket = 26;
    long homfly_budget = 2000000;
    bool no_passages = false;
    bool no_bands = false;

    NullOptions null_options() const {
        NullOptions o;
        o.search_limit = search_limit;
        o.depth = depth;
        o.passages = !no_passages;
        o.bands = !no_bands;
        return o;
    }
    PolyOptions poly_options() const {
        PolyOptions o;
        o.max_bracket_crossings = max_bracket;
        o.homfly_budget = homfly_budget;
        return o;
    }
};

struct Item {
    std::string label;
    LinkDiagram diagram;
    const FixtureRecord *record = nullptr;
};

void add_input(CLI::App *sub, Input &in) {
    auto *g = sub->add_option_group("input", "exactly one diagram source");
    g->add_option("--pd", in.pd, "PD code, e.g. \"X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]\"");
    g->add_option("--gauss", in.gauss, "signed Gauss code, components separated by /");
    g->add_option("--file", in.file, "one PD or Gauss code per line; several lines make a batch");
    g->add_option("--fixture", in.fixture, "fixture name such as 8_20 or 11a263");
    g->require_option(1);
    sub->add_option("--components", in.components, "components of an empty PD code")->check(CLI::PositiveNumber);
}

void add_budgets(CLI::App *sub, Budgets &b, bool null_flags, bool poly_flags) {
    if (null_flags) {
        sub->add_option("--search-limit", b.search_limit, "largest crossing count for the subset search")
            ->check(CLI::PositiveNumber);
        sub->add_option("--depth", b.depth, "smoothings tried by the general search")->check(CLI::PositiveNumber);
        sub->add_flag("--no-passages", b.no_passages, "no crossing changes in the general search");
        sub->add_flag("--no-bands", b.no_bands, "no face bands in the general search");
    }
    if (poly_flags) {
        sub->add_option("--max-bracket", b.max_bracket, "largest diagram for the bracket state sum")
            ->check(CLI::PositiveNumber);
        sub->add_option("--homfly-budget", b.homfly_budget, "skein evaluations allowed for HOMFLY")
            ->check(CLI::PositiveNumber);
    }
}

LinkDiagram parse_code(const std::string &text, int components) {
    try {
        if (text.find('X') != std::string::npos || text.find_first_not_of(" \t") == std::string::npos)
            return parse_pd(text, components);
        return parse_gauss(text);
    } catch (const DiagramError &e) {
        throw UsageError(e.what());
    }
}

std::vector<Item> load_items(const Input &in) {
    std::vector<Item> out;
    try {
        if (!in.fixture.empty()) {
            const FixtureRecord *r = find_fixture(default_fixtures(), in.fixture);
            if (!r) throw UsageError("unknown fixture " + in.fixture);
            out.push_back({r->name, r->diagram(), r});
        } else if (!in.pd.empty() || (in.gauss.empty() && in.file.empty())) {
            out.push_back({"pd", parse_pd(in.pd, in.components), nullptr});
        } else if (!in.gauss.empty()) {
            out.push_back({"gauss", parse_gauss(in.gauss), nullptr});
        } else {
            std::ifstream f(in.file);
            if (!f) throw UsageError("cannot read " + in.file);
            std::string line;
            for (int n = 1; std::getline(f, line); ++n) {
                if (line.empty() || line[0] == '#') continue;
                out.push_back({in.file + ":" + std::to_string(n), parse_code(line, in.components), nullptr});
            }
            if (out.empty()) throw UsageError(in.file + " holds no diagrams");
        }
    } catch (const DiagramError &e) {
        throw UsageError(e.what());
    }
    return out;
}

json poly(const LaurentPoly1 &p, const char *var = "t") { return json{{"text", p.to_string(var)}, {"terms", p.to_json()}}; }
json poly(const LaurentPoly2 &p) { return json{{"text", p.to_string()}, {"terms", p.to_json()}}; }

json diagram_json(const LinkDiagram &d) {
    return json{{"pd", serialize_pd(d)},
                {"gauss", serialize_gauss(d)},
                {"crossings", d.crossing_count()},
                {"components", d.component_count()},
                {"alternating", is_alternating(d)},
                {"reduced", is_reduced(d)},
                {"writhe", d.writhe()}};
}

// runs f on every item in parallel and keeps input order
json over_items(const std::vector<Item> &items, const Global &g, const std::function<json(const Item &)> &f,
                bool &failed) {
    std::vector<json> results(items.size());
    parallel_for(static_cast<int>(items.size()), g.jobs, [&](int i) {
        const Item &it = items[static_cast<std::size_t>(i)];
        try {
            results[static_cast<std::size_t>(i)] = f(it);
        } catch (const std::exception &e) {
            results[static_cast<std::size_t>(i)] = json{{"error", e.what()}};
        }
        results[static_cast<std::size_t>(i)]["input"] = it.label;
    });
    for (const json &r : results) failed = failed || r.contains("error");
    if (items.size() == 1) return results.front();
    return json(results);
}

json cmd_parse(const std::vector<Item> &items, const Global &g, bool &failed) {
    return over_items(items, g, [](const Item &it) { return diagram_json(it.diagram); }, failed);
}

json cmd_invariants(const std::vector<Item> &items, const Global &g, const Budgets &b, bool &failed) {
    return over_items(items, g, [&](const Item &it) {
        const LinkDiagram &d = it.diagram;
        const PolyOptions po = b.poly_options();
        const LaurentPoly2 h = homfly(d, po);
        const LaurentPoly1 c = conway(h);
        const SeifertData sd = seifert_matrix(d);
        json j = diagram_json(d);
        j["jones"] = poly(jones(d, po));
        j["homfly"] = poly(h);
        j["conway"] = poly(c, "z");
        j["alexander"] = poly(alexander_from_conway(c));
        j["signature"] = signature(d);
        j["genus"] = sd.genus;
        j["seifert_circles"] = seifert_circles(d).circle_count;
        j["seifert_matrix"] = matrix_to_json(sd.matrix);
        j["max_z_degree"] = max_z_degree(h);
        return j;
    }, failed);
}

json cmd_nulldiag(const std::vector<Item> &items, const Global &g, const Budgets &b, bool &failed) {
    return over_items(items, g, [&](const Item &it) {
        const LinkDiagram &d = it.diagram;
        const NullResult r = n_diagram(d, b.null_options());
        json j = to_json(r);
        j["value"] = r.upper;
        j["crossings"] = d.crossing_count();
        j["seifert_circles"] = seifert_circles(d).circle_count;
        j["replay"] = replay_witness(d, r).empty() ? "ok" : "failed";
        if (is_alternating(d)) j["alternating_closed_form"] = n_d_alternating(d);
        j["twist_regions"] = to_json(twist_region_bound(d));
        return j;
    }, failed);
}

json cmd_nullbound(const std::vector<Item> &items, const Global &g, const Budgets &b, bool &failed) {
    return over_items(items, g, [&](const Item &it) {
        const NullResult r = n_general_interval(it.diagram, b.null_options());
        json j = to_json(r);
        j["exact"] = r.exact();
        j["replay"] = r.upper_exceeded ? "none" : (replay_witness(it.diagram, r).empty() ? "ok" : "failed");
        if (it.record) j["bounds"] = to_json(check_bounds(*it.record, r));
        return j;
    }, failed);
}

TangleVector parse_vector(const std::string &text) {
    TangleVector v;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoi(tok, &used));
            if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
        } catch (const std::logic_error &) {
            throw UsageError("bad vector entry '" + tok + "'");
        }
    }
    if (v.empty()) throw UsageError("empty vector");
    return v;
}

Fraction parse_fraction(const std::string &text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return make_fraction(std::stoll(text), 1);
        return make_fraction(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error &) {
        throw UsageError("bad fraction '" + text + "'");
    }
}

json fraction_json(Fraction f) { return json{{"p", f.p}, {"q", f.q}, {"text", f.to_string()}}; }

json cmd_fourplat(const std::string &vec_text, const std::string &frac_text, bool all, bool reverse_second) {
    TangleVector v;
    Fraction f;
    if (!vec_text.empty()) {
        v = parse_vector(vec_text);
        try {
            f = cf_to_fraction(v);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    } else {
        f = parse_fraction(frac_text);
        if (f.p == 0) throw UsageError("the fraction must have a nonzero numerator");
        v = fraction_to_canonical_vector(f);
    }
    const LinkDiagram d = fourplat_diagram(v, reverse_second);
    json j{{"vector", v}, {"fraction", fraction_json(f)}, {"components", d.component_count()}};
    j["canonical_vector"] = fraction_to_canonical_vector(f);
    j["n_d"] = fourplat_nd(fraction_to_canonical_vector(f), reverse_second);
    j["signature"] = std::llabs(f.p) % 2 ? json(fourplat_signature(f)) : json(signature(d));
    if (!all) return j;
    j["diagram"] = diagram_json(d);
    j["classification"] = classification_to_json(classify_parallel_antiparallel(v, reverse_second));
    j["seifert_circles"] = seifert_circles(d).circle_count;
    const TangleVector canon = fraction_to_canonical_vector(f);
    j["crossing_number"] = std::accumulate(canon.begin(), canon.end(), 0);
    j["diagram_signature"] = signature(d);
    if (std::llabs(f.p) % 2) {
        const TangleVector even = even_expansion(f);
        j["even_expansion"] = even;
        bool alternates = !even.empty();
        for (std::size_t i = 1; i < even.size(); ++i) alternates = alternates && (even[i] > 0) != (even[i - 1] > 0);
        if (alternates) j["crossing_number_formula"] = fourplat_crossing_number(even);
        j["signature_formula"] = fourplat_signature(f);
    }
    if (is_alternating(d)) {
        j["genus"] = json{{"twice", genus_alternating(n_d_alternating(d), d.component_count()).twice}};
    }
    return j;
}

json montesinos_report(const MontesinosParams &m) {
    const MontesinosDiagram d = build_montesinos(m);
    const int direct = seifert_circles(d.built.diagram).circle_count, formula = montesinos_seifert_count(d, m);
    json j = montesinos_to_json(m);
    j["type"] = to_string(montesinos_type(d));
    j["c"] = montesinos_c(d, m);
    j["crossings"] = d.built.diagram.crossing_count();
    j["components"] = d.built.diagram.component_count();
    j["seifert_formula"] = formula;
    j["seifert_direct"] = direct;
    j["agree"] = formula == direct;
    j["nd_bound"] = montesinos_nd_bound(d, m);
    j["pd"] = serialize_pd(d.built.diagram);
    return j;
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
    return montesinos_from_fractions(fs, std::uniform_int_distribution<int>(-3, 3)(rng));
}

std::string cache_dir() {
    if (const char *e = std::getenv("NULLIFY_CACHE_DIR")) return e;
    if (const char *x = std::getenv("XDG_CACHE_HOME")) return std::string(x) + "/nullify";
    if (const char *h = std::getenv("HOME")) return std::string(h) + "/.cache/nullify";
    return ".nullify-cache";
}

json table_json(const NullOneTable &t) {
    json records = json::array();
    for (const NullOneRecord &r : t.records)
        records.push_back({{"source", fraction_json(r.source)},
                           {"source_vector", r.source_vector},
                           {"epsilon", r.epsilon},
                           {"derived", fraction_json(r.derived)},
                           {"derived_vector", r.derived_vector},
                           {"crossing_number", r.crossing_number},
                           {"verified", r.verified},
                           {"mirror_of_earlier", r.mirror_of_earlier}});
    json counts = json::object();
    for (auto [cr, n] : t.count_by_crossings) counts[std::to_string(cr)] = n;
    return json{{"records", records}, {"count_by_crossings", counts}};
}

int run_verify(const std::vector<int> &only, const Global &g) {
    AcceptanceOptions opt;
    opt.seed = g.seed;
    opt.jobs = g.jobs;
    opt.only = only;
    int failed = 0;
    json out = json::array();
    run_acceptance(opt, [&](const CriterionResult &r) {
        failed += !r.pass;
        if (g.format == "text")
            std::cout << format_line(r, false) << std::endl;
        else
            out.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    });
    if (g.format != "text") std::cout << json{{"criteria", out}, {"passed", failed == 0}}.dump(2) << '\n';
    return failed ? 1 : 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"nullification numbers of knot and link diagrams"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file; flags on the command line win");
    Global g;
    app.add_option("--seed", g.seed, "seed for random instances")->capture_default_str();
    app.add_option("--jobs", g.jobs, "worker threads for batch inputs")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text", "csv"}))->capture_default_str();

    Input in;
    Budgets b;

    auto *parse = app.add_subcommand("parse", "validate a diagram and print it as PD and Gauss code");
    add_input(parse, in);

    auto *inv = app.add_subcommand("invariants", "Jones, HOMFLY, Conway, signature, genus, Seifert circles, writhe");
    add_input(inv, in);
    add_budgets(inv, b, false, true);

    auto *nulldiag = app.add_subcommand("nulldiag", "n_D of the given diagram by subset search");
    add_input(nulldiag, in);
    add_budgets(nulldiag, b, true, false);

    auto *nullbound = app.add_subcommand("nullbound", "interval for the general nullification number");
    add_input(nullbound, in);
    add_budgets(nullbound, b, true, false);

    std::string vec_text, frac_text;
    bool all = false, reverse_second = false;
    auto *fourplat = app.add_subcommand("fourplat", "closed forms for a 4-plat");
    auto *src = fourplat->add_option_group("source");
    src->add_option("--vector", vec_text, "twist vector a_1,...,a_n");
    src->add_option("--fraction", frac_text, "p/q");
    src->require_option(1);
    fourplat->add_flag("--all", all, "every closed form and the built diagram");
    fourplat->add_flag("--reverse-second", reverse_second, "reverse the second component of a 2-component 4-plat");

    std::string mont_json, mont_fracs;
    int mont_e = 0, mont_random = 0;
    auto *mont = app.add_subcommand("montesinos", "build a Montesinos diagram and check the Seifert circle formula");
    auto *msrc = mont->add_option_group("source");
    msrc->add_option("--json", mont_json, "JSON file with tangles or fractions and e");
    msrc->add_option("--fractions", mont_fracs, "comma separated b/a with 0 < |b| < a");
    msrc->add_option("--random", mont_random, "this many seeded random instances")->check(CLI::PositiveNumber);
    msrc->require_option(1);
    mont->add_option("--e", mont_e, "extra half twists");

    int max_cr = 12, verify_up_to = 12;
    std::vector<int> count_mk;
    std::string family;
    int fam_a = 1, fam_b = 1;
    bool no_cache = false;
    auto *en = app.add_subcommand("enumerate", "nullification-number-one tables, families and counts");
    auto *what = en->add_option_group("what");
    what->add_option("--max-cr", max_cr, "largest derived crossing number")->check(CLI::Range(2, 24));
    what->add_option("--count", count_mk, "m,k: 4-plats with |signature| = k")->expected(2)->delimiter(',');
    what->add_option("--family", family, "A or B")->check(CLI::IsMember({"A", "B"}));
    what->require_option(0, 1);
    en->add_option("--verify-up-to", verify_up_to, "engine-verify records up to this crossing number")
        ->check(CLI::NonNegativeNumber);
    en->add_option("--a", fam_a, "family parameter a")->check(CLI::PositiveNumber);
    en->add_option("--b", fam_b, "family parameter b")->check(CLI::PositiveNumber);
    en->add_flag("--no-cache", no_cache, "ignore and do not write the table cache");
    add_budgets(en, b, true, false);

    std::vector<int> only;
    auto *verify = app.add_subcommand("verify", "run the acceptance criteria");
    verify->add_option("--only", only, "criterion ids")->check(CLI::Range(1, criterion_count()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (g.format == "csv" && !(en->parsed() && count_mk.empty() && family.empty()))
            throw UsageError("csv output is only available for the enumerate table");
        bool failed = false;
        json out;
        if (parse->parsed()) {
            out = cmd_parse(load_items(in), g, failed);
        } else if (inv->parsed()) {
            out = cmd_invariants(load_items(in), g, b, failed);
        } else if (nulldiag->parsed()) {
            out = cmd_nulldiag(load_items(in), g, b, failed);
        } else if (nullbound->parsed()) {
            out = cmd_nullbound(load_items(in), g, b, failed);
        } else if (fourplat->parsed()) {
            out = cmd_fourplat(vec_text, frac_text, all, reverse_second);
        } else if (mont->parsed()) {
            std::vector<MontesinosParams> ms;
            try {
                if (!mont_json.empty()) {
                    std::ifstream f(mont_json);
                    if (!f) throw UsageError("cannot read " + mont_json);
                    ms.push_back(montesinos_from_json(json::parse(f)));
                } else if (!mont_fracs.empty()) {
                    std::vector<Fraction> fs;
                    std::stringstream ss(mont_fracs);
                    for (std::string tok; std::getline(ss, tok, ',');) {
                        const auto slash = tok.find('/');
                        if (slash == std::string::npos) throw UsageError("bad fraction '" + tok + "'");
                        fs.push_back({std::stoll(tok.substr(0, slash)), std::stoll(tok.substr(slash + 1))});
                    }
                    ms.push_back(montesinos_from_fractions(fs, mont_e));
                } else {
                    std::mt19937_64 rng(g.seed);
                    for (int i = 0; i < mont_random; ++i) ms.push_back(random_montesinos(rng));
                }
                for (const MontesinosParams &m : ms) validate(m);
            } catch (const UsageError &) {
                throw;
            } catch (const std::exception &e) {
                throw UsageError(e.what());
            }
            std::vector<json> rs(ms.size());
            parallel_for(static_cast<int>(ms.size()), g.jobs,
                         [&](int i) { rs[static_cast<std::size_t>(i)] = montesinos_report(ms[static_cast<std::size_t>(i)]); });
            for (const json &r : rs) failed = failed || !r["agree"].get<bool>();
            out = rs.size() == 1 ? rs.front() : json(rs);
        } else if (en->parsed()) {
            if (!count_mk.empty()) {
                try {
                    out = json{{"m", count_mk[0]},
                               {"k", count_mk[1]},
                               {"ordered", count_high_null(count_mk[0], count_mk[1])},
                               {"unordered", count_high_null_unordered(count_mk[0], count_mk[1])}};
                } catch (const std::invalid_argument &e) {
                    throw UsageError(e.what());
                }
            } else if (!family.empty()) {
                const Family kind = family == "A" ? Family::A : Family::B;
                const NullResult r = verify_family(kind, fam_a, fam_b, b.null_options());
                const TangleVector sv = family_standard_vector(kind, fam_a, fam_b);
                out = json{{"family", family},
                           {"a", fam_a},
                           {"b", fam_b},
                           {"vector", family_vector(kind, fam_a, fam_b)},
                           {"standard_vector", sv},
                           {"fraction", fraction_json(cf_to_fraction(sv))},
                           {"interval", to_json(r)}};
                failed = r.upper_exceeded || r.upper != 1;
            } else {
                const std::string key = "null_one_" + std::to_string(max_cr) + "_" + std::to_string(verify_up_to);
                const std::filesystem::path cached = std::filesystem::path(cache_dir()) / (key + ".json");
                json table;
                if (!no_cache && std::filesystem::exists(cached)) {
                    std::ifstream f(cached);
                    table = json::parse(f, nullptr, false);
                }
                if (table.is_discarded() || table.is_null()) {
                    table = table_json(enumerate_null_one(max_cr, verify_up_to, g.jobs));
                    if (!no_cache) {
                        std::error_code ec;
                        std::filesystem::create_directories(cached.parent_path(), ec);
                        std::ofstream(cached) << table.dump();
                    }
                }
                for (const json &r : table["records"])
                    failed = failed || (r["crossing_number"].get<int>() <= verify_up_to && !r["verified"].get<bool>());
                if (g.format == "csv") {
                    std::cout << "p,q,epsilon,derived_p,derived_q,vector,crossing_number,verified\n";
                    for (const json &r : table["records"]) {
                        std::cout << r["source"]["p"] << ',' << r["source"]["q"] << ',' << r["epsilon"] << ','
                                  << r["derived"]["p"] << ',' << r["derived"]["q"] << ",\"(";
                        const auto &v = r["derived_vector"];
                        for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
                        std::cout << ")\"," << r["crossing_number"] << ',' << (r["verified"].get<bool>() ? "true" : "false")
                                  << '\n';
                    }
                    return failed ? 1 : 0;
                }
                out = table;
                out["max_cr"] = max_cr;
                out["verify_up_to"] = verify_up_to;
            }
        } else if (verify->parsed()) {
            return run_verify(only, g);
        }
        if (g.format == "text" && out.is_object() && out.contains("value"))
            std::cout << out["value"] << '\n';
        else
            std::cout << out.dump(2) << '\n';
        return failed ? 1 : 0;
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "failed: " << e.what() << '\n';
        return 1;
    }
}
