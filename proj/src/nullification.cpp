#include "nullify/nullification.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "nullify/seifert.hpp"

namespace nullify {

const char *to_string(NullKind k) {
    switch (k) {
    case NullKind::Diagram: return "diagram";
    case NullKind::MinimumDiagram: return "minimum_diagram";
    case NullKind::GeneralInterval: return "general_interval";
    }
    return "?";
}

nlohmann::json to_json(const NullResult &r) {
    nlohmann::json j;
    j["kind"] = to_string(r.kind);
    j["lower"] = r.lower;
    if (r.upper_exceeded)
        j["upper"] = "> " + std::to_string(r.upper);
    else
        j["upper"] = r.upper;
    j["witness"] = nlohmann::json::array();
    for (const WitnessStep &s : r.witness) {
        nlohmann::json w{{"crossing", s.crossing}, {"pd", s.diagram}, {"components_after", s.components_after}};
        if (s.r2_over >= 0) w["r2"] = {s.r2_over, s.r2_under};
        j["witness"].push_back(w);
    }
    j["certification"] = nlohmann::json::array();
    for (Triviality t : r.certification) j["certification"].push_back(to_string(t));
    return j;
}

TwistRegions twist_regions(const LinkDiagram &d) {
    const int n = d.crossing_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
    std::vector<int> par_vote(static_cast<std::size_t>(n), 0);
    for (const auto &face : d.faces()) {
        if (face.size() != 2) continue;
        const int c1 = face[0] / 4, s1 = face[0] % 4;
        const int c2 = face[1] / 4, s2 = face[1] % 4;
        if (c1 == c2) continue;
        const Dart far = d.opposite(c1, s1);
        if (far.crossing != c2) continue;
        // the side leaving c1 at s1 must change level between c1 and c2
        if ((s1 % 2 == 0) == (far.slot % 2 == 0)) continue;
        const int e1 = d.crossing(c1).e[static_cast<std::size_t>(s1)];
        const int e2 = d.crossing(c2).e[static_cast<std::size_t>(s2)];
        const bool parallel = d.head(e1).crossing == d.head(e2).crossing;
        parent[static_cast<std::size_t>(find(c1))] = find(c2);
        par_vote[static_cast<std::size_t>(c1)] = parallel ? 1 : -1;
    }
    TwistRegions out;
    out.region_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> id_of_root(static_cast<std::size_t>(n), -1);
    for (int c = 0; c < n; ++c) {
        const int r = find(c);
        if (id_of_root[static_cast<std::size_t>(r)] < 0) {
            id_of_root[static_cast<std::size_t>(r)] = static_cast<int>(out.members.size());
            out.members.emplace_back();
            out.parallel.push_back(true);
        }
        const int id = id_of_root[static_cast<std::size_t>(r)];
        out.region_of[static_cast<std::size_t>(c)] = id;
        out.members[static_cast<std::size_t>(id)].push_back(c);
    }
    for (int c = 0; c < n; ++c)
        if (par_vote[static_cast<std::size_t>(c)] < 0) out.parallel[static_cast<std::size_t>(out.region_of[static_cast<std::size_t>(c)])] = false;
    return out;
}

namespace {

bool trivial(Triviality t) { return t != Triviality::Nontrivial; }

// every region's chosen crossings are its smallest ids; smoothing any j crossings
// of one twist region gives the same link
bool canonical(const std::vector<int> &chosen, const TwistRegions &tr) {
    std::vector<int> count(tr.members.size(), 0);
    for (int c : chosen) ++count[static_cast<std::size_t>(tr.region_of[static_cast<std::size_t>(c)])];
    for (int c : chosen) {
        const auto &m = tr.members[static_cast<std::size_t>(tr.region_of[static_cast<std::size_t>(c)])];
        const auto pos = std::find(m.begin(), m.end(), c) - m.begin();
        if (pos >= count[static_cast<std::size_t>(tr.region_of[static_cast<std::size_t>(c)])]) return false;
    }
    return true;
}

// witness smoothing the given crossings of d one at a time, largest id first so
// the remaining ids stay valid
std::vector<WitnessStep> subset_witness(const LinkDiagram &d, std::vector<int> cs, std::vector<Triviality> &cert,
                                        const SimplifyOptions &opt) {
    std::sort(cs.rbegin(), cs.rend());
    std::vector<WitnessStep> out;
    LinkDiagram cur = d;
    cert.clear();
    for (int c : cs) {
        WitnessStep s;
        s.crossing = c;
        s.diagram = serialize_pd(cur);
        cur = smooth(cur, c);
        s.components_after = cur.component_count();
        out.push_back(s);
        cert.push_back(out.size() == cs.size() ? is_trivial_link(cur, opt) : Triviality::Nontrivial);
    }
    return out;
}

std::string key_of(const LinkDiagram &d) { return canonical_key(d) + "/" + std::to_string(d.free_loops()); }

int lower_bound_of(const LinkDiagram &d, const SimplifyOptions &opt) {
    const int sigma = std::abs(signature(d));
    return std::max(sigma, trivial(is_trivial_link(d, opt)) ? 0 : 1);
}

} // namespace

std::optional<Passage> find_passage(const LinkDiagram &d, int c) {
    const std::string want = key_of(switch_crossing(d, c));
    const int n = d.crossing_count();
    for (int s = 0; s < 4; ++s)
        for (int w : d.faces()[static_cast<std::size_t>(d.face_of(c, s))]) {
            if (w == 4 * c + s) continue;
            for (int order = 0; order < 2; ++order) {
                const int over = order ? w : 4 * c + s, under = order ? 4 * c + s : w;
                LinkDiagram moved;
                try {
                    moved = r2_push(d, over, under);
                } catch (const DiagramError &) {
                    continue;
                }
                for (int x : {n, n + 1})
                    if (key_of(smooth(smooth(moved, x), c)) == want) return Passage{moved, over, under, x};
            }
        }
    return std::nullopt;
}

NullResult n_diagram(const LinkDiagram &d, const NullOptions &opt) {
    const int n = d.crossing_count();
    if (n > opt.search_limit)
        throw SearchLimitExceeded("diagram has " + std::to_string(n) + " crossings, search limit is " +
                                  std::to_string(opt.search_limit));
    const TwistRegions tr = twist_regions(d);
    NullResult r;
    r.kind = NullKind::Diagram;
    for (int k = 0; k <= n; ++k) {
        std::vector<int> pick(static_cast<std::size_t>(k));
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            if (canonical(pick, tr)) {
                const LinkDiagram s = smooth_all(d, pick);
                const Triviality t = is_trivial_link(s, opt.simplify);
                if (trivial(t)) {
                    r.lower = r.upper = k;
                    r.witness = subset_witness(d, pick, r.certification, opt.simplify);
                    if (k == 0) r.certification = {t};
                    return r;
                }
            }
            int i = k - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    throw std::logic_error("smoothing every crossing did not give a trivial link");
}

int n_d_alternating(const LinkDiagram &d) {
    if (!is_alternating(d)) throw std::invalid_argument("diagram is not alternating");
    const LinkDiagram r = reduce_alternating(d);
    if (r.crossing_count() == 0) return 0;
    return r.crossing_count() - seifert_circles(r).circle_count + 1;
}

NullResult n_general_interval(const LinkDiagram &d, const NullOptions &opt) {
    NullResult r;
    r.kind = NullKind::GeneralInterval;
    r.lower = lower_bound_of(d, opt.simplify);
    std::optional<NullResult> sub;
    if (d.crossing_count() <= opt.search_limit) sub = n_diagram(d, opt);
    if (sub && sub->upper == r.lower) {
        r.upper = sub->upper;
        r.witness = sub->witness;
        r.certification = sub->certification;
        return r;
    }

    std::unordered_set<std::string> failed;
    std::vector<WitnessStep> path;
    std::function<std::optional<Triviality>(const LinkDiagram &, int)> dfs =
        [&](const LinkDiagram &cur, int left) -> std::optional<Triviality> {
        const Triviality t = is_trivial_link(cur, opt.simplify);
        if (trivial(t)) return t;
        if (left == 0) return std::nullopt;
        const std::string key = key_of(cur) + "#" + std::to_string(left);
        if (failed.count(key)) return std::nullopt;
        if (std::abs(signature(cur)) > left) {
            failed.insert(key);
            return std::nullopt;
        }
        for (int c = 0; c < cur.crossing_count(); ++c) {
            const LinkDiagram next = simplify(smooth(cur, c), opt.simplify);
            path.push_back(WitnessStep{c, serialize_pd(cur), next.component_count()});
            if (auto got = dfs(next, left - 1)) return got;
            path.pop_back();
        }
        if (opt.passages && left >= 2)
            for (int c = 0; c < cur.crossing_count(); ++c) {
                const auto pass = find_passage(cur, c);
                if (!pass) continue;
                const LinkDiagram half = smooth(pass->diagram, pass->extra);
                const LinkDiagram next = simplify(smooth(half, c), opt.simplify);
                WitnessStep a{pass->extra, serialize_pd(pass->diagram), half.component_count(), pass->over, pass->under};
                path.push_back(a);
                path.push_back(WitnessStep{c, serialize_pd(half), next.component_count()});
                if (auto got = dfs(next, left - 2)) return got;
                path.pop_back();
                path.pop_back();
            }
        if (opt.bands) {
            const int n = cur.crossing_count();
            std::unordered_set<std::string> seen;
            for (const auto &face : cur.faces())
                for (int over : face)
                    for (int under : face) {
                        if (over == under) continue;
                        LinkDiagram moved;
                        try {
                            moved = r2_push(cur, over, under);
                        } catch (const DiagramError &) {
                            continue;
                        }
                        for (int x : {n, n + 1}) {
                            const LinkDiagram next = simplify(smooth(moved, x), opt.simplify);
                            if (!seen.insert(key_of(next)).second) continue;
                            path.push_back(WitnessStep{x, serialize_pd(moved), next.component_count(), over, under});
                            if (auto got = dfs(next, left - 1)) return got;
                            path.pop_back();
                        }
                    }
        }
        failed.insert(key);
        return std::nullopt;
    };

    const int cap = sub ? std::min(opt.depth, sub->upper - 1) : opt.depth;
    const LinkDiagram start = simplify(d, opt.simplify);
    for (int k = r.lower; k <= cap; ++k) {
        path.clear();
        if (auto t = dfs(start, k)) {
            r.upper = static_cast<int>(path.size());
            r.witness = path;
            r.certification.assign(path.size(), Triviality::Nontrivial);
            if (r.certification.empty())
                r.certification.push_back(*t);
            else
                r.certification.back() = *t;
            return r;
        }
    }
    if (sub) {
        r.upper = sub->upper;
        r.witness = sub->witness;
        r.certification = sub->certification;
        return r;
    }
    r.upper = opt.depth;
    r.upper_exceeded = true;
    return r;
}

NullResult n_restricted_upper(const std::vector<LinkDiagram> &minimum_diagrams, const NullOptions &opt) {
    if (minimum_diagrams.empty()) throw std::invalid_argument("no minimum diagrams supplied");
    std::optional<NullResult> best;
    for (const LinkDiagram &d : minimum_diagrams) {
        NullResult r = n_diagram(d, opt);
        if (!best || r.upper < best->upper) best = std::move(r);
    }
    best->kind = NullKind::MinimumDiagram;
    best->lower = lower_bound_of(minimum_diagrams.front(), opt.simplify);
    return *best;
}

std::string replay_witness(const LinkDiagram &d, const NullResult &r, const SimplifyOptions &opt) {
    if (r.upper_exceeded) return "no witness";
    if (static_cast<int>(r.witness.size()) != r.upper) return "witness length differs from the upper bound";
    if (r.witness.empty()) return trivial(is_trivial_link(d, opt)) ? "" : "empty witness on a nontrivial diagram";
    LinkDiagram expect = d;
    int comps = d.component_count();
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
        const WitnessStep &s = r.witness[i];
        const LinkDiagram here = parse_pd(s.diagram, expect.component_count());
        const std::string key = key_of(here);
        bool follows = false;
        for (const LinkDiagram &base : {expect, simplify(expect, opt)}) {
            if (s.r2_over < 0) {
                follows = follows || key_of(base) == key;
                continue;
            }
            try {
                follows = follows || key_of(r2_push(base, s.r2_over, s.r2_under)) == key;
            } catch (const DiagramError &) {
            }
        }
        if (!follows) return "step " + std::to_string(i + 1) + " does not follow from the previous one";
        if (s.crossing < 0 || s.crossing >= here.crossing_count()) return "step " + std::to_string(i + 1) + " names no crossing";
        comps = here.component_count();
        expect = smooth(here, s.crossing);
        if (std::abs(expect.component_count() - comps) != 1)
            return "step " + std::to_string(i + 1) + " does not change the component count by one";
        if (expect.component_count() != s.components_after) return "step " + std::to_string(i + 1) + " component count mismatch";
    }
    if (!trivial(is_trivial_link(expect, opt))) return "witness does not end in a trivial link";
    return "";
}

BoundsReport check_bounds(const FixtureRecord &rec, const NullResult &r) {
    BoundsReport b;
    b.name = rec.name;
    b.signature = rec.signature;
    b.unknotting = rec.unknotting_number;
    b.lower = r.lower;
    b.upper = r.upper;
    b.upper_exceeded = r.upper_exceeded;
    if (r.lower > r.upper && !r.upper_exceeded) {
        b.ok = false;
        b.notes.push_back("lower bound exceeds upper bound");
    }
    if (rec.signature && !r.upper_exceeded && std::abs(*rec.signature) > r.upper) {
        b.ok = false;
        b.notes.push_back("|signature| exceeds the nullifying witness length");
    }
    if (rec.unknotting_number && rec.components == 1) {
        const int twice_u = 2 * *rec.unknotting_number;
        if (r.lower > twice_u) {
            b.ok = false;
            b.notes.push_back("lower bound exceeds 2u");
        }
        if (!r.upper_exceeded && r.upper > twice_u) b.notes.push_back("witness longer than 2u; the interval is not tight here");
        if (rec.signature && std::abs(*rec.signature) == twice_u) b.notes.push_back("|signature| = 2u pins n = " + std::to_string(twice_u));
    }
    if (r.exact() && r.upper == 1 && rec.components == 1 && rec.signature && *rec.signature != 0) {
        b.ok = false;
        b.notes.push_back("n = 1 for a knot with nonzero signature");
    }
    return b;
}

nlohmann::json to_json(const BoundsReport &b) {
    nlohmann::json j{{"name", b.name}, {"lower", b.lower}, {"ok", b.ok}, {"notes", b.notes}};
    j["upper"] = b.upper_exceeded ? nlohmann::json("> " + std::to_string(b.upper)) : nlohmann::json(b.upper);
    j["signature"] = b.signature ? nlohmann::json(*b.signature) : nlohmann::json();
    j["unknotting_number"] = b.unknotting ? nlohmann::json(*b.unknotting) : nlohmann::json();
    return j;
}

int TwistRegionReport::bound(int c) const {
    int total = antiparallel + singles + c;
    for (int p : parallel_sizes) total += p - 1;
    return total;
}

TwistRegionReport twist_region_bound(const LinkDiagram &d) {
    const TwistRegions tr = twist_regions(d);
    TwistRegionReport out;
    for (std::size_t i = 0; i < tr.members.size(); ++i) {
        const int size = static_cast<int>(tr.members[i].size());
        if (size == 1)
            ++out.singles;
        else if (tr.parallel[i])
            out.parallel_sizes.push_back(size);
        else {
            ++out.antiparallel;
            out.antiparallel_crossings += size;
        }
    }
    std::sort(out.parallel_sizes.rbegin(), out.parallel_sizes.rend());
    return out;
}

nlohmann::json to_json(const TwistRegionReport &t) {
    return nlohmann::json{{"parallel", t.parallel_sizes},        {"antiparallel", t.antiparallel},
                          {"antiparallel_crossings", t.antiparallel_crossings}, {"singles", t.singles},
                          {"bound_c0", t.bound(0)},              {"bound_c1", t.bound(1)}};
}

NullWrithe nullification_writhe(const LinkDiagram &d, const NullOptions &opt) {
    if (!is_alternating(d) || !is_reduced(d)) throw std::invalid_argument("diagram is not reduced alternating");
    const NullResult r = n_diagram(d, opt);
    NullWrithe w;
    for (const WitnessStep &s : r.witness) w.crossings.push_back(s.crossing);
    std::sort(w.crossings.begin(), w.crossings.end());
    for (int c : w.crossings) w.writhe += d.crossing(c).sign;
    w.signature = signature(d);
    return w;
}

} // namespace nullify
