#include "nullify/polynomials.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>

namespace nullify {

namespace {

int find_root(std::vector<int> &p, int x) {
    while (p[static_cast<std::size_t>(x)] != x) {
        p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
        x = p[static_cast<std::size_t>(x)];
    }
    return x;
}

// delta = -A^2 - A^-2 in A-exponents
LaurentPoly1 bracket_delta() { return LaurentPoly1::monomial(-1, 2) + LaurentPoly1::monomial(-1, -2); }

} // namespace

LaurentPoly1 unlink_jones(int components) {
    LaurentPoly1 d = LaurentPoly1::monomial(-1, 1) + LaurentPoly1::monomial(-1, -1);
    return d.pow(static_cast<unsigned>(std::max(components - 1, 0)));
}

LaurentPoly1 jones(const LinkDiagram &d, const PolyOptions &opt) {
    const int n = d.crossing_count();
    if (n == 0) return unlink_jones(d.free_loops());
    if (n > opt.max_bracket_crossings) throw BudgetExceeded("bracket state sum limited to " + std::to_string(opt.max_bracket_crossings) + " crossings");

    std::vector<std::pair<int, int>> edge_darts;
    for (int e = 0; e < d.edge_count(); ++e) {
        Dart h = d.head(e), t = d.tail(e);
        edge_darts.emplace_back(4 * h.crossing + h.slot, 4 * t.crossing + t.slot);
    }
    // counts[a][loops] where a = number of A-smoothings
    std::vector<std::vector<std::int64_t>> counts(static_cast<std::size_t>(n + 1),
                                                  std::vector<std::int64_t>(static_cast<std::size_t>(2 * n + 2), 0));
    std::vector<int> parent(static_cast<std::size_t>(4 * n));
    const std::uint64_t states = std::uint64_t{1} << n;
    for (std::uint64_t st = 0; st < states; ++st) {
        std::iota(parent.begin(), parent.end(), 0);
        int comps = 4 * n;
        auto unite = [&](int a, int b) {
            a = find_root(parent, a);
            b = find_root(parent, b);
            if (a != b) {
                parent[static_cast<std::size_t>(b)] = a;
                --comps;
            }
        };
        for (const auto &[a, b] : edge_darts) unite(a, b);
        int acount = 0;
        for (int c = 0; c < n; ++c) {
            if ((st >> c) & 1u) {
                unite(4 * c, 4 * c + 1);
                unite(4 * c + 2, 4 * c + 3);
                ++acount;
            } else {
                unite(4 * c, 4 * c + 3);
                unite(4 * c + 1, 4 * c + 2);
            }
        }
        ++counts[static_cast<std::size_t>(acount)][static_cast<std::size_t>(comps)];
    }
    const LaurentPoly1 delta = bracket_delta();
    std::vector<LaurentPoly1> dpow{LaurentPoly1::constant(1)};
    LaurentPoly1 bracket;
    for (int a = 0; a <= n; ++a)
        for (int loops = 1; loops <= 2 * n + 1; ++loops) {
            std::int64_t k = counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(loops)];
            if (!k) continue;
            const int total = loops + d.free_loops();
            while (static_cast<int>(dpow.size()) < total) dpow.push_back(dpow.back() * delta);
            bracket += dpow[static_cast<std::size_t>(total - 1)].shifted(a - (n - a)) * LaurentPoly1::constant(k);
        }
    const int w = d.writhe();
    LaurentPoly1 norm = LaurentPoly1::monomial(w % 2 ? -1 : 1, -3 * w);
    LaurentPoly1 inA = bracket * norm;
    LaurentPoly1 out;
    for (const auto &[k, c] : inA.terms()) {
        if (k % 2) throw std::logic_error("odd A-exponent in normalized bracket");
        out.add_term(-k / 2, c);
    }
    return out;
}

LaurentPoly2 unlink_homfly(int components) {
    LaurentPoly2 f = LaurentPoly2::monomial(1, -1, -1) + LaurentPoly2::monomial(-1, 1, -1);
    return f.pow(static_cast<unsigned>(std::max(components - 1, 0)));
}

namespace {

struct HomflyEngine {
    const PolyOptions &opt;
    long calls = 0;
    std::unordered_map<std::string, LaurentPoly2> memo;

    LaurentPoly2 eval(const LinkDiagram &input) {
        if (++calls > opt.homfly_budget) throw BudgetExceeded("HOMFLY recursion budget exceeded");
        LinkDiagram d = simplify(input, SimplifyOptions{0, 100000});
        if (d.crossing_count() == 0) return unlink_homfly(d.free_loops());
        const std::string key = canonical_key(d);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        // base point: smallest edge of each component, components by that edge
        const int E = d.edge_count();
        std::vector<char> done(static_cast<std::size_t>(E), 0), visited(static_cast<std::size_t>(d.crossing_count()), 0);
        std::vector<char> bad(static_cast<std::size_t>(d.crossing_count()), 0);
        for (int e0 = 0; e0 < E; ++e0) {
            if (done[static_cast<std::size_t>(e0)]) continue;
            int e = e0;
            while (!done[static_cast<std::size_t>(e)]) {
                done[static_cast<std::size_t>(e)] = 1;
                Dart h = d.head(e);
                if (!visited[static_cast<std::size_t>(h.crossing)]) {
                    visited[static_cast<std::size_t>(h.crossing)] = 1;
                    if (h.slot % 2 == 0) bad[static_cast<std::size_t>(h.crossing)] = 1;
                }
                e = d.next_edge(e);
            }
        }
        LaurentPoly2 result, coef = LaurentPoly2::constant(1);
        LinkDiagram cur = d;
        for (int c = 0; c < cur.crossing_count(); ++c) {
            if (!bad[static_cast<std::size_t>(c)]) continue;
            LaurentPoly2 p0 = eval(smooth(cur, c));
            if (cur.crossing(c).sign > 0) {
                result += coef * LaurentPoly2::monomial(1, 1, 1) * p0;
                coef = coef * LaurentPoly2::monomial(1, 2, 0);
            } else {
                result += coef * LaurentPoly2::monomial(-1, -1, 1) * p0;
                coef = coef * LaurentPoly2::monomial(1, -2, 0);
            }
            cur = switch_crossing(cur, c);
        }
        result += coef * unlink_homfly(d.component_count());
        memo.emplace(key, result);
        return result;
    }
};

} // namespace

LaurentPoly2 homfly(const LinkDiagram &d, const PolyOptions &opt) {
    HomflyEngine eng{opt, 0, {}};
    return eng.eval(d);
}

LaurentPoly1 conway(const LaurentPoly2 &p) {
    LaurentPoly1 out;
    for (const auto &[k, c] : p.terms()) out.add_term(2 * k.second, c);
    return out;
}

int max_z_degree(const LaurentPoly2 &p) {
    int best = kNoDegree;
    for (const auto &[k, c] : p.terms()) best = std::max(best, k.second);
    return best;
}

namespace {
LaurentPoly1 z_as_t() { return LaurentPoly1::monomial(1, 1) + LaurentPoly1::monomial(-1, -1); }
} // namespace

LaurentPoly1 jones_from_homfly(const LaurentPoly2 &p) {
    if (p.is_zero()) return {};
    int zmin = 0;
    for (const auto &[k, c] : p.terms()) zmin = std::min(zmin, k.second);
    const LaurentPoly1 z = z_as_t();
    LaurentPoly1 num;
    for (const auto &[k, c] : p.terms())
        num += LaurentPoly1::monomial(c, 2 * k.first) * z.pow(static_cast<unsigned>(k.second - zmin));
    return num.divided_exactly(z.pow(static_cast<unsigned>(-zmin)));
}

LaurentPoly1 alexander_from_conway(const LaurentPoly1 &c) {
    if (c.is_zero()) return {};
    const LaurentPoly1 z = z_as_t();
    LaurentPoly1 out;
    for (const auto &[e, coef] : c.terms()) {
        if (e < 0 || e % 2) throw std::domain_error("Conway polynomial must have non-negative integer z powers");
        out += z.pow(static_cast<unsigned>(e / 2)) * LaurentPoly1::constant(coef);
    }
    return out;
}

const char *to_string(Triviality t) {
    switch (t) {
    case Triviality::ExactTrivial: return "exact_trivial";
    case Triviality::PolyTrivial: return "poly_trivial";
    case Triviality::Nontrivial: return "nontrivial";
    }
    return "?";
}

Triviality is_trivial_link(const LinkDiagram &d, const SimplifyOptions &opt) {
    LinkDiagram s = simplify(d, opt);
    if (s.crossing_count() == 0) return Triviality::ExactTrivial;
    if (jones(s) == unlink_jones(d.component_count())) return Triviality::PolyTrivial;
    return Triviality::Nontrivial;
}

} // namespace nullify
