#include "nullify/seifert.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace nullify {

using Rational = boost::multiprecision::cpp_rational;

IntSymMatrix::IntSymMatrix(IntMatrix rows) : rows_(std::move(rows)) {
    const std::size_t n = rows_.size();
    for (const auto &r : rows_)
        if (r.size() != n) throw std::invalid_argument("matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (rows_[i][j] != rows_[j][i]) throw std::invalid_argument("matrix is not symmetric");
}

IntSymMatrix IntSymMatrix::symmetrized(const IntMatrix &m) {
    IntMatrix a = m;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) a[i][j] = m[i][j] + m[j][i];
    return IntSymMatrix(std::move(a));
}

namespace {

int circle_at(const LinkDiagram &d, const SeifertDecomposition &sd, int dart) {
    const int label = d.crossing(dart / 4).e[static_cast<std::size_t>(dart % 4)];
    return sd.circle_of_edge[static_cast<std::size_t>(label)];
}

int smoothing_partner(const Crossing &x, int slot) {
    if (x.sign > 0) return slot ^ 1;
    return 3 - slot;
}

} // namespace

LinkDiagram braid_like(const LinkDiagram &input, int *moves) {
    LinkDiagram d = input;
    int count = 0;
    const int limit = 8 * input.crossing_count() + 256;
    for (;;) {
        const SeifertDecomposition sd = seifert_circles(d);
        int over = -1, under = -1;
        for (const auto &f : d.faces()) {
            for (std::size_t i = 0; i < f.size() && over < 0; ++i) {
                for (std::size_t j = i + 1; j < f.size(); ++j) {
                    const int a = f[i], b = f[j];
                    if (circle_at(d, sd, a) == circle_at(d, sd, b)) continue;
                    const bool sa = d.crossing(a / 4).incoming(a % 4);
                    const bool sb = d.crossing(b / 4).incoming(b % 4);
                    if (sa != sb) continue;
                    over = a;
                    under = b;
                    break;
                }
            }
            if (over >= 0) break;
        }
        if (over < 0) break;
        if (++count > limit) throw DiagramError("Vogel moves did not terminate");
        d = r2_push(d, over, under);
    }
    if (moves) *moves = count;
    return d;
}

BraidWord read_braid(const LinkDiagram &d) {
    if (d.piece_count() + d.free_loops() > 1) throw DiagramError("cannot read a braid from a split diagram");
    const int n = d.crossing_count();
    if (n == 0) return BraidWord{1, {}};
    const SeifertDecomposition sd = seifert_circles(d);
    const int s = sd.circle_count;

    std::vector<std::set<int>> nbr(static_cast<std::size_t>(s));
    for (int c = 0; c < n; ++c) {
        const int a = sd.circle_of_dart[static_cast<std::size_t>(4 * c)];
        const int b = sd.circle_of_dart[static_cast<std::size_t>(4 * c + 2)];
        nbr[static_cast<std::size_t>(a)].insert(b);
        nbr[static_cast<std::size_t>(b)].insert(a);
    }
    int start = -1;
    for (int v = 0; v < s; ++v) {
        if (nbr[static_cast<std::size_t>(v)].size() > 2) throw DiagramError("diagram is not braid-like");
        if (nbr[static_cast<std::size_t>(v)].size() == 1) start = v;
    }
    if (start < 0) throw DiagramError("diagram is not braid-like");
    std::vector<int> pos(static_cast<std::size_t>(s), -1);
    for (int v = start, prev = -1, k = 0; v >= 0; ++k) {
        pos[static_cast<std::size_t>(v)] = k;
        int next = -1;
        for (int w : nbr[static_cast<std::size_t>(v)])
            if (w != prev && pos[static_cast<std::size_t>(w)] < 0) next = w;
        prev = v;
        v = next;
    }
    for (int v = 0; v < s; ++v)
        if (pos[static_cast<std::size_t>(v)] < 0) throw DiagramError("diagram is not braid-like");

    auto circles_of_face = [&](int f) {
        std::set<int> out;
        for (int dart : d.faces()[static_cast<std::size_t>(f)]) out.insert(pos[static_cast<std::size_t>(circle_at(d, sd, dart))]);
        return out;
    };
    int cur = -1;
    for (int f = 0; f < d.face_count() && cur < 0; ++f)
        if (circles_of_face(f) == std::set<int>{0}) cur = f;
    if (cur < 0) throw DiagramError("diagram is not braid-like");

    // cut every circle where a ray from the innermost face crosses it
    std::vector<int> cut(static_cast<std::size_t>(s), -1);
    for (int k = 0; k < s; ++k) {
        int dart = -1;
        for (int x : d.faces()[static_cast<std::size_t>(cur)])
            if (pos[static_cast<std::size_t>(circle_at(d, sd, x))] == k) {
                dart = x;
                break;
            }
        if (dart < 0) throw DiagramError("diagram is not braid-like");
        cut[static_cast<std::size_t>(k)] = d.crossing(dart / 4).e[static_cast<std::size_t>(dart % 4)];
        if (k + 1 < s) {
            const Dart q = d.opposite(dart / 4, dart % 4);
            cur = d.face_of(q.crossing, q.slot);
            if (circles_of_face(cur) != std::set<int>{k, k + 1}) throw DiagramError("diagram is not braid-like");
        }
    }

    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < s; ++k) {
        const int e0 = cut[static_cast<std::size_t>(k)];
        int e = e0, prev = -1;
        do {
            const Dart h = d.head(e);
            if (prev >= 0) {
                succ[static_cast<std::size_t>(prev)].push_back(h.crossing);
                ++indeg[static_cast<std::size_t>(h.crossing)];
            }
            prev = h.crossing;
            const Crossing &x = d.crossing(h.crossing);
            e = x.e[static_cast<std::size_t>(smoothing_partner(x, h.slot))];
        } while (e != e0);
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int c = 0; c < n; ++c)
        if (indeg[static_cast<std::size_t>(c)] == 0) ready.push(c);
    BraidWord out;
    out.strands = s;
    while (!ready.empty()) {
        const int c = ready.top();
        ready.pop();
        const int a = pos[static_cast<std::size_t>(sd.circle_of_dart[static_cast<std::size_t>(4 * c)])];
        const int b = pos[static_cast<std::size_t>(sd.circle_of_dart[static_cast<std::size_t>(4 * c + 2)])];
        if (std::abs(a - b) != 1) throw DiagramError("diagram is not braid-like");
        out.letters.push_back(d.crossing(c).sign * (std::min(a, b) + 1));
        for (int w : succ[static_cast<std::size_t>(c)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
    if (static_cast<int>(out.letters.size()) != n) throw DiagramError("crossing order around the braid axis is cyclic");
    return out;
}

BraidWord braid_word(const LinkDiagram &d, int *moves) { return read_braid(braid_like(d, moves)); }

IntMatrix braid_seifert_matrix(const BraidWord &b) {
    struct Loop {
        int level, p, q;
    };
    std::vector<std::vector<int>> occ(static_cast<std::size_t>(std::max(b.strands, 1)));
    for (int i = 0; i < static_cast<int>(b.letters.size()); ++i) {
        const int g = std::abs(b.letters[static_cast<std::size_t>(i)]);
        if (g < 1 || g >= b.strands) throw std::invalid_argument("braid letter out of range");
        occ[static_cast<std::size_t>(g)].push_back(i);
    }
    std::vector<Loop> loops;
    for (int g = 1; g < b.strands; ++g) {
        const auto &o = occ[static_cast<std::size_t>(g)];
        for (std::size_t j = 0; j + 1 < o.size(); ++j) loops.push_back(Loop{g, o[j], o[j + 1]});
    }
    auto eps = [&](int i) { return b.letters[static_cast<std::size_t>(i)] > 0 ? 1 : -1; };
    const std::size_t m = loops.size();
    IntMatrix M(m, std::vector<long long>(m, 0));
    for (std::size_t x = 0; x < m; ++x) {
        const Loop &g = loops[x];
        M[x][x] = -(eps(g.p) + eps(g.q)) / 2;
        for (std::size_t y = 0; y < m; ++y) {
            if (x == y) continue;
            const Loop &h = loops[y];
            if (h.level == g.level && g.q == h.p) {
                // loops sharing a band
                if (eps(g.q) > 0) M[x][y] = 1;
                else M[y][x] = -1;
            } else if (h.level == g.level + 1) {
                // loops one level apart meet once on the shared disk when their bands interleave
                if (g.p < h.p && h.p < g.q && g.q < h.q) M[x][y] = -1;
                else if (h.p < g.p && g.p < h.q && h.q < g.q) M[x][y] = 1;
            }
        }
    }
    return M;
}

SeifertData seifert_matrix(const LinkDiagram &d) {
    if (d.piece_count() + d.free_loops() > 1)
        throw DiagramError("split diagram: compute the Seifert matrix of each piece separately");
    SeifertData out;
    out.seifert_circles = seifert_circles(d).circle_count;
    out.diagram_betti = d.crossing_count() - out.seifert_circles + 1;
    if (d.crossing_count() == 0) return out;
    out.braid = braid_word(d, &out.vogel_moves);
    out.matrix = braid_seifert_matrix(out.braid);
    out.betti = static_cast<int>(out.matrix.size());
    out.genus = (out.betti - d.component_count() + 1) / 2;
    return out;
}

BigInt determinant(const IntMatrix &m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

LaurentPoly1 alexander_from_seifert(const IntMatrix &m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly1::constant(1);
    std::vector<std::vector<LaurentPoly1>> a(n, std::vector<LaurentPoly1>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = LaurentPoly1::monomial(m[i][j], 2) - LaurentPoly1::constant(m[j][i]);
    LaurentPoly1 prev = LaurentPoly1::constant(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].is_zero()) ++r;
            if (r == n) return LaurentPoly1();
            std::swap(a[k], a[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divided_exactly(prev);
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

LaurentPoly1 normalize_unit(const LaurentPoly1 &p) {
    if (p.is_zero()) return p;
    LaurentPoly1 q = p.shifted(-p.min_exp());
    return q.coeff(0) < 0 ? -q : q;
}

namespace {

// signs of the pivots of a congruence diagonalization
std::pair<int, int> inertia(const IntSymMatrix &a) {
    const std::size_t n = static_cast<std::size_t>(a.size());
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a.rows()[i][j];
    int pos = 0, neg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n && piv == n; ++i)
            if (m[i][i] != 0) piv = i;
        if (piv == n) {
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (m[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) break;
            for (std::size_t c = 0; c < n; ++c) m[pi][c] += m[pj][c];
            for (std::size_t r = 0; r < n; ++r) m[r][pi] += m[r][pj];
            piv = pi;
        }
        if (piv != k) {
            std::swap(m[piv], m[k]);
            for (auto &row : m) std::swap(row[piv], row[k]);
        }
        const Rational p = m[k][k];
        (p > 0 ? pos : neg)++;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const Rational f = m[i][k] / p;
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
            m[i][k] = 0;
        }
        for (std::size_t j = k + 1; j < n; ++j) m[k][j] = 0;
    }
    return {pos, neg};
}

int sgn(const BigInt &x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

BigInt principal_minor(const IntSymMatrix &a, const std::vector<int> &idx) {
    IntMatrix sub(idx.size(), std::vector<long long>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = a.at(idx[i], idx[j]);
    return determinant(sub);
}

} // namespace

int signature_diag(const IntSymMatrix &a) {
    auto [p, n] = inertia(a);
    return p - n;
}

std::optional<int> signature_sigma_series(const IntSymMatrix &a, long budget) {
    const int n = a.size();
    auto [p, q] = inertia(a);
    const int rank = p + q;
    std::vector<int> chosen;
    std::vector<BigInt> dets{BigInt(1)};
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    long nodes = 0;
    std::function<bool()> dfs = [&]() -> bool {
        const int i = static_cast<int>(chosen.size());
        if (i == rank) return true;
        if (++nodes > budget) return false;
        std::vector<std::pair<int, BigInt>> options;
        for (int j = 0; j < n; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            chosen.push_back(j);
            BigInt det = principal_minor(a, chosen);
            chosen.pop_back();
            if (det == 0 && (dets.back() == 0 || i + 1 == rank)) continue;
            options.emplace_back(j, det);
        }
        std::stable_partition(options.begin(), options.end(), [](const auto &o) { return o.second != 0; });
        for (auto &[j, det] : options) {
            chosen.push_back(j);
            used[static_cast<std::size_t>(j)] = true;
            dets.push_back(det);
            if (dfs()) return true;
            dets.pop_back();
            used[static_cast<std::size_t>(j)] = false;
            chosen.pop_back();
            if (nodes > budget) return false;
        }
        return false;
    };
    if (!dfs()) return std::nullopt;
    int sigma = 0;
    for (std::size_t i = 1; i < dets.size(); ++i) sigma += sgn(dets[i - 1] * dets[i]);
    return sigma;
}

int signature(const LinkDiagram &d) {
    int total = 0;
    for (const auto &piece : split_pieces(d)) {
        if (piece.crossing_count() == 0) continue;
        total += signature_diag(IntSymMatrix::symmetrized(seifert_matrix(piece).matrix));
    }
    return total;
}

GenusValue genus_alternating(int n_d, int components) {
    const int twice = n_d - components + 1;
    return GenusValue{twice, twice % 2 == 0 && twice >= 0};
}

nlohmann::json matrix_to_json(const IntMatrix &m) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &row : m) out.push_back(row);
    return out;
}

} // namespace nullify
