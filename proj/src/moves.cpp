#include "nullify/diagram.hpp"

#include <algorithm>
#include <set>

namespace nullify {

namespace {

struct End {
    int label;
    double angle;
    bool over;
    bool incoming;
};

// Assemble a crossing from four ends given with their directions in a local picture.
Crossing assemble(std::array<End, 4> ends) {
    std::sort(ends.begin(), ends.end(), [](const End &a, const End &b) { return a.angle < b.angle; });
    int start = -1;
    for (int i = 0; i < 4; ++i)
        if (!ends[static_cast<std::size_t>(i)].over && ends[static_cast<std::size_t>(i)].incoming) start = i;
    if (start < 0) throw DiagramError("local move produced a crossing without incoming under-strand");
    Crossing x;
    std::array<End, 4> r;
    for (int i = 0; i < 4; ++i) r[static_cast<std::size_t>(i)] = ends[static_cast<std::size_t>((start + i) % 4)];
    for (int i = 0; i < 4; ++i) x.e[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)].label;
    if (r[2].over || r[2].incoming || !r[1].over || !r[3].over || r[1].incoming == r[3].incoming)
        throw DiagramError("local move produced an inconsistent crossing");
    x.sign = r[3].incoming ? 1 : -1;
    return x;
}

} // namespace

bool reduce_once(const LinkDiagram &d, LinkDiagram &out) {
    auto nug = nugatory_crossings(d);
    if (!nug.empty()) {
        out = remove_crossings(d, {nug.front()}, Pairing::Straight);
        return true;
    }
    for (const auto &f : d.faces()) {
        if (f.size() != 2) continue;
        const int p = f[0] / 4, s1 = f[0] % 4;
        const int q = f[1] / 4, s2 = f[1] % 4;
        if (p == q) continue;
        Dart o1 = d.opposite(p, s1), o2 = d.opposite(q, s2);
        const bool first_over = s1 % 2 == 1 && o1.slot % 2 == 1;
        const bool first_under = s1 % 2 == 0 && o1.slot % 2 == 0;
        const bool second_over = s2 % 2 == 1 && o2.slot % 2 == 1;
        const bool second_under = s2 % 2 == 0 && o2.slot % 2 == 0;
        if ((first_over && second_under) || (first_under && second_over)) {
            out = remove_crossings(d, {p, q}, Pairing::Straight);
            return true;
        }
    }
    return false;
}

std::vector<std::pair<int, int>> r3_candidates(const LinkDiagram &d) {
    std::vector<std::pair<int, int>> out;
    for (const auto &f : d.faces()) {
        if (f.size() != 3) continue;
        std::set<int> cs;
        for (int x : f) cs.insert(x / 4);
        if (cs.size() != 3) continue;
        for (int x : f) out.emplace_back(x / 4, x % 4);
    }
    return out;
}

bool r3_move(const LinkDiagram &d, int A, int s, LinkDiagram &out) {
    const auto slot = [](int v) { return ((v % 4) + 4) % 4; };
    const int sc = slot(s - 1), sb = slot(s);
    Dart Bd = d.opposite(A, sc), Cd = d.opposite(A, sb);
    const int B = Bd.crossing, C = Cd.crossing;
    if (A == B || B == C || A == C) return false;
    const int aB = slot(Bd.slot - 1), aC = slot(Cd.slot + 1);
    Dart chk = d.opposite(B, aB);
    if (chk.crossing != C || chk.slot != aC) return false;
    if (aB % 2 != aC % 2) return false;

    const auto &xa = d.crossing(A), &xb = d.crossing(B), &xc = d.crossing(C);
    const int la = xb.e[static_cast<std::size_t>(aB)];
    const int lb = xa.e[static_cast<std::size_t>(sb)];
    const int lc = xa.e[static_cast<std::size_t>(sc)];
    const int sx = slot(Bd.slot + 1), scB = slot(Bd.slot + 2);
    const int sy = slot(Cd.slot + 3), sbC = slot(Cd.slot + 2);
    const int scp = slot(s + 1), sbp = slot(s + 2);

    const int lx = xb.e[static_cast<std::size_t>(sx)], lcB = xb.e[static_cast<std::size_t>(scB)];
    const int ly = xc.e[static_cast<std::size_t>(sy)], lbC = xc.e[static_cast<std::size_t>(sbC)];
    const int lcp = xa.e[static_cast<std::size_t>(scp)], lbp = xa.e[static_cast<std::size_t>(sbp)];
    const bool x_in = xb.incoming(sx), cB_in = xb.incoming(scB);
    const bool y_in = xc.incoming(sy), bC_in = xc.incoming(sbC);
    const bool cp_in = xa.incoming(scp), bp_in = xa.incoming(sbp);

    const bool a_fwd = x_in;  // x -> ... -> y
    const bool c_fwd = cB_in; // cB -> ... -> c'
    const bool b_fwd = bC_in; // bC -> ... -> b'
    const bool c_over_b = sc % 2 == 1;
    const bool a_over_c = aB % 2 == 1;
    const bool a_over_b = aC % 2 == 1;

    // local picture after the move: A'=(0,1), B'=(1,2), C'=(-1,2)
    Crossing nA = assemble({End{lcB, 225.0, c_over_b, cB_in}, End{lc, 45.0, c_over_b, !c_fwd},
                            End{lbC, 315.0, !c_over_b, bC_in}, End{lb, 135.0, !c_over_b, !b_fwd}});
    Crossing nB = assemble({End{lc, 225.0, !a_over_c, c_fwd}, End{lcp, 45.0, !a_over_c, cp_in},
                            End{la, 180.0, a_over_c, a_fwd}, End{ly, 296.57, a_over_c, y_in}});
    Crossing nC = assemble({End{la, 0.0, a_over_b, !a_fwd}, End{lbp, 135.0, !a_over_b, bp_in},
                            End{lx, 243.43, a_over_b, x_in}, End{lb, 315.0, !a_over_b, b_fwd}});
    std::vector<Crossing> xs = d.crossings();
    xs[static_cast<std::size_t>(A)] = nA;
    xs[static_cast<std::size_t>(B)] = nB;
    xs[static_cast<std::size_t>(C)] = nC;
    out = LinkDiagram(std::move(xs), d.free_loops());
    return true;
}

LinkDiagram r2_push(const LinkDiagram &d, int over, int under) {
    const int c1 = over / 4, s1 = over % 4, c2 = under / 4, s2 = under % 4;
    if (c1 < 0 || c2 < 0 || c1 >= d.crossing_count() || c2 >= d.crossing_count()) throw DiagramError("unknown dart");
    if (d.face_of(c1, s1) != d.face_of(c2, s2)) throw DiagramError("darts do not share a face");
    const int l1 = d.crossing(c1).e[static_cast<std::size_t>(s1)], l2 = d.crossing(c2).e[static_cast<std::size_t>(s2)];
    if (l1 == l2) throw DiagramError("cannot push an edge onto itself");
    Dart q1 = d.opposite(c1, s1), q2 = d.opposite(c2, s2);
    const bool f1 = !d.crossing(c1).incoming(s1); // traversal agrees with orientation
    const bool f2 = !d.crossing(c2).incoming(s2);
    const int base = 4 * d.crossing_count() + 10;
    const int e1a = base, e1b = base + 1, e1c = base + 2, e2a = base + 3, e2b = base + 4, e2c = base + 5;

    std::vector<Crossing> xs = d.crossings();
    xs[static_cast<std::size_t>(c1)].e[static_cast<std::size_t>(s1)] = e1a;
    xs[static_cast<std::size_t>(q1.crossing)].e[static_cast<std::size_t>(q1.slot)] = e1c;
    xs[static_cast<std::size_t>(c2)].e[static_cast<std::size_t>(s2)] = e2a;
    xs[static_cast<std::size_t>(q2.crossing)].e[static_cast<std::size_t>(q2.slot)] = e2c;
    // the under edge runs east to west along y=0, the over edge dips below it
    Crossing X = assemble({End{e2b, 0.0, false, f2}, End{e1a, 135.0, true, f1}, End{e2c, 180.0, false, !f2},
                           End{e1b, 315.0, true, !f1}});
    Crossing Y = assemble({End{e2a, 0.0, false, f2}, End{e1c, 45.0, true, !f1}, End{e2b, 180.0, false, !f2},
                           End{e1b, 225.0, true, f1}});
    xs.push_back(X);
    xs.push_back(Y);
    return LinkDiagram(std::move(xs), d.free_loops());
}

LinkDiagram simplify(const LinkDiagram &input, const SimplifyOptions &opt) {
    LinkDiagram cur = input;
    for (int round = 0; round < opt.max_rounds; ++round) {
        LinkDiagram next;
        if (reduce_once(cur, next)) {
            cur = std::move(next);
            continue;
        }
        if (opt.r3_depth <= 0 || cur.crossing_count() < 3) break;
        bool found = false;
        std::set<std::string> visited{canonical_key(cur)};
        std::vector<LinkDiagram> frontier{cur};
        for (int depth = 0; depth < opt.r3_depth && !found; ++depth) {
            std::vector<LinkDiagram> grown;
            for (const auto &st : frontier) {
                for (auto [c, s] : r3_candidates(st)) {
                    LinkDiagram moved;
                    if (!r3_move(st, c, s, moved)) continue;
                    if (!visited.insert(canonical_key(moved)).second) continue;
                    if (reduce_once(moved, next)) {
                        cur = std::move(next);
                        found = true;
                        break;
                    }
                    grown.push_back(std::move(moved));
                }
                if (found) break;
            }
            frontier = std::move(grown);
        }
        if (!found) break;
    }
    return cur;
}

} // namespace nullify
