#include "nullify/tangle_builder.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace nullify {

TangleBuilder::Ends TangleBuilder::zero() {
    const int a = fresh(), b = fresh();
    return Ends{a, a, b, b};
}

TangleBuilder::Ends TangleBuilder::infinity() {
    const int a = fresh(), b = fresh();
    return Ends{a, b, a, b};
}

void TangleBuilder::twist_h(Ends &t, int sign, int box) {
    const int ne = fresh(), se = fresh();
    if (sign > 0)
        pieces_.push_back(Piece{{t.ne, t.se, se, ne}, {3, 5, 7, 1}, box, false});
    else
        pieces_.push_back(Piece{{t.se, se, ne, t.ne}, {5, 7, 1, 3}, box, false});
    t.ne = ne;
    t.se = se;
}

void TangleBuilder::twist_v(Ends &t, int sign, int box) {
    const int sw = fresh(), se = fresh();
    if (sign > 0)
        pieces_.push_back(Piece{{t.sw, sw, se, t.se}, {3, 5, 7, 1}, box, true});
    else
        pieces_.push_back(Piece{{t.se, t.sw, sw, se}, {1, 3, 5, 7}, box, true});
    t.sw = sw;
    t.se = se;
}

TangleBuilder::Ends TangleBuilder::rational(const std::vector<int> &v, int first_box) {
    const int n = static_cast<int>(v.size());
    // a_n is horizontal, so a_1 is horizontal exactly when n is odd
    Ends t = (n % 2 == 1) ? zero() : infinity();
    for (int j = 0; j < n; ++j) {
        const bool horizontal = (n - 1 - j) % 2 == 0;
        const int a = v[static_cast<std::size_t>(j)];
        for (int k = 0; k < std::abs(a); ++k) {
            if (horizontal) twist_h(t, a > 0 ? 1 : -1, first_box + j);
            else twist_v(t, a > 0 ? 1 : -1, first_box + j);
        }
    }
    return t;
}

int TangleBuilder::wire(int a, int b) {
    wires_.push_back({a, b});
    return static_cast<int>(wires_.size()) - 1;
}

TangleBuilder::Built TangleBuilder::close(const std::vector<int> &seeds, const std::vector<bool> &flip) const {
    const int L = next_;
    std::vector<int> parent(static_cast<std::size_t>(L));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    std::vector<std::vector<int>> wires_at(static_cast<std::size_t>(L));
    for (int w = 0; w < static_cast<int>(wires_.size()); ++w) {
        const auto [a, b] = wires_[static_cast<std::size_t>(w)];
        parent[static_cast<std::size_t>(find(a))] = find(b);
        wires_at[static_cast<std::size_t>(a)].push_back(w);
        wires_at[static_cast<std::size_t>(b)].push_back(w);
    }
    const int P = static_cast<int>(pieces_.size());
    // occurrences of every class: 4p+s
    std::vector<std::vector<int>> occ(static_cast<std::size_t>(L));
    std::vector<int> slot_of_label(static_cast<std::size_t>(L), -1);
    for (int p = 0; p < P; ++p)
        for (int s = 0; s < 4; ++s) {
            const int lab = pieces_[static_cast<std::size_t>(p)].e[static_cast<std::size_t>(s)];
            occ[static_cast<std::size_t>(find(lab))].push_back(4 * p + s);
            slot_of_label[static_cast<std::size_t>(lab)] = 4 * p + s;
        }
    for (int x = 0; x < L; ++x)
        if (find(x) == x && !occ[static_cast<std::size_t>(x)].empty() && occ[static_cast<std::size_t>(x)].size() != 2)
            throw std::logic_error("tangle has an open end");

    auto label_at = [&](int ps) { return pieces_[static_cast<std::size_t>(ps / 4)].e[static_cast<std::size_t>(ps % 4)]; };
    auto other_end = [&](int ps) {
        const auto &o = occ[static_cast<std::size_t>(find(label_at(ps)))];
        return o[0] == ps ? o[1] : o[0];
    };
    // wires run through, in order, when leaving the crossing slot ps
    auto chain = [&](int ps) {
        std::vector<std::pair<int, int>> out; // wire, +1 if run first -> second
        int lab = label_at(ps), came = -1;
        for (;;) {
            int next = -1;
            for (int w : wires_at[static_cast<std::size_t>(lab)])
                if (w != came) next = w;
            if (next < 0) break;
            const auto [a, b] = wires_[static_cast<std::size_t>(next)];
            out.emplace_back(next, a == lab ? 1 : -1);
            lab = a == lab ? b : a;
            came = next;
            if (slot_of_label[static_cast<std::size_t>(lab)] >= 0) break;
        }
        return out;
    };

    std::vector<int> incoming(static_cast<std::size_t>(4 * P), -1);
    std::vector<int> comp_of_class(static_cast<std::size_t>(L), -1);
    int comps = 0;
    auto orient_from = [&](int p, int s) {
        const int id = comps++;
        int cp = p, cs = s;
        do {
            incoming[static_cast<std::size_t>(4 * cp + cs)] = 1;
            const int out = 4 * cp + (cs + 2) % 4;
            incoming[static_cast<std::size_t>(out)] = 0;
            comp_of_class[static_cast<std::size_t>(find(label_at(out)))] = id;
            const int nx = other_end(out);
            cp = nx / 4;
            cs = nx % 4;
        } while (!(cp == p && cs == s));
    };

    std::size_t flip_index = 0;
    for (int w : seeds) {
        const int cls = find(wires_[static_cast<std::size_t>(w)][0]);
        const auto &o = occ[static_cast<std::size_t>(cls)];
        if (o.empty() || incoming[static_cast<std::size_t>(o[0])] >= 0) continue;
        bool forward = false;
        for (auto [ww, dir] : chain(o[0]))
            if (ww == w) forward = dir > 0;
        if (flip_index < flip.size() && flip[flip_index]) forward = !forward;
        ++flip_index;
        // leaving o[0] along the seed direction means the strand arrives at o[0] from across the crossing
        const int p = o[0] / 4, s = o[0] % 4;
        if (forward) orient_from(p, (s + 2) % 4);
        else orient_from(p, s);
    }
    for (int x = 0; x < 4 * P; ++x)
        if (incoming[static_cast<std::size_t>(x)] < 0) orient_from(x / 4, x % 4);

    Built out;
    std::vector<Crossing> xs;
    for (int p = 0; p < P; ++p) {
        const Piece &pc = pieces_[static_cast<std::size_t>(p)];
        const int r = incoming[static_cast<std::size_t>(4 * p)] == 1 ? 0 : 2;
        Crossing c;
        std::array<int, 4> ang{};
        for (int s = 0; s < 4; ++s) {
            c.e[static_cast<std::size_t>(s)] = find(pc.e[static_cast<std::size_t>((s + r) % 4)]);
            ang[static_cast<std::size_t>(s)] = pc.angle[static_cast<std::size_t>((s + r) % 4)];
        }
        c.sign = incoming[static_cast<std::size_t>(4 * p + (3 + r) % 4)] == 1 ? 1 : -1;
        xs.push_back(c);
        out.box.push_back(pc.box);
        out.vertical.push_back(pc.vertical);
        out.angle.push_back(ang);
    }

    int loops = 0;
    for (int x = 0; x < L; ++x)
        if (find(x) == x && occ[static_cast<std::size_t>(x)].empty()) {
            comp_of_class[static_cast<std::size_t>(x)] = comps++;
            ++loops;
        }
    out.wire_dir.assign(wires_.size(), 1);
    out.component_of_wire.assign(wires_.size(), -1);
    for (int x = 0; x < L; ++x) {
        if (find(x) != x || occ[static_cast<std::size_t>(x)].empty()) continue;
        const auto &o = occ[static_cast<std::size_t>(x)];
        const int from = incoming[static_cast<std::size_t>(o[0])] == 0 ? o[0] : o[1];
        for (auto [w, dir] : chain(from)) out.wire_dir[static_cast<std::size_t>(w)] = dir;
    }
    for (int w = 0; w < static_cast<int>(wires_.size()); ++w)
        out.component_of_wire[static_cast<std::size_t>(w)] = comp_of_class[static_cast<std::size_t>(find(wires_[static_cast<std::size_t>(w)][0]))];
    out.diagram = LinkDiagram(std::move(xs), loops);
    return out;
}

} // namespace nullify
