#include "nullify/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace nullify {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[static_cast<std::size_t>(x)] != x) {
            p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
            x = p[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

std::string trim(const std::string &s) {
    auto b = s.find_first_not_of(" \t\r\n,");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n,");
    return s.substr(b, e - b + 1);
}

} // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
    if (free_loops_ < 0) throw DiagramError("negative loop count");
    build();
}

LinkDiagram LinkDiagram::unlink(int components) {
    if (components < 1) throw DiagramError("an unlink needs at least one component");
    return LinkDiagram({}, components);
}

void LinkDiagram::build() {
    const int n = crossing_count();
    std::map<int, int> count;
    for (const auto &x : crossings_) {
        if (x.sign != 1 && x.sign != -1) throw DiagramError("crossing sign must be +1 or -1");
        for (int l : x.e) ++count[l];
    }
    for (const auto &[l, k] : count) {
        if (k == 1) throw DiagramError("unpaired arc label " + std::to_string(l));
        if (k != 2) throw DiagramError("arc label " + std::to_string(l) + " appears " + std::to_string(k) + " times");
    }
    std::map<int, int> compact;
    for (const auto &[l, k] : count) compact.emplace(l, static_cast<int>(compact.size()));
    for (auto &x : crossings_)
        for (int &l : x.e) l = compact[l];

    const auto E = static_cast<std::size_t>(2 * n);
    head_.assign(E, Dart{});
    tail_.assign(E, Dart{});
    for (int c = 0; c < n; ++c) {
        const auto &x = crossings_[static_cast<std::size_t>(c)];
        for (int s = 0; s < 4; ++s) {
            auto &slot = x.incoming(s) ? head_[static_cast<std::size_t>(x.e[static_cast<std::size_t>(s)])]
                                       : tail_[static_cast<std::size_t>(x.e[static_cast<std::size_t>(s)])];
            if (slot.crossing >= 0) throw DiagramError("orientation inconsistency at arc " + std::to_string(x.e[static_cast<std::size_t>(s)] + 1));
            slot = Dart{c, s};
        }
    }

    // faces: orbits of dart -> opposite end -> next slot counterclockwise
    face_of_dart_.assign(static_cast<std::size_t>(4 * n), -1);
    faces_.clear();
    for (int d0 = 0; d0 < 4 * n; ++d0) {
        if (face_of_dart_[static_cast<std::size_t>(d0)] >= 0) continue;
        const int f = static_cast<int>(faces_.size());
        faces_.emplace_back();
        int d = d0;
        while (face_of_dart_[static_cast<std::size_t>(d)] < 0) {
            face_of_dart_[static_cast<std::size_t>(d)] = f;
            faces_.back().push_back(d);
            Dart o = opposite(d / 4, d % 4);
            d = 4 * o.crossing + (o.slot + 1) % 4;
        }
    }

    UnionFind pieces(n);
    for (std::size_t e = 0; e < E; ++e) pieces.unite(head_[e].crossing, tail_[e].crossing);
    piece_of_crossing_.assign(static_cast<std::size_t>(n), -1);
    std::map<int, int> piece_id;
    for (int c = 0; c < n; ++c) {
        int r = pieces.find(c);
        auto it = piece_id.emplace(r, static_cast<int>(piece_id.size())).first;
        piece_of_crossing_[static_cast<std::size_t>(c)] = it->second;
    }
    piece_count_ = static_cast<int>(piece_id.size());
    std::vector<int> vertices(static_cast<std::size_t>(piece_count_), 0), face_count(static_cast<std::size_t>(piece_count_), 0);
    for (int c = 0; c < n; ++c) ++vertices[static_cast<std::size_t>(piece_of_crossing_[static_cast<std::size_t>(c)])];
    for (const auto &f : faces_) ++face_count[static_cast<std::size_t>(piece_of_crossing_[static_cast<std::size_t>(f.front() / 4)])];
    for (int p = 0; p < piece_count_; ++p)
        if (face_count[static_cast<std::size_t>(p)] != vertices[static_cast<std::size_t>(p)] + 2)
            throw DiagramError("diagram is not planar");

    comp_of_edge_.assign(E, -1);
    comp_count_ = 0;
    for (std::size_t e0 = 0; e0 < E; ++e0) {
        if (comp_of_edge_[e0] >= 0) continue;
        int e = static_cast<int>(e0);
        while (comp_of_edge_[static_cast<std::size_t>(e)] < 0) {
            comp_of_edge_[static_cast<std::size_t>(e)] = comp_count_;
            e = next_edge(e);
        }
        ++comp_count_;
    }
}

int LinkDiagram::next_edge(int e) const {
    Dart h = head(e);
    return crossings_[static_cast<std::size_t>(h.crossing)].e[static_cast<std::size_t>((h.slot + 2) % 4)];
}

Dart LinkDiagram::opposite(int c, int s) const {
    int e = crossings_[static_cast<std::size_t>(c)].e[static_cast<std::size_t>(s)];
    Dart h = head(e);
    if (h.crossing == c && h.slot == s) return tail(e);
    return h;
}

int LinkDiagram::writhe() const {
    int w = 0;
    for (const auto &x : crossings_) w += x.sign;
    return w;
}

bool LinkDiagram::same_crossings(const LinkDiagram &o) const {
    if (crossings_.size() != o.crossings_.size()) return false;
    for (std::size_t i = 0; i < crossings_.size(); ++i)
        if (crossings_[i].e != o.crossings_[i].e || crossings_[i].sign != o.crossings_[i].sign) return false;
    return true;
}

LinkDiagram parse_pd(const std::string &text, int components_if_empty) {
    std::string body = trim(text);
    if (body.rfind("PD[", 0) == 0 && body.back() == ']') body = trim(body.substr(3, body.size() - 4));
    if (body.empty()) return LinkDiagram::unlink(components_if_empty);

    static const std::regex token(R"(X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]|Loops\[\s*(\d+)\s*\])");
    std::vector<std::array<int, 4>> raw;
    int loops = 0;
    std::size_t pos = 0;
    while (pos < body.size()) {
        if (std::isspace(static_cast<unsigned char>(body[pos])) || body[pos] == ',') {
            ++pos;
            continue;
        }
        std::smatch m;
        std::string rest = body.substr(pos);
        if (!std::regex_search(rest, m, token, std::regex_constants::match_continuous)) {
            std::string bad = rest.substr(0, rest.find_first_of(" \t\n"));
            throw DiagramError("malformed token '" + bad + "'");
        }
        if (m[5].matched) {
            loops += std::stoi(m[5].str());
        } else {
            raw.push_back({std::stoi(m[1].str()), std::stoi(m[2].str()), std::stoi(m[3].str()), std::stoi(m[4].str())});
        }
        pos += static_cast<std::size_t>(m.length(0));
    }
    if (raw.empty()) return LinkDiagram({}, loops > 0 ? loops : components_if_empty);

    std::map<int, std::vector<Dart>> occ;
    for (int c = 0; c < static_cast<int>(raw.size()); ++c)
        for (int s = 0; s < 4; ++s) occ[raw[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)]].push_back({c, s});
    for (const auto &[l, v] : occ) {
        if (v.size() == 1) throw DiagramError("unpaired arc label " + std::to_string(l));
        if (v.size() != 2) throw DiagramError("arc label " + std::to_string(l) + " appears " + std::to_string(v.size()) + " times");
    }

    const int n = static_cast<int>(raw.size());
    std::vector<int> sign(static_cast<std::size_t>(n), 0);
    // +1 incoming, -1 outgoing, 0 unknown
    auto status = [&](Dart d) {
        if (d.slot == 0) return 1;
        if (d.slot == 2) return -1;
        int sg = sign[static_cast<std::size_t>(d.crossing)];
        if (sg == 0) return 0;
        int in_slot = sg > 0 ? 3 : 1;
        return d.slot == in_slot ? 1 : -1;
    };
    auto other = [&](Dart d) {
        const auto &v = occ[raw[static_cast<std::size_t>(d.crossing)][static_cast<std::size_t>(d.slot)]];
        return (v[0].crossing == d.crossing && v[0].slot == d.slot) ? v[1] : v[0];
    };
    auto propagate = [&]() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int c = 0; c < n; ++c) {
                if (sign[static_cast<std::size_t>(c)] != 0) continue;
                int want = 0;
                for (int s : {1, 3}) {
                    int st = status(other({c, s}));
                    if (st == 0) continue;
                    // the far end incoming means this end is outgoing
                    bool here_in = st < 0;
                    int sg = (here_in == (s == 3)) ? 1 : -1;
                    if (want != 0 && want != sg) throw DiagramError("orientation inconsistency at crossing " + std::to_string(c + 1));
                    want = sg;
                }
                if (want != 0) {
                    sign[static_cast<std::size_t>(c)] = want;
                    changed = true;
                }
            }
        }
    };
    propagate();
    for (int c = 0; c < n; ++c) {
        if (sign[static_cast<std::size_t>(c)] != 0) continue;
        // label succession decides strands that never pass under
        int b = raw[static_cast<std::size_t>(c)][1], d = raw[static_cast<std::size_t>(c)][3];
        sign[static_cast<std::size_t>(c)] = (b - d == 1 || d - b > 1) ? 1 : -1;
        propagate();
    }
    std::vector<Crossing> xs;
    xs.reserve(raw.size());
    for (int c = 0; c < n; ++c) xs.push_back({raw[static_cast<std::size_t>(c)], sign[static_cast<std::size_t>(c)]});
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s)
            if (status({c, s}) == status(other({c, s}))) throw DiagramError("orientation inconsistency at crossing " + std::to_string(c + 1));
    return LinkDiagram(std::move(xs), loops);
}

LinkDiagram parse_gauss(const std::string &text) {
    std::string src = text;
    for (std::size_t p; (p = src.find("\xE2\x88\x92")) != std::string::npos;) src.replace(p, 3, "-");
    std::vector<std::string> parts;
    {
        std::string cur;
        for (char ch : src) {
            if (ch == '/') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        parts.push_back(cur);
    }
    struct Tok {
        bool over;
        int k;
        int sign;
    };
    static const std::regex tok_re(R"(([OU])(\d+)([+-]))");
    std::vector<std::vector<Tok>> comps;
    int loops = 0;
    std::map<int, std::vector<std::pair<int, int>>> seen;
    for (const auto &part : parts) {
        std::istringstream is(part);
        std::vector<Tok> comp;
        std::string t;
        while (is >> t) {
            std::smatch m;
            if (!std::regex_match(t, m, tok_re)) throw DiagramError("malformed token '" + t + "'");
            comp.push_back({m[1].str() == "O", std::stoi(m[2].str()), m[3].str() == "+" ? 1 : -1});
            seen[comp.back().k].push_back({static_cast<int>(comps.size()), static_cast<int>(comp.size()) - 1});
        }
        if (comp.empty())
            ++loops;
        else
            comps.push_back(std::move(comp));
    }
    std::string incomplete;
    for (const auto &[k, v] : seen) {
        bool ok = v.size() == 2;
        if (ok) {
            const auto &a = comps[static_cast<std::size_t>(v[0].first)][static_cast<std::size_t>(v[0].second)];
            const auto &b = comps[static_cast<std::size_t>(v[1].first)][static_cast<std::size_t>(v[1].second)];
            ok = a.over != b.over;
        }
        if (!ok) incomplete += (incomplete.empty() ? "" : ", ") + std::string("crossing ") + std::to_string(k) + " incomplete";
    }
    if (!incomplete.empty()) throw DiagramError(incomplete);
    for (const auto &[k, v] : seen) {
        const auto &a = comps[static_cast<std::size_t>(v[0].first)][static_cast<std::size_t>(v[0].second)];
        const auto &b = comps[static_cast<std::size_t>(v[1].first)][static_cast<std::size_t>(v[1].second)];
        if (a.sign != b.sign) throw DiagramError("sign mismatch at crossing " + std::to_string(k));
    }
    if (comps.empty()) return LinkDiagram::unlink(std::max(loops, 1));

    // edge j of a component runs from token j to token j+1
    std::vector<int> base;
    int next_label = 0;
    for (const auto &comp : comps) {
        base.push_back(next_label);
        next_label += static_cast<int>(comp.size());
    }
    std::map<int, std::array<int, 4>> slots; // under in, under out, over in, over out
    std::map<int, int> signs;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const auto &comp = comps[ci];
        const int m = static_cast<int>(comp.size());
        for (int j = 0; j < m; ++j) {
            int in = base[ci] + (j + m - 1) % m, out = base[ci] + j;
            auto &sl = slots[comp[static_cast<std::size_t>(j)].k];
            if (comp[static_cast<std::size_t>(j)].over) {
                sl[2] = in;
                sl[3] = out;
            } else {
                sl[0] = in;
                sl[1] = out;
            }
            signs[comp[static_cast<std::size_t>(j)].k] = comp[static_cast<std::size_t>(j)].sign;
        }
    }
    std::vector<Crossing> xs;
    for (const auto &[k, sl] : slots) {
        Crossing x;
        x.sign = signs[k];
        if (x.sign > 0)
            x.e = {sl[0], sl[3], sl[1], sl[2]};
        else
            x.e = {sl[0], sl[2], sl[1], sl[3]};
        xs.push_back(x);
    }
    try {
        return LinkDiagram(std::move(xs), loops);
    } catch (const DiagramError &e) {
        throw DiagramError(std::string("non-realizable code: ") + e.what());
    }
}

LinkDiagram relabeled(const LinkDiagram &d) {
    const int E = d.edge_count();
    std::vector<int> label(static_cast<std::size_t>(E), -1);
    int next = 0;
    for (const auto &x : d.crossings())
        for (int e0 : x.e) {
            if (label[static_cast<std::size_t>(e0)] >= 0) continue;
            int e = e0;
            while (label[static_cast<std::size_t>(e)] < 0) {
                label[static_cast<std::size_t>(e)] = next++;
                e = d.next_edge(e);
            }
        }
    std::vector<Crossing> xs = d.crossings();
    for (auto &x : xs)
        for (int &l : x.e) l = label[static_cast<std::size_t>(l)];
    return LinkDiagram(std::move(xs), d.free_loops());
}

std::string serialize_pd(const LinkDiagram &d) {
    LinkDiagram r = relabeled(d);
    std::ostringstream os;
    bool first = true;
    for (const auto &x : r.crossings()) {
        if (!first) os << ' ';
        first = false;
        os << "X[" << x.e[0] + 1 << ',' << x.e[1] + 1 << ',' << x.e[2] + 1 << ',' << x.e[3] + 1 << ']';
    }
    if (r.free_loops() > 0) {
        if (!first) os << ' ';
        os << "Loops[" << r.free_loops() << ']';
    }
    return os.str();
}

std::string serialize_gauss(const LinkDiagram &d) {
    std::vector<std::string> comps;
    std::vector<char> seen(static_cast<std::size_t>(d.edge_count()), 0);
    for (int e0 = 0; e0 < d.edge_count(); ++e0) {
        if (seen[static_cast<std::size_t>(e0)]) continue;
        std::ostringstream os;
        int e = e0;
        bool first = true;
        while (!seen[static_cast<std::size_t>(e)]) {
            seen[static_cast<std::size_t>(e)] = 1;
            Dart h = d.head(e);
            if (!first) os << ' ';
            first = false;
            os << (h.slot % 2 ? 'O' : 'U') << h.crossing + 1 << (d.crossing(h.crossing).sign > 0 ? '+' : '-');
            e = d.next_edge(e);
        }
        comps.push_back(os.str());
    }
    for (int i = 0; i < d.free_loops(); ++i) comps.emplace_back("");
    std::string out;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i) out += comps[i].empty() || comps[i - 1].empty() ? "/" : " / ";
        out += comps[i];
    }
    return out;
}

LinkDiagram remove_crossings(const LinkDiagram &d, const std::vector<int> &cs, Pairing pairing) {
    const int E = d.edge_count();
    std::vector<char> gone(static_cast<std::size_t>(d.crossing_count()), 0);
    for (int c : cs) {
        if (c < 0 || c >= d.crossing_count()) throw DiagramError("unknown crossing id " + std::to_string(c));
        gone[static_cast<std::size_t>(c)] = 1;
    }
    UnionFind uf(E);
    for (int c = 0; c < d.crossing_count(); ++c) {
        if (!gone[static_cast<std::size_t>(c)]) continue;
        const auto &x = d.crossing(c);
        if (pairing == Pairing::Straight) {
            uf.unite(x.e[0], x.e[2]);
            uf.unite(x.e[1], x.e[3]);
        } else if (x.sign > 0) {
            uf.unite(x.e[0], x.e[1]);
            uf.unite(x.e[2], x.e[3]);
        } else {
            uf.unite(x.e[0], x.e[3]);
            uf.unite(x.e[1], x.e[2]);
        }
    }
    std::vector<Crossing> xs;
    std::set<int> alive;
    for (int c = 0; c < d.crossing_count(); ++c) {
        if (gone[static_cast<std::size_t>(c)]) continue;
        Crossing x = d.crossing(c);
        for (int &l : x.e) {
            l = uf.find(l);
            alive.insert(l);
        }
        xs.push_back(x);
    }
    std::set<int> closed;
    for (int c = 0; c < d.crossing_count(); ++c) {
        if (!gone[static_cast<std::size_t>(c)]) continue;
        for (int l : d.crossing(c).e) {
            int r = uf.find(l);
            if (!alive.count(r)) closed.insert(r);
        }
    }
    return LinkDiagram(std::move(xs), d.free_loops() + static_cast<int>(closed.size()));
}

LinkDiagram smooth(const LinkDiagram &d, int c) {
    if (c < 0 || c >= d.crossing_count()) throw DiagramError("unknown crossing id " + std::to_string(c));
    return remove_crossings(d, {c}, Pairing::Oriented);
}

LinkDiagram smooth_all(const LinkDiagram &d, const std::vector<int> &cs) {
    return remove_crossings(d, cs, Pairing::Oriented);
}

namespace {
Crossing switched(const Crossing &x) {
    Crossing y;
    if (x.sign > 0)
        y.e = {x.e[3], x.e[0], x.e[1], x.e[2]};
    else
        y.e = {x.e[1], x.e[2], x.e[3], x.e[0]};
    y.sign = -x.sign;
    return y;
}
} // namespace

LinkDiagram switch_crossing(const LinkDiagram &d, int c) {
    if (c < 0 || c >= d.crossing_count()) throw DiagramError("unknown crossing id " + std::to_string(c));
    std::vector<Crossing> xs = d.crossings();
    xs[static_cast<std::size_t>(c)] = switched(xs[static_cast<std::size_t>(c)]);
    return LinkDiagram(std::move(xs), d.free_loops());
}

LinkDiagram mirror(const LinkDiagram &d) {
    std::vector<Crossing> xs = d.crossings();
    for (auto &x : xs) x = switched(x);
    return LinkDiagram(std::move(xs), d.free_loops());
}

namespace {
LinkDiagram reverse_where(const LinkDiagram &d, const std::vector<char> &flip_comp) {
    const auto &comp = d.component_of_edge();
    std::vector<Crossing> xs = d.crossings();
    for (auto &x : xs) {
        bool under = flip_comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(x.e[0])])] != 0;
        bool over = flip_comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(x.e[1])])] != 0;
        if (under) x.e = {x.e[2], x.e[3], x.e[0], x.e[1]};
        if (under != over) x.sign = -x.sign;
    }
    return LinkDiagram(std::move(xs), d.free_loops());
}
} // namespace

LinkDiagram reverse_component(const LinkDiagram &d, int component) {
    if (component < 1 || component > d.component_count())
        throw DiagramError("component index " + std::to_string(component) + " out of range 1.." + std::to_string(d.component_count()));
    std::vector<char> flip(static_cast<std::size_t>(d.component_count()), 0);
    flip[static_cast<std::size_t>(component - 1)] = 1;
    return reverse_where(d, flip);
}

LinkDiagram reverse_all(const LinkDiagram &d) {
    return reverse_where(d, std::vector<char>(static_cast<std::size_t>(d.component_count()), 1));
}

LinkDiagram disjoint_union(const LinkDiagram &a, const LinkDiagram &b) {
    std::vector<Crossing> xs = a.crossings();
    const int off = a.edge_count();
    for (Crossing x : b.crossings()) {
        for (int &l : x.e) l += off;
        xs.push_back(x);
    }
    return LinkDiagram(std::move(xs), a.free_loops() + b.free_loops());
}

std::vector<LinkDiagram> split_pieces(const LinkDiagram &d) {
    std::vector<std::vector<Crossing>> groups(static_cast<std::size_t>(d.piece_count()));
    for (int c = 0; c < d.crossing_count(); ++c)
        groups[static_cast<std::size_t>(d.piece_of_crossing()[static_cast<std::size_t>(c)])].push_back(d.crossing(c));
    std::vector<LinkDiagram> out;
    for (auto &g : groups) out.emplace_back(std::move(g), 0);
    return out;
}

SeifertDecomposition seifert_circles(const LinkDiagram &d) {
    const int n = d.crossing_count();
    UnionFind uf(4 * n);
    for (int e = 0; e < d.edge_count(); ++e) {
        Dart h = d.head(e), t = d.tail(e);
        uf.unite(4 * h.crossing + h.slot, 4 * t.crossing + t.slot);
    }
    for (int c = 0; c < n; ++c) {
        if (d.crossing(c).sign > 0) {
            uf.unite(4 * c + 0, 4 * c + 1);
            uf.unite(4 * c + 2, 4 * c + 3);
        } else {
            uf.unite(4 * c + 0, 4 * c + 3);
            uf.unite(4 * c + 1, 4 * c + 2);
        }
    }
    SeifertDecomposition sd;
    sd.circle_of_dart.assign(static_cast<std::size_t>(4 * n), -1);
    std::map<int, int> id;
    for (int x = 0; x < 4 * n; ++x) {
        auto it = id.emplace(uf.find(x), static_cast<int>(id.size())).first;
        sd.circle_of_dart[static_cast<std::size_t>(x)] = it->second;
    }
    sd.circle_of_edge.assign(static_cast<std::size_t>(d.edge_count()), -1);
    for (int e = 0; e < d.edge_count(); ++e) {
        Dart t = d.tail(e);
        sd.circle_of_edge[static_cast<std::size_t>(e)] = sd.circle_of_dart[static_cast<std::size_t>(4 * t.crossing + t.slot)];
    }
    sd.circle_count = static_cast<int>(id.size()) + d.free_loops();
    return sd;
}

bool is_alternating(const LinkDiagram &d) {
    for (int e = 0; e < d.edge_count(); ++e)
        if (d.head(e).slot % 2 == d.tail(e).slot % 2) return false;
    return true;
}

std::vector<int> nugatory_crossings(const LinkDiagram &d) {
    std::vector<int> out;
    for (int c = 0; c < d.crossing_count(); ++c)
        if (d.face_of(c, 0) == d.face_of(c, 2) || d.face_of(c, 1) == d.face_of(c, 3)) out.push_back(c);
    return out;
}

bool is_reduced(const LinkDiagram &d) { return nugatory_crossings(d).empty(); }

namespace {
// planar reflection combined with exchanging over and under; sign is kept
Crossing flipped(const Crossing &x) {
    Crossing y;
    y.sign = x.sign;
    if (x.sign > 0)
        y.e = {x.e[3], x.e[2], x.e[1], x.e[0]};
    else
        y.e = {x.e[1], x.e[0], x.e[3], x.e[2]};
    return y;
}
} // namespace

LinkDiagram reduce_alternating(const LinkDiagram &input) {
    if (!is_alternating(input)) throw DiagramError("diagram is not alternating");
    LinkDiagram d = input;
    for (;;) {
        auto nug = nugatory_crossings(d);
        if (nug.empty()) return d;
        const int c = nug.front();
        const int s = d.face_of(c, 0) == d.face_of(c, 2) ? 0 : 1;
        // slots s, s+1 lead to one side and s+2, s+3 to the other; rotate the latter
        std::vector<char> side(static_cast<std::size_t>(d.crossing_count()), 0);
        std::vector<int> stack;
        for (int t : {s + 2, s + 3}) {
            Dart o = d.opposite(c, t % 4);
            if (o.crossing != c && !side[static_cast<std::size_t>(o.crossing)]) {
                side[static_cast<std::size_t>(o.crossing)] = 1;
                stack.push_back(o.crossing);
            }
        }
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int t = 0; t < 4; ++t) {
                Dart o = d.opposite(x, t);
                if (o.crossing == c || side[static_cast<std::size_t>(o.crossing)]) continue;
                side[static_cast<std::size_t>(o.crossing)] = 1;
                stack.push_back(o.crossing);
            }
        }
        std::vector<Crossing> xs = d.crossings();
        for (int x = 0; x < d.crossing_count(); ++x)
            if (side[static_cast<std::size_t>(x)]) xs[static_cast<std::size_t>(x)] = flipped(xs[static_cast<std::size_t>(x)]);
        d = remove_crossings(LinkDiagram(std::move(xs), d.free_loops()), {c}, Pairing::Straight);
    }
}

std::string canonical_key(const LinkDiagram &d) {
    const int E = d.edge_count();
    std::string best;
    std::vector<int> label(static_cast<std::size_t>(E));
    std::vector<int> order;
    for (int start = 0; start < E; ++start) {
        std::fill(label.begin(), label.end(), -1);
        order.clear();
        std::vector<char> crossing_seen(static_cast<std::size_t>(d.crossing_count()), 0);
        int next = 0;
        auto walk = [&](int e0) {
            int e = e0;
            while (label[static_cast<std::size_t>(e)] < 0) {
                label[static_cast<std::size_t>(e)] = next++;
                int c = d.head(e).crossing;
                if (!crossing_seen[static_cast<std::size_t>(c)]) {
                    crossing_seen[static_cast<std::size_t>(c)] = 1;
                    order.push_back(c);
                }
                e = d.next_edge(e);
            }
        };
        walk(start);
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int l : d.crossing(order[i]).e)
                if (label[static_cast<std::size_t>(l)] < 0) walk(l);
        for (int e = 0; e < E; ++e)
            if (label[static_cast<std::size_t>(e)] < 0) {
                walk(e);
                for (std::size_t i = 0; i < order.size(); ++i)
                    for (int l : d.crossing(order[i]).e)
                        if (label[static_cast<std::size_t>(l)] < 0) walk(l);
            }
        std::vector<std::array<int, 5>> rows;
        for (const auto &x : d.crossings())
            rows.push_back({label[static_cast<std::size_t>(x.e[0])], label[static_cast<std::size_t>(x.e[1])],
                            label[static_cast<std::size_t>(x.e[2])], label[static_cast<std::size_t>(x.e[3])], x.sign});
        std::sort(rows.begin(), rows.end());
        std::string key;
        key.reserve(rows.size() * 12);
        for (const auto &r : rows) {
            for (int v : r) {
                key += std::to_string(v);
                key += ',';
            }
            key += ';';
        }
        if (best.empty() || key < best) best = key;
    }
    return "L" + std::to_string(d.free_loops()) + ":" + best;
}

} // namespace nullify
