#include "nullify/montesinos.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace nullify {

TangleVector tangle_vector(Fraction f) {
    if (f.q <= 0) throw std::invalid_argument("denominator must be positive");
    if (f.p == 0 || std::llabs(f.p) >= f.q)
        throw std::invalid_argument("fraction " + f.to_string() +
                                    " needs 0 < |beta/alpha| < 1; fold its integer part into e");
    const int sign = f.p < 0 ? -1 : 1;
    std::vector<int> quot;
    for (long long x = f.q, y = std::llabs(f.p); y != 0;) {
        quot.push_back(static_cast<int>(x / y));
        const long long r = x % y;
        x = y;
        y = r;
    }
    TangleVector v;
    for (auto it = quot.rbegin(); it != quot.rend(); ++it) v.push_back(sign * *it);
    v.push_back(0);
    return v;
}

MontesinosParams montesinos_from_fractions(const std::vector<Fraction> &fractions, int e) {
    MontesinosParams m;
    for (const Fraction &f : fractions) m.tangles.push_back(tangle_vector(make_fraction(f.p, f.q)));
    m.e = e;
    validate(m);
    return m;
}

void validate(const MontesinosParams &m) {
    if (m.tangles.empty()) throw std::invalid_argument("a Montesinos diagram needs at least one tangle");
    for (std::size_t i = 0; i < m.tangles.size(); ++i) {
        const TangleVector &v = m.tangles[i];
        const std::string where = "tangle " + std::to_string(i + 1) + ": ";
        if (v.size() < 2 || v.back() != 0)
            throw std::invalid_argument(where + "expected (a_1, ..., a_n, 0) with n >= 1");
        for (std::size_t j = 0; j + 1 < v.size(); ++j) {
            if (v[j] == 0) throw std::invalid_argument(where + "zero entry before the last place");
            if ((v[j] > 0) != (v[0] > 0)) throw std::invalid_argument(where + "entries must share one sign");
        }
        const TangleVector head(v.begin(), v.end() - 1);
        if (head.size() == 1 && std::abs(head[0]) == 1)
            throw std::invalid_argument(where + "fraction is +-1; fold it into e");
    }
}

const char *to_string(MontesinosType t) { return t == MontesinosType::I ? "I" : "II"; }

MontesinosDiagram build_montesinos(const MontesinosParams &m) {
    validate(m);
    MontesinosDiagram out;
    TangleBuilder b;
    TangleBuilder::Ends whole{};
    int box = 1;
    for (std::size_t i = 0; i < m.tangles.size(); ++i) {
        out.first_box.push_back(box);
        const TangleBuilder::Ends t = b.rational(m.tangles[i], box);
        box += static_cast<int>(m.tangles[i].size());
        if (i == 0) {
            whole = t;
            continue;
        }
        out.top_wire.push_back(b.wire(whole.ne, t.nw));
        out.bottom_wire.push_back(b.wire(whole.se, t.sw));
        whole.ne = t.ne;
        whole.se = t.se;
    }
    const int x = b.label(), y = b.label();
    out.top_wire.push_back(b.wire(whole.ne, x));
    out.bottom_wire.push_back(b.wire(whole.se, y));
    whole.ne = x;
    whole.se = y;
    out.e_box = box;
    for (int k = 0; k < std::abs(m.e); ++k) b.twist_h(whole, m.e > 0 ? 1 : -1, out.e_box);
    out.top_wire.push_back(b.wire(whole.ne, whole.nw));
    out.bottom_wire.push_back(b.wire(whole.se, whole.sw));

    std::vector<int> seeds{out.top_wire.back(), out.bottom_wire.back()};
    for (std::size_t k = 0; k + 1 < out.top_wire.size(); ++k) {
        seeds.push_back(out.top_wire[k]);
        seeds.push_back(out.bottom_wire[k]);
    }
    out.built = b.close(seeds, m.flip);
    for (std::size_t i = 0; i < m.tangles.size(); ++i)
        out.classes.push_back(classify_built(out.built, m.tangles[i], out.first_box[i]));
    out.e_class = classify_built(out.built, {m.e}, out.e_box);
    return out;
}

LinkDiagram montesinos_diagram(const MontesinosParams &m) { return build_montesinos(m).built.diagram; }

std::vector<bool> junction_parallel(const MontesinosDiagram &d) {
    std::vector<bool> out;
    for (std::size_t k = 0; k < d.top_wire.size(); ++k)
        out.push_back(d.built.wire_dir[static_cast<std::size_t>(d.top_wire[k])] ==
                      d.built.wire_dir[static_cast<std::size_t>(d.bottom_wire[k])]);
    return out;
}

MontesinosType montesinos_type(const MontesinosDiagram &d) {
    const std::vector<bool> par = junction_parallel(d);
    for (bool p : par)
        if (p != par[0]) throw std::logic_error("junction orientations disagree");
    return par[0] ? MontesinosType::I : MontesinosType::II;
}

namespace {

bool contains(const std::vector<int> &v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// sum over tangles of sum_{A}(|a|-1) + |P| (circles) or sum_{P}(|a|-1) + |A| (nd)
int tangle_sum(const MontesinosDiagram &d, const MontesinosParams &m, bool circles) {
    int total = 0;
    for (std::size_t i = 0; i < m.tangles.size(); ++i) {
        const BoxClassification &c = d.classes[i];
        const std::vector<int> &weighted = circles ? c.antiparallel : c.parallel;
        const std::vector<int> &counted = circles ? c.parallel : c.antiparallel;
        for (int j : weighted) total += std::abs(m.tangles[i][static_cast<std::size_t>(j - 1)]) - 1;
        total += static_cast<int>(counted.size());
    }
    return total;
}

} // namespace

int montesinos_c(const MontesinosDiagram &d, const MontesinosParams &m) {
    if (m.e != 0) return 0;
    for (std::size_t i = 0; i < m.tangles.size(); ++i) {
        const int last = static_cast<int>(m.tangles[i].size()) - 1;
        if (!contains(d.classes[i].antiparallel, last)) return 0;
    }
    return 2;
}

int montesinos_seifert_count(const MontesinosDiagram &d, const MontesinosParams &m) {
    const int sum = tangle_sum(d, m, true);
    if (montesinos_type(d) == MontesinosType::I) return sum + 2;
    return sum + std::abs(m.e) + montesinos_c(d, m);
}

int montesinos_seifert_count(const MontesinosParams &m) { return montesinos_seifert_count(build_montesinos(m), m); }

int montesinos_nd_bound(const MontesinosDiagram &d, const MontesinosParams &m) {
    const int sum = tangle_sum(d, m, false);
    if (montesinos_type(d) == MontesinosType::I) return sum + std::abs(m.e) - 1;
    return sum - montesinos_c(d, m) + 1;
}

int montesinos_nd_bound(const MontesinosParams &m) { return montesinos_nd_bound(build_montesinos(m), m); }

bool neighbour_rule_holds(const BoxClassification &c, std::size_t entries) {
    for (int j : c.parallel)
        for (int k : {j - 1, j + 1})
            if (k >= 1 && k <= static_cast<int>(entries) && !contains(c.antiparallel, k) && !contains(c.empty, k))
                return false;
    return true;
}

MontesinosParams montesinos_from_json(const nlohmann::json &j) {
    if (!j.is_object()) throw std::invalid_argument("Montesinos parameters must be a JSON object");
    const int e = j.value("e", 0);
    MontesinosParams m;
    if (j.contains("tangles")) {
        m.tangles = j.at("tangles").get<std::vector<TangleVector>>();
        m.e = e;
    } else if (j.contains("fractions")) {
        std::vector<Fraction> fs;
        for (const auto &f : j.at("fractions")) {
            if (!f.is_array() || f.size() != 2) throw std::invalid_argument("fractions are [beta, alpha] pairs");
            fs.push_back(Fraction{f[0].get<long long>(), f[1].get<long long>()});
        }
        m = montesinos_from_fractions(fs, e);
    } else {
        throw std::invalid_argument("expected \"tangles\" or \"fractions\"");
    }
    if (j.contains("flip")) m.flip = j.at("flip").get<std::vector<bool>>();
    validate(m);
    return m;
}

nlohmann::json montesinos_to_json(const MontesinosParams &m) {
    nlohmann::json j{{"tangles", m.tangles}, {"e", m.e}};
    if (!m.flip.empty()) j["flip"] = m.flip;
    return j;
}

} // namespace nullify
