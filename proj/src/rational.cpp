#include "nullify/rational.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nullify/tangle_builder.hpp"

namespace nullify {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// p > 0 and q reduced into [0, p)
std::pair<long long, long long> bridge_form(Fraction f) {
    const long long p = std::llabs(f.p);
    if (p == 0) return {0, 1};
    return {p, mod(f.p < 0 ? -f.q : f.q, p)};
}

} // namespace

Fraction make_fraction(long long p, long long q) {
    if (q == 0) throw std::invalid_argument("zero denominator");
    const long long g = std::gcd(p, q);
    p /= g;
    q /= g;
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return Fraction{p, q};
}

Fraction cf_to_fraction(const TangleVector &v) {
    if (v.empty()) throw std::invalid_argument("empty tangle vector");
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] == 0) throw std::invalid_argument("zero entry before the last place of a tangle vector");
    long long num = v[0], den = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
        const long long next = static_cast<long long>(v[i]) * num + den;
        den = num;
        num = next;
    }
    if (den == 0) throw std::invalid_argument("continued fraction is infinite");
    return make_fraction(num, den);
}

Fraction cf_outer_first(const TangleVector &v) {
    return cf_to_fraction(TangleVector(v.rbegin(), v.rend()));
}

TangleVector fraction_to_canonical_vector(Fraction f) {
    auto [p, q] = bridge_form(f);
    if (p == 0) return {0};
    if (p == 1) return {1};
    std::vector<int> quot;
    for (long long x = p, y = q; y != 0;) {
        quot.push_back(static_cast<int>(x / y));
        const long long r = x % y;
        x = y;
        y = r;
    }
    TangleVector v(quot.rbegin(), quot.rend());
    if (v.size() % 2 == 0) {
        v[0] -= 1;
        v.insert(v.begin(), 1);
    }
    TangleVector r(v.rbegin(), v.rend());
    return std::min(v, r);
}

TangleVector even_expansion(Fraction f) {
    auto [p, q] = bridge_form(f);
    if (p % 2 == 0) throw std::invalid_argument("even continued fractions exist only for knots (odd numerator)");
    if (p == 1) return {};
    if (q % 2 != 0) q -= p;
    std::vector<int> quot;
    for (long long x = p, y = q; y != 0;) {
        long long b = 2 * floor_div(x, 2 * y);
        if (std::llabs(x - b * y) >= std::llabs(y)) b += 2;
        quot.push_back(static_cast<int>(b));
        const long long r = x - b * y;
        x = y;
        y = r;
    }
    return TangleVector(quot.rbegin(), quot.rend());
}

bool fourplat_equals(Fraction a, Fraction b) {
    auto [p1, q1] = bridge_form(a);
    auto [p2, q2] = bridge_form(b);
    if (p1 != p2) return false;
    if (p1 <= 1) return true;
    return q1 == q2 || mod(q1 * q2, p1) == 1;
}

bool fourplat_equals_up_to_mirror(Fraction a, Fraction b) {
    return fourplat_equals(a, b) || fourplat_equals(a, Fraction{b.p, -b.q});
}

int fourplat_signature(Fraction f) {
    const TangleVector v = even_expansion(f);
    int sigma = 0;
    for (std::size_t i = 0; i < v.size(); ++i) sigma += (i % 2 == 0 ? 1 : -1) * (v[i] > 0 ? 1 : -1);
    return sigma;
}

int fourplat_crossing_number(const TangleVector &even) {
    if (even.empty() || even.size() % 2 != 0) throw std::invalid_argument("even vector must have even length");
    int total = 0;
    for (std::size_t i = 0; i < even.size(); ++i) {
        if (even[i] == 0 || even[i] % 2 != 0) throw std::invalid_argument("entries must be nonzero and even");
        if (i > 0 && (even[i] > 0) == (even[i - 1] > 0)) throw std::invalid_argument("entries must alternate in sign");
        total += std::abs(even[i]);
    }
    return total - static_cast<int>(even.size()) + 1;
}

namespace {

TangleBuilder::Built build_fourplat(const TangleVector &v, bool reverse_second) {
    if (v.empty()) throw std::invalid_argument("empty tangle vector");
    cf_to_fraction(v); // validates the entries
    TangleBuilder b;
    TangleBuilder::Ends t = b.rational(v, 1);
    const int top = b.wire(t.ne, t.nw);
    const int bottom = b.wire(t.se, t.sw);
    return b.close({top, bottom}, {false, reverse_second});
}

} // namespace

LinkDiagram fourplat_diagram(const TangleVector &v, bool reverse_second) {
    return build_fourplat(v, reverse_second).diagram;
}

bool crossing_is_parallel(const TangleBuilder::Built &b, int c) {
    const Crossing &x = b.diagram.crossing(c);
    const auto &ang = b.angle[static_cast<std::size_t>(c)];
    const int a0 = ang[0], a1 = ang[static_cast<std::size_t>(x.over_in())];
    if (b.vertical[static_cast<std::size_t>(c)]) {
        auto top = [](int a) { return a == 1 || a == 3; };
        return top(a0) == top(a1);
    }
    auto left = [](int a) { return a == 3 || a == 5; };
    return left(a0) == left(a1);
}

BoxClassification classify_built(const TangleBuilder::Built &b, const TangleVector &v, int first_box) {
    BoxClassification out;
    for (int j = 0; j < static_cast<int>(v.size()); ++j) {
        if (v[static_cast<std::size_t>(j)] == 0) {
            out.empty.push_back(j + 1);
            continue;
        }
        int par = -1;
        for (int c = 0; c < b.diagram.crossing_count(); ++c) {
            if (b.box[static_cast<std::size_t>(c)] != first_box + j) continue;
            const int p = crossing_is_parallel(b, c) ? 1 : 0;
            if (par >= 0 && par != p) throw std::logic_error("twist box mixes parallel and anti-parallel crossings");
            par = p;
        }
        (par == 1 ? out.parallel : out.antiparallel).push_back(j + 1);
    }
    return out;
}

BoxClassification classify_parallel_antiparallel(const TangleVector &v, bool reverse_second) {
    return classify_built(build_fourplat(v, reverse_second), v, 1);
}

int fourplat_nd(const TangleVector &v, bool reverse_second) {
    const BoxClassification c = classify_parallel_antiparallel(v, reverse_second);
    int total = static_cast<int>(c.antiparallel.size());
    for (int j : c.parallel) total += std::abs(v[static_cast<std::size_t>(j - 1)]) - 1;
    return total;
}

nlohmann::json classification_to_json(const BoxClassification &c) {
    return nlohmann::json{{"parallel", c.parallel}, {"antiparallel", c.antiparallel}, {"empty", c.empty}};
}

} // namespace nullify
