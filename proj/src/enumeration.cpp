#include "nullify/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <functional>
#include <thread>

namespace nullify {

namespace {

long long mod(__int128 a, long long m) {
    __int128 r = a % m;
    if (r < 0) r += m;
    return static_cast<long long>(r);
}

long long twisted_denominator(const NullOneRecord &r) { return r.epsilon + r.source.p * r.source.q; }

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

} // namespace

TangleVector outer_first_vector(Fraction f) {
    if (f.p <= 0 || f.q <= 0 || f.q >= f.p) throw std::invalid_argument("expected 0 < q < p, got " + f.to_string());
    TangleVector v;
    for (long long x = f.p, y = f.q; y != 0;) {
        v.push_back(static_cast<int>(x / y));
        const long long r = x % y;
        x = y;
        y = r;
    }
    return v;
}

NullOneRecord null_one_from_rational(const TangleVector &v, int epsilon) {
    if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
    if (v.empty()) throw std::invalid_argument("empty tangle vector");
    for (int a : v)
        if (a == 0 || (a > 0) != (v[0] > 0)) throw std::invalid_argument("expected a standard vector with entries of one sign");
    NullOneRecord r;
    r.source = cf_outer_first(v);
    r.source_vector = v;
    r.epsilon = epsilon;
    if (std::llabs(r.source.p) == 1) throw std::invalid_argument("source is the unknot; p^2/(eps+pq) is degenerate");
    if (r.source.p % 2 == 0) throw std::invalid_argument("source " + r.source.to_string() + " is a two-component link; the construction needs a knot");
    const long long den = twisted_denominator(r);
    if (den == 0) throw std::invalid_argument("eps + pq vanishes");
    r.derived = make_fraction(r.source.p * r.source.p, den);
    r.derived_vector = v;
    r.derived_vector.push_back(epsilon);
    for (auto it = v.rbegin(); it != v.rend(); ++it) r.derived_vector.push_back(-*it);
    int total = 0;
    for (int a : v) total += std::abs(a);
    r.crossing_number = 2 * total;
    if (!fourplat_equals_up_to_mirror(cf_to_fraction(r.derived_vector), r.derived))
        throw std::logic_error("derived vector does not give p^2/(eps+pq)");
    return r;
}

NullOneRecord null_one_from_fraction(Fraction f, int epsilon) {
    const Fraction g = make_fraction(f.p, f.q);
    if (g.p == 1 || g.p == -1) throw std::invalid_argument("source is the unknot; p^2/(eps+pq) is degenerate");
    return null_one_from_rational(outer_first_vector(Fraction{std::llabs(g.p), ((g.q % std::llabs(g.p)) + std::llabs(g.p)) % std::llabs(g.p)}), epsilon);
}

bool null_one_equivalent(const NullOneRecord &a, const NullOneRecord &b) {
    if (std::llabs(a.source.p) != std::llabs(b.source.p)) return false;
    const long long m = a.source.p * a.source.p;
    const long long x = twisted_denominator(a), y = twisted_denominator(b);
    return mod(x - y, m) == 0 || mod(static_cast<__int128>(x) * y, m) == 1;
}

bool null_one_mirror(const NullOneRecord &a, const NullOneRecord &b) {
    if (std::llabs(a.source.p) != std::llabs(b.source.p)) return false;
    const long long m = a.source.p * a.source.p;
    const long long x = twisted_denominator(a), y = twisted_denominator(b);
    return mod(x + y, m) == 0 || mod(static_cast<__int128>(x) * y, m) == m - 1;
}

bool verify_null_one(const NullOneRecord &r, const NullOptions &opt) {
    const LinkDiagram d = fourplat_diagram(r.derived_vector);
    NullOptions o = opt;
    o.depth = std::min(o.depth, 1);
    const NullResult res = n_general_interval(d, o);
    return !res.upper_exceeded && res.upper == 1;
}

NullOneTable enumerate_null_one(int max_cr, int verify_up_to, int jobs) {
    if (max_cr < 0 || max_cr > 24) throw std::invalid_argument("max_cr must lie in 0..24");
    NullOneTable t;
    const int half = max_cr / 2;
    // positive vectors with entry sum <= half and last entry >= 2 list every p/q with 1 < q < p once
    std::vector<TangleVector> sources;
    std::vector<TangleVector> stack{{}};
    while (!stack.empty()) {
        TangleVector v = stack.back();
        stack.pop_back();
        int sum = 0;
        for (int a : v) sum += a;
        if (!v.empty() && v.back() >= 2) sources.push_back(v);
        for (int a = 1; sum + a <= half; ++a) {
            TangleVector w = v;
            w.push_back(a);
            stack.push_back(w);
        }
    }
    std::vector<NullOneRecord> all;
    for (const TangleVector &v : sources) {
        const Fraction f = cf_outer_first(v);
        if (f.p % 2 == 0) continue;
        for (int eps : {1, -1}) all.push_back(null_one_from_rational(v, eps));
    }
    std::sort(all.begin(), all.end(), [](const NullOneRecord &a, const NullOneRecord &b) {
        if (a.source.p != b.source.p) return a.source.p < b.source.p;
        if (a.source.q != b.source.q) return a.source.q < b.source.q;
        return a.epsilon > b.epsilon;
    });
    for (NullOneRecord &r : all) {
        bool dup = false;
        for (const NullOneRecord &k : t.records)
            if (null_one_equivalent(k, r)) {
                dup = true;
                break;
            }
        if (dup) continue;
        for (const NullOneRecord &k : t.records)
            if (null_one_mirror(k, r)) r.mirror_of_earlier = true;
        t.records.push_back(r);
    }
    std::sort(t.records.begin(), t.records.end(), [](const NullOneRecord &a, const NullOneRecord &b) {
        if (a.derived.p != b.derived.p) return a.derived.p < b.derived.p;
        return a.derived.q < b.derived.q;
    });

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < t.records.size(); i = next++)
            if (t.records[i].crossing_number <= verify_up_to) t.records[i].verified = verify_null_one(t.records[i]);
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < std::max(1, jobs); ++j) pool.emplace_back(work);
    work();
    for (auto &th : pool) th.join();

    for (const NullOneRecord &r : t.records) ++t.count_by_crossings[r.crossing_number];
    return t;
}

std::string null_one_csv(const NullOneTable &t) {
    std::ostringstream out;
    out << "p,q,epsilon,derived_p,derived_q,vector,crossing_number,verified\n";
    for (const NullOneRecord &r : t.records) {
        out << r.source.p << ',' << r.source.q << ',' << r.epsilon << ',' << r.derived.p << ',' << r.derived.q << ",\"(";
        for (std::size_t i = 0; i < r.derived_vector.size(); ++i) out << (i ? "," : "") << r.derived_vector[i];
        out << ")\"," << r.crossing_number << ',' << (r.verified ? "true" : "false") << '\n';
    }
    return out.str();
}

TangleVector family_vector(Family kind, int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("family parameters must be positive");
    if (kind == Family::A) return {-2 * a, -2, -2 * b, 2, 2 * a, 2 * b};
    return {-2 * b, -2, -2 * a, 2 * b, 2, 2 * a};
}

TangleVector family_standard_vector(Family kind, int a, int b) {
    TangleVector v = family_vector(kind, a, b);
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return v;
}

NullResult verify_family(Family kind, int a, int b, const NullOptions &opt) {
    return n_general_interval(fourplat_diagram(family_standard_vector(kind, a, b)), opt);
}

namespace {

void check_high_null_args(int m, int k) {
    if (m % 2 == 0) throw std::invalid_argument("m must be odd");
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("k must be a positive even number");
    if (m < k + 1) throw std::invalid_argument("m must be at least k + 1");
}

} // namespace

long long count_high_null(int m, int k) {
    check_high_null_args(m, k);
    const long long n = (m - 1) / 2 - k / 2;
    return binomial(n + k - 1, k - 1);
}

long long count_high_null_unordered(int m, int k) {
    check_high_null_args(m, k);
    const int n = (m - 1) / 2 - k / 2;
    // partitions of n into at most k parts
    std::vector<std::vector<long long>> p(static_cast<std::size_t>(n + 1), std::vector<long long>(static_cast<std::size_t>(k + 1), 0));
    for (int j = 0; j <= k; ++j) p[0][static_cast<std::size_t>(j)] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j)
            p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] +
                (i >= j ? p[static_cast<std::size_t>(i - j)][static_cast<std::size_t>(j)] : 0);
    return p[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::vector<TangleVector> high_null_vectors(int m, int k) {
    check_high_null_args(m, k);
    const int target = m + k - 1;
    std::vector<TangleVector> out;
    TangleVector cur;
    std::function<void(int)> go = [&](int left) {
        const int i = static_cast<int>(cur.size());
        if (i == k) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int a = 2; a <= left - 2 * (k - i - 1); a += 2) {
            cur.push_back(i % 2 == 0 ? a : -a);
            go(left - a);
            cur.pop_back();
        }
    };
    go(target);
    return out;
}

} // namespace nullify
