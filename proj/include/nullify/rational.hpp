#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nullify/diagram.hpp"

namespace nullify {

// beta/alpha kept as p/q with q > 0 and gcd(p, q) = 1
struct Fraction {
    long long p = 0;
    long long q = 1;
    bool operator==(const Fraction &o) const { return p == o.p && q == o.q; }
    std::string to_string() const { return std::to_string(p) + "/" + std::to_string(q); }
};

using TangleVector = std::vector<int>;

Fraction make_fraction(long long p, long long q);
// a_n + 1/(a_{n-1} + ... + 1/a_1); zero is allowed only in the last place
Fraction cf_to_fraction(const TangleVector &v);
// a_1 + 1/(a_2 + ... + 1/a_n), the same link with q replaced by +-q^-1 mod p
Fraction cf_outer_first(const TangleVector &v);
// all-positive vector of odd length, the smaller of itself and its reversal
TangleVector fraction_to_canonical_vector(Fraction f);
// entries all even, length 2g; cf_to_fraction of it is f up to q mod p
TangleVector even_expansion(Fraction f);

// same unoriented 2-bridge link
bool fourplat_equals(Fraction a, Fraction b);
// same up to mirror image
bool fourplat_equals_up_to_mirror(Fraction a, Fraction b);

int fourplat_signature(Fraction f);
int fourplat_crossing_number(const TangleVector &even);

// reverse_second only matters for two-component 4-plats
LinkDiagram fourplat_diagram(const TangleVector &v, bool reverse_second = false);

struct BoxClassification {
    std::vector<int> parallel;      // 1-based entry indices
    std::vector<int> antiparallel;
    std::vector<int> empty;         // zero entries
};
BoxClassification classify_parallel_antiparallel(const TangleVector &v, bool reverse_second = false);
int fourplat_nd(const TangleVector &v, bool reverse_second = false);

nlohmann::json classification_to_json(const BoxClassification &c);

} // namespace nullify
