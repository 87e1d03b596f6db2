#pragma once

#include <map>
#include <string>
#include <vector>

#include "nullify/nullification.hpp"
#include "nullify/rational.hpp"

namespace nullify {

// K' = (a_1..a_k, eps, -a_k..-a_1) built from K = (a_1..a_k) with p/q = a_1 + 1/(a_2 + ...)
struct NullOneRecord {
    Fraction source;
    TangleVector source_vector;
    int epsilon = 1;
    Fraction derived; // p^2/(eps + pq)
    TangleVector derived_vector;
    int crossing_number = 0; // 2 Cr(K)
    bool verified = false;
    bool mirror_of_earlier = false; // some earlier record is its mirror image
};

// positive vector with cf_outer_first(v) == p/q, 0 < q < p
TangleVector outer_first_vector(Fraction f);

NullOneRecord null_one_from_rational(const TangleVector &v, int epsilon);
NullOneRecord null_one_from_fraction(Fraction f, int epsilon);
bool null_one_equivalent(const NullOneRecord &a, const NullOneRecord &b);
bool null_one_mirror(const NullOneRecord &a, const NullOneRecord &b);

// runs the general search on the 4-plat of the derived vector; true when one smoothing suffices
bool verify_null_one(const NullOneRecord &r, const NullOptions &opt = {});

struct NullOneTable {
    std::vector<NullOneRecord> records; // sorted by derived fraction
    std::map<int, int> count_by_crossings;
};
// verify_up_to: records whose derived crossing number is at most this get verified
NullOneTable enumerate_null_one(int max_cr, int verify_up_to = 12, int jobs = 1);
std::string null_one_csv(const NullOneTable &t);

enum class Family { A, B };
// signs as drawn for the family (uniform per box, braid-like)
TangleVector family_vector(Family kind, int a, int b);
// the same knot in the usual vector convention: every second entry negated
TangleVector family_standard_vector(Family kind, int a, int b);
// engine check on the diagram of the standard vector
NullResult verify_family(Family kind, int a, int b, const NullOptions &opt = {});

// ordered sign-alternating even vectors of length k with sum of |a_i| = m + k - 1
long long count_high_null(int m, int k);
// the same vectors counted as multisets of |a_i|
long long count_high_null_unordered(int m, int k);
std::vector<TangleVector> high_null_vectors(int m, int k);

} // namespace nullify
