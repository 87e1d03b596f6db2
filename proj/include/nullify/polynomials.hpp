#pragma once

#include <climits>
#include <stdexcept>

#include "nullify/diagram.hpp"
#include "nullify/laurent.hpp"

namespace nullify {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PolyOptions {
    int max_bracket_crossings = 26;
    long homfly_budget = 2000000; // recursive evaluations
};

// Jones polynomial via the Kauffman bracket state sum; unknot -> 1.
LaurentPoly1 jones(const LinkDiagram &d, const PolyOptions &opt = {});
// (-t^(1/2) - t^(-1/2))^(k-1)
LaurentPoly1 unlink_jones(int components);

// HOMFLY by skein recursion with v^-1 P+ - v P- = z P0; unknot -> 1.
LaurentPoly2 homfly(const LinkDiagram &d, const PolyOptions &opt = {});
// ((v^-1 - v) / z)^(k-1)
LaurentPoly2 unlink_homfly(int components);

// v = 1; z exponents stored doubled like every LaurentPoly1
LaurentPoly1 conway(const LaurentPoly2 &p);
inline constexpr int kNoDegree = INT_MIN;
int max_z_degree(const LaurentPoly2 &p);
// v = t, z = t^(1/2) - t^(-1/2)
LaurentPoly1 jones_from_homfly(const LaurentPoly2 &p);
// Alexander polynomial in t from the Conway polynomial, z = t^(1/2) - t^(-1/2)
LaurentPoly1 alexander_from_conway(const LaurentPoly1 &c);

enum class Triviality { ExactTrivial, PolyTrivial, Nontrivial };
const char *to_string(Triviality t);

Triviality is_trivial_link(const LinkDiagram &d, const SimplifyOptions &opt = {});

} // namespace nullify
