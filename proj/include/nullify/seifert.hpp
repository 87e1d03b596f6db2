#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "nullify/diagram.hpp"
#include "nullify/laurent.hpp"

namespace nullify {

using IntMatrix = std::vector<std::vector<long long>>;

class IntSymMatrix {
public:
    IntSymMatrix() = default;
    // throws std::invalid_argument unless square and symmetric
    explicit IntSymMatrix(IntMatrix rows);
    static IntSymMatrix symmetrized(const IntMatrix &m); // m + m^T

    int size() const { return static_cast<int>(rows_.size()); }
    long long at(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const IntMatrix &rows() const { return rows_; }

private:
    IntMatrix rows_;
};

struct BraidWord {
    int strands = 1;
    // letter k > 0 is sigma_k, -k its inverse
    std::vector<int> letters;
};

struct SeifertData {
    IntMatrix matrix;
    // first Betti number of the surface the matrix was read from
    int betti = 0;
    int genus = 0;
    int seifert_circles = 0;
    // Cr - s + 1 of the input diagram
    int diagram_betti = 0;
    int vogel_moves = 0;
    BraidWord braid;
};

// Vogel moves until every face meets at most two Seifert circles, coherently.
LinkDiagram braid_like(const LinkDiagram &d, int *moves = nullptr);
// Reads the closed braid of a connected braid-like diagram.
BraidWord read_braid(const LinkDiagram &d);
BraidWord braid_word(const LinkDiagram &d, int *moves = nullptr);

// Seifert matrix of the standard surface of a closed braid.
IntMatrix braid_seifert_matrix(const BraidWord &b);
SeifertData seifert_matrix(const LinkDiagram &d);

BigInt determinant(const IntMatrix &m);
// det(t M - M^T)
LaurentPoly1 alexander_from_seifert(const IntMatrix &m);
// shifts to lowest exponent 0 and makes the lowest coefficient positive
LaurentPoly1 normalize_unit(const LaurentPoly1 &p);

int signature_diag(const IntSymMatrix &a);
// nullopt when no series is found within the node budget
std::optional<int> signature_sigma_series(const IntSymMatrix &a, long budget = 200000);
int signature(const LinkDiagram &d);

struct GenusValue {
    int twice = 0; // 2g
    bool valid = true; // false when 2g is odd
};
GenusValue genus_alternating(int n_d, int components);

nlohmann::json matrix_to_json(const IntMatrix &m);

} // namespace nullify
