#pragma once

#include <vector>

#include <json.hpp>

#include "nullify/rational.hpp"
#include "nullify/tangle_builder.hpp"

namespace nullify {

struct MontesinosParams {
    std::vector<TangleVector> tangles; // each (a_1, ..., a_n, 0), entries of one sign
    int e = 0;
    // reverses the k-th component to be oriented; components are met through
    // the top closure arc, the bottom closure arc, then the arcs between tangles
    std::vector<bool> flip;
};

// fractions as {beta, alpha} with 0 < |beta| < alpha
MontesinosParams montesinos_from_fractions(const std::vector<Fraction> &fractions, int e);
TangleVector tangle_vector(Fraction f);
void validate(const MontesinosParams &m);

enum class MontesinosType { I, II };
const char *to_string(MontesinosType t);

struct MontesinosDiagram {
    TangleBuilder::Built built;
    std::vector<int> first_box; // box of entry 1 of every tangle
    int e_box = 0;
    // the two arcs leaving the right side of tangle i (the last pair leaves the e box)
    std::vector<int> top_wire, bottom_wire;
    std::vector<BoxClassification> classes; // per tangle, 1-based entries
    BoxClassification e_class;              // entry 1 is the e box
};

MontesinosDiagram build_montesinos(const MontesinosParams &m);
LinkDiagram montesinos_diagram(const MontesinosParams &m);

// throws if the pairs disagree, which would contradict orientation flux
MontesinosType montesinos_type(const MontesinosDiagram &d);
// whether each junction pair is parallel, in the order of top_wire
std::vector<bool> junction_parallel(const MontesinosDiagram &d);

int montesinos_c(const MontesinosDiagram &d, const MontesinosParams &m);
int montesinos_seifert_count(const MontesinosParams &m);
int montesinos_seifert_count(const MontesinosDiagram &d, const MontesinosParams &m);
int montesinos_nd_bound(const MontesinosParams &m);
int montesinos_nd_bound(const MontesinosDiagram &d, const MontesinosParams &m);

// entries next to a parallel entry are anti-parallel
bool neighbour_rule_holds(const BoxClassification &c, std::size_t entries);

MontesinosParams montesinos_from_json(const nlohmann::json &j);
nlohmann::json montesinos_to_json(const MontesinosParams &m);

} // namespace nullify
