#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nullify/diagram.hpp"
#include "nullify/fixtures.hpp"
#include "nullify/polynomials.hpp"

namespace nullify {

class SearchLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class NullKind { Diagram, MinimumDiagram, GeneralInterval };
const char *to_string(NullKind k);

struct WitnessStep {
    int crossing = -1;   // id in `diagram`
    std::string diagram; // PD of the diagram the crossing is smoothed in
    int components_after = 0;
    // when set, `diagram` is r2_push(previous result, r2_over, r2_under) instead of the result itself
    int r2_over = -1, r2_under = -1;
};

struct NullResult {
    NullKind kind = NullKind::Diagram;
    int lower = 0;
    int upper = 0;
    bool upper_exceeded = false; // no witness within the depth budget; upper is then "> depth"
    std::vector<WitnessStep> witness;
    std::vector<Triviality> certification; // state after every step, last one trivial
    bool exact() const { return !upper_exceeded && lower == upper; }
};

nlohmann::json to_json(const NullResult &r);

struct NullOptions {
    int search_limit = 14; // largest crossing count for the subset search
    int depth = 4;         // smoothings tried by the general search
    bool passages = true;  // also try crossing changes at the cost of two smoothings
    bool bands = true;     // smoothing a crossing made by pushing one edge over another across a face
    SimplifyOptions simplify;
};

// twist regions: crossings joined by bigons whose sides alternate
struct TwistRegions {
    std::vector<int> region_of; // per crossing
    std::vector<std::vector<int>> members;
    std::vector<bool> parallel; // per region; single crossings count as parallel
};
TwistRegions twist_regions(const LinkDiagram &d);

// A crossing change done by two smoothings: an R2 move beside crossing c gives
// `diagram`, where smoothing `extra` and then c yields switch_crossing(d, c).
struct Passage {
    LinkDiagram diagram;
    int over = -1, under = -1; // darts handed to r2_push
    int extra = -1;
};
std::optional<Passage> find_passage(const LinkDiagram &d, int c);

NullResult n_diagram(const LinkDiagram &d, const NullOptions &opt = {});
int n_d_alternating(const LinkDiagram &d);
NullResult n_general_interval(const LinkDiagram &d, const NullOptions &opt = {});
// upper bound for the restricted number over the supplied minimum diagrams
NullResult n_restricted_upper(const std::vector<LinkDiagram> &minimum_diagrams, const NullOptions &opt = {});

// smooths the witness step by step and certifies the end; empty string when it replays
std::string replay_witness(const LinkDiagram &d, const NullResult &r, const SimplifyOptions &opt = {});

struct BoundsReport {
    std::string name;
    std::optional<int> signature, unknotting;
    int lower = 0, upper = 0;
    bool upper_exceeded = false;
    bool ok = true;
    std::vector<std::string> notes;
};
BoundsReport check_bounds(const FixtureRecord &rec, const NullResult &r);
nlohmann::json to_json(const BoundsReport &b);

struct TwistRegionReport {
    std::vector<int> parallel_sizes; // |P_i| for regions of two or more crossings
    int antiparallel = 0;            // A
    int antiparallel_crossings = 0;
    int singles = 0;                 // S
    int bound(int c) const;
};
TwistRegionReport twist_region_bound(const LinkDiagram &d);
nlohmann::json to_json(const TwistRegionReport &t);

struct NullWrithe {
    int writhe = 0;      // sum of signs over a minimal nullifying set
    int signature = 0;
    std::vector<int> crossings;
    bool holds() const { return signature + writhe == 0; }
};
NullWrithe nullification_writhe(const LinkDiagram &d, const NullOptions &opt = {});

} // namespace nullify
