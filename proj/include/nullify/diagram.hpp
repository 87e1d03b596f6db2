#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace nullify {

/* Slots run counterclockwise from the incoming under-strand, so the
   under-strand runs 0 -> 2 and the over-strand joins 1 and 3:

       2     1
        \   /
         \ /
          /
         / \
        /   \
       3     0

   positive (right-handed): over-strand 3 -> 1; negative: 1 -> 3. */
struct Crossing {
    std::array<int, 4> e{};
    int sign = 1;

    int over_in() const { return sign > 0 ? 3 : 1; }
    int over_out() const { return sign > 0 ? 1 : 3; }
    bool incoming(int slot) const { return slot == 0 || slot == over_in(); }
};

struct Dart {
    int crossing = -1;
    int slot = -1;
};

class DiagramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LinkDiagram {
public:
    LinkDiagram() = default;
    // Labels may be arbitrary integers; they are compacted to 0..2n-1 keeping their order.
    LinkDiagram(std::vector<Crossing> crossings, int free_loops);
    static LinkDiagram unlink(int components);

    const std::vector<Crossing> &crossings() const { return crossings_; }
    const Crossing &crossing(int c) const { return crossings_.at(static_cast<std::size_t>(c)); }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int edge_count() const { return 2 * crossing_count(); }
    int free_loops() const { return free_loops_; }

    Dart head(int e) const { return head_[static_cast<std::size_t>(e)]; }
    Dart tail(int e) const { return tail_[static_cast<std::size_t>(e)]; }
    // edge following e along its component
    int next_edge(int e) const;
    // the other end of the edge sitting at (c, s)
    Dart opposite(int c, int s) const;

    // Face of the corner between slots s-1 and s at crossing c.
    int face_of(int c, int s) const { return face_of_dart_[static_cast<std::size_t>(4 * c + s)]; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    // darts (4c+s) bounding each face; a dart's face lies on the right of the
    // edge at slot s traversed away from c
    const std::vector<std::vector<int>> &faces() const { return faces_; }

    // component of every edge; free loops get the indices after those
    const std::vector<int> &component_of_edge() const { return comp_of_edge_; }
    int component_count() const { return comp_count_ + free_loops_; }
    int crossing_component_count() const { return comp_count_; }
    // connected pieces of the projection graph (free loops excluded)
    const std::vector<int> &piece_of_crossing() const { return piece_of_crossing_; }
    int piece_count() const { return piece_count_; }

    int writhe() const;

    bool operator==(const LinkDiagram &o) const {
        return free_loops_ == o.free_loops_ && same_crossings(o);
    }
    bool operator!=(const LinkDiagram &o) const { return !(*this == o); }

private:
    bool same_crossings(const LinkDiagram &o) const;
    void build();

    std::vector<Crossing> crossings_;
    int free_loops_ = 0;
    std::vector<Dart> head_, tail_;
    std::vector<int> face_of_dart_;
    std::vector<std::vector<int>> faces_;
    std::vector<int> comp_of_edge_;
    int comp_count_ = 0;
    std::vector<int> piece_of_crossing_;
    int piece_count_ = 0;
};

struct SeifertDecomposition {
    int circle_count = 0;
    // circle index of the dart (4c+s); free loops are circles with no darts
    std::vector<int> circle_of_dart;
    // circle index of every edge
    std::vector<int> circle_of_edge;
};

struct SimplifyOptions {
    int r3_depth = 2;
    int max_rounds = 10000;
};

// Pairing of the four slots at a crossing when it is removed.
enum class Pairing { Straight, Oriented };

LinkDiagram parse_pd(const std::string &text, int components_if_empty = 1);
LinkDiagram parse_gauss(const std::string &text);
std::string serialize_pd(const LinkDiagram &d);
std::string serialize_gauss(const LinkDiagram &d);
// relabel edges so each component carries consecutive labels in traversal order
LinkDiagram relabeled(const LinkDiagram &d);

LinkDiagram smooth(const LinkDiagram &d, int c);
LinkDiagram smooth_all(const LinkDiagram &d, const std::vector<int> &cs);
LinkDiagram switch_crossing(const LinkDiagram &d, int c);
LinkDiagram remove_crossings(const LinkDiagram &d, const std::vector<int> &cs, Pairing pairing);
LinkDiagram mirror(const LinkDiagram &d);
LinkDiagram reverse_component(const LinkDiagram &d, int component);
LinkDiagram reverse_all(const LinkDiagram &d);
LinkDiagram disjoint_union(const LinkDiagram &a, const LinkDiagram &b);
// split into connected pieces, free loops returned separately as a count
std::vector<LinkDiagram> split_pieces(const LinkDiagram &d);

SeifertDecomposition seifert_circles(const LinkDiagram &d);
bool is_alternating(const LinkDiagram &d);
std::vector<int> nugatory_crossings(const LinkDiagram &d);
bool is_reduced(const LinkDiagram &d);
LinkDiagram reduce_alternating(const LinkDiagram &d);

// Reidemeister III on the triangle whose corner at crossing c lies between
// slots s-1 and s; the strand opposite that corner slides across c.
// Returns false if the triangle does not admit the move.
bool r3_move(const LinkDiagram &d, int c, int s, LinkDiagram &out);
std::vector<std::pair<int, int>> r3_candidates(const LinkDiagram &d);
LinkDiagram simplify(const LinkDiagram &d, const SimplifyOptions &opt = {});
// one greedy reduction (nugatory or R2); false if none applies
bool reduce_once(const LinkDiagram &d, LinkDiagram &out);
// Reidemeister II pushing the edge of dart `over` across a face onto the edge
// of dart `under`; both darts (4c+s) must bound the same face.
LinkDiagram r2_push(const LinkDiagram &d, int over, int under);

// closure of a braid word on n strands; letter +i is sigma_i, -i its inverse
LinkDiagram braid_closure(int strands, const std::vector<int> &word);
// T(p, q) as the closure of (s_1 ... s_{q-1})^p on q strands
LinkDiagram torus_diagram(int p, int q);

std::string canonical_key(const LinkDiagram &d);

} // namespace nullify
