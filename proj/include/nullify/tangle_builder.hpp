#pragma once

#include <array>
#include <map>
#include <vector>

#include "nullify/diagram.hpp"
#include "nullify/rational.hpp"

namespace nullify {

// Assembles unoriented tangle pictures and orients them at closure time.
// Corner angles are in units of 45 degrees: 1 = NE, 3 = NW, 5 = SW, 7 = SE.
class TangleBuilder {
public:
    struct Ends {
        int nw, ne, sw, se;
    };

    struct Built {
        LinkDiagram diagram;
        std::vector<int> box;       // box id of every crossing
        std::vector<bool> vertical; // twist direction of every crossing
        std::vector<std::array<int, 4>> angle; // corner of every slot of the oriented crossing
        std::vector<int> wire_dir;  // +1 if the wire is run from its first to its second label
        std::vector<int> component_of_wire;
    };

    Ends zero();     // arcs NW-NE and SW-SE
    Ends infinity(); // arcs NW-SW and NE-SE
    // one half-twist of the right-hand ends (horizontal) or the bottom ends (vertical);
    // sign +1 puts the SW-NE strand on top
    void twist_h(Ends &t, int sign, int box);
    void twist_v(Ends &t, int sign, int box);
    // vector entries a_1..a_n with a_n horizontal on the right; entry j gets box first_box + j - 1
    Ends rational(const std::vector<int> &v, int first_box);
    int wire(int a, int b);
    int label() { return fresh(); }
    // the numerator closure; seeds are wires whose components get oriented
    // from the first to the second label, in order; flip[k] reverses the k-th seeded component
    Built close(const std::vector<int> &seeds, const std::vector<bool> &flip) const;

private:
    struct Piece {
        std::array<int, 4> e; // counterclockwise from an end of the under-strand
        std::array<int, 4> angle;
        int box;
        bool vertical;
    };
    int fresh() { return next_++; }

    int next_ = 0;
    std::vector<Piece> pieces_;
    std::vector<std::array<int, 2>> wires_;
};

bool crossing_is_parallel(const TangleBuilder::Built &b, int c);
// entry j of v sits in box first_box + j - 1
BoxClassification classify_built(const TangleBuilder::Built &b, const TangleVector &v, int first_box);

} // namespace nullify
