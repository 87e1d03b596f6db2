#include "nullify/diagram.hpp"

#include <cstdlib>
#include <numeric>

namespace nullify {

LinkDiagram braid_closure(int strands, const std::vector<int> &word) {
    if (strands < 1) throw DiagramError("a braid needs at least one strand");
    std::vector<int> first(static_cast<std::size_t>(strands)), cur(static_cast<std::size_t>(strands));
    std::iota(first.begin(), first.end(), 0);
    cur = first;
    int next = strands;
    std::vector<Crossing> xs;
    for (int letter : word) {
        const int i = std::abs(letter) - 1;
        if (letter == 0 || i + 1 >= strands) throw DiagramError("braid letter " + std::to_string(letter) + " out of range");
        const int left_in = cur[static_cast<std::size_t>(i)], right_in = cur[static_cast<std::size_t>(i + 1)];
        const int left_out = next++, right_out = next++;
        Crossing x;
        if (letter > 0) {
            // left strand passes over to the right
            x.e = {right_in, right_out, left_out, left_in};
            x.sign = 1;
        } else {
            // left strand passes under to the right
            x.e = {left_in, right_in, right_out, left_out};
            x.sign = -1;
        }
        xs.push_back(x);
        cur[static_cast<std::size_t>(i)] = left_out;
        cur[static_cast<std::size_t>(i + 1)] = right_out;
    }
    // identify the top of every strand with its bottom
    std::vector<int> rename(static_cast<std::size_t>(next));
    std::iota(rename.begin(), rename.end(), 0);
    int loops = 0;
    for (int p = 0; p < strands; ++p) {
        if (cur[static_cast<std::size_t>(p)] == first[static_cast<std::size_t>(p)])
            ++loops;
        else
            rename[static_cast<std::size_t>(cur[static_cast<std::size_t>(p)])] = first[static_cast<std::size_t>(p)];
    }
    for (auto &x : xs)
        for (int &l : x.e) l = rename[static_cast<std::size_t>(l)];
    return LinkDiagram(std::move(xs), loops);
}

LinkDiagram torus_diagram(int p, int q) {
    if (p < 2 || q < 2) throw DiagramError("torus_diagram needs p >= 2 and q >= 2");
    std::vector<int> word;
    for (int k = 0; k < p; ++k)
        for (int i = 1; i < q; ++i) word.push_back(i);
    return braid_closure(q, word);
}

} // namespace nullify
