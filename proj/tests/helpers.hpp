#pragma once

#include <vector>

#include "gausslink/diagram.hpp"

namespace gausslink::testing {

inline GaussDiagram make_diagram(std::vector<int> lengths,
                                 std::vector<std::array<int, 5>> arrows) {
    GaussDiagram d;
    d.component_lengths = std::move(lengths);
    for (const auto& a : arrows)
        d.arrows.push_back({{a[0], a[1]}, {a[2], a[3]}, a[4]});
    return d;
}

// positive Hopf-type diagram: one arrow each way
inline GaussDiagram hopf() {
    return make_diagram({2, 2}, {{0, 0, 1, 0, 1}, {1, 1, 0, 1, 1}});
}

// the four based representatives of the opposite-direction pair class
inline std::vector<GaussDiagram> opposite_pair_representatives() {
    return {
        make_diagram({2, 2}, {{0, 0, 1, 0, 1}, {1, 1, 0, 1, 1}}),
        make_diagram({2, 2}, {{0, 0, 1, 1, 1}, {1, 0, 0, 1, 1}}),
        make_diagram({2, 2}, {{0, 1, 1, 0, 1}, {1, 1, 0, 0, 1}}),
        make_diagram({2, 2}, {{0, 1, 1, 1, 1}, {1, 0, 0, 0, 1}}),
    };
}

// the four based representatives of the same-direction pair class
inline std::vector<GaussDiagram> same_pair_representatives() {
    return {
        make_diagram({2, 2}, {{0, 0, 1, 0, 1}, {0, 1, 1, 1, 1}}),
        make_diagram({2, 2}, {{0, 0, 1, 1, 1}, {0, 1, 1, 0, 1}}),
        make_diagram({2, 2}, {{1, 0, 0, 0, 1}, {1, 1, 0, 1, 1}}),
        make_diagram({2, 2}, {{1, 0, 0, 1, 1}, {1, 1, 0, 0, 1}}),
    };
}

}  // namespace gausslink::testing
