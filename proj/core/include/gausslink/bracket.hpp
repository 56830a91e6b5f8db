#pragma once

#include <vector>

#include "gausslink/diagram.hpp"

namespace gausslink {

/// Arrow of a counting pattern. sign 0 matches either crossing sign.
struct PatternArrow {
    Endpoint tail;
    Endpoint head;
    int sign = 0;  // 0 = unconstrained, otherwise +1 / -1
    auto operator<=>(const PatternArrow&) const = default;
};

/// A small arrow diagram used as a counting pattern, together with the
/// equivalence mode under which subdiagrams are matched against it.
struct ArrowPattern {
    std::vector<int> component_lengths;
    std::vector<PatternArrow> arrows;
    Equivalence mode = Equivalence::RotateAndPermute;
};

struct PatternTerm {
    long long coefficient = 1;
    ArrowPattern pattern;
};
using PatternSum = std::vector<PatternTerm>;

/// Built-in degree-1 and degree-2 patterns.
/// lk12: one arrow from component 0 to component 1 (counts lk in that
/// direction; does not permute components).
ArrowPattern lk12_pattern();
/// Two inter-component arrows in opposite directions, unsigned, unbased.
ArrowPattern opposite_pair_pattern();
/// Two inter-component arrows in the same direction, unsigned, unbased.
ArrowPattern same_pair_pattern();

/// The bracket <P, G>: sum over arrow subsets of G whose induced
/// subdiagram matches P under P's mode, each subset weighted by the
/// product of its crossing signs in G. Each subset is counted once.
/// Throws std::invalid_argument when P is based-exact and the component
/// counts of P and G differ.
long long bracket(const ArrowPattern& p, const GaussDiagram& g);

/// Sum of coefficient * bracket(pattern, g) over the terms.
long long bracket_sum(const PatternSum& ps, const GaussDiagram& g);

/// The subdiagram of g spanned by the given arrows. All components are
/// kept (possibly with zero slots); slot order is inherited from g.
GaussDiagram induced_subdiagram(const GaussDiagram& g, const std::vector<int>& arrow_ids);

enum class PairClass { SType, TType, NotInterComponent };

/// Classifies an unordered pair of arrows of a two-component diagram:
/// SType = inter-component arrows in opposite directions, TType = same
/// direction, NotInterComponent otherwise.
/// Throws std::invalid_argument unless g has exactly two components.
PairClass classify_pair(int arrow_a, int arrow_b, const GaussDiagram& g);

}  // namespace gausslink
