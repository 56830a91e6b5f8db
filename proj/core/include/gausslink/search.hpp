#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gausslink/diagram.hpp"
#include "gausslink/moves.hpp"

namespace gausslink {

enum class SearchStatus {
    Found,         // optimal cost certified within the crossing bound
    Unreachable,   // search space exhausted within the bound, no path
    Inconclusive,  // state budget hit before certification
};

struct SearchResult {
    SearchStatus status = SearchStatus::Inconclusive;
    long long min_negative_omega2 = -1;  // valid when status == Found
    long long states_explored = 0;
    std::vector<MoveSite> witness;  // chained sites from the source diagram
};

/// Least number of crossing-decreasing inter-component Omega2 moves over
/// all move sequences from source to target that stay within max_crossings.
/// Cost-optimal search over canonical forms (rotate-and-permute); all other
/// moves cost zero. Admissible guidance by the T gap keeps the explored
/// region small.
SearchResult min_negative_omega2(const GaussDiagram& source, const GaussDiagram& target,
                                 int max_crossings, long long max_states);

std::string search_result_to_json(const SearchResult& r);

}  // namespace gausslink
