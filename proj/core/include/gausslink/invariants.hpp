#pragma once

#include "gausslink/diagram.hpp"

namespace gausslink {

/// Signed (lk01, lk10) and raw (c01, c10) counts of inter-component
/// arrows by direction, for a two-component diagram.
struct LinkingCounts {
    long long lk01 = 0;
    long long lk10 = 0;
    long long c01 = 0;
    long long c10 = 0;
    bool operator==(const LinkingCounts&) const = default;
};

/// Throws std::invalid_argument unless g has exactly two components.
LinkingCounts linking_numbers(const GaussDiagram& g);

/// Closed forms for the two degree-2 inter-component brackets. Both agree
/// with the subset-enumeration bracket of the corresponding built-in
/// pattern (opposite_pair_pattern / same_pair_pattern).
long long multiple_linking_s(const GaussDiagram& g);
long long multiple_linking_t(const GaussDiagram& g);

/// |T(to) - T(from)|: a lower bound on the number of inter-component
/// Omega2 moves in any move sequence connecting the two diagrams.
long long rii_lower_bound(const GaussDiagram& from, const GaussDiagram& to);

struct InvariantReport {
    long long lk01 = 0;
    long long lk10 = 0;
    long long s = 0;
    long long t = 0;
    int crossings = 0;
    int components = 0;
    long long rii_lower_bound_to_unlink = 0;
    bool operator==(const InvariantReport&) const = default;
};

/// Full report for a two-component diagram. The RII bound is taken
/// against the crossingless unlink with the same component count.
InvariantReport compute_report(const GaussDiagram& g);

}  // namespace gausslink
