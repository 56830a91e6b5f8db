#pragma once

#include "gausslink/diagram.hpp"

namespace gausslink {

/// (2,2n)-torus style diagram: two circles of length 2n, all crossings
/// positive, directions alternating (arrow i joins slot i-1 on each circle,
/// odd i pointing 0 -> 1, even i pointing 1 -> 0).
GaussDiagram family_torus(int n);

/// family_torus(n) after one positive inter-component Omega2 move (the
/// first enumerated site, so the result is deterministic).
GaussDiagram family_torus_prime(int n);

/// Two crossingless circles after n nested positive inter-component
/// Omega2 moves: 2n crossings, n positive and n negative arrows, all
/// pointing 0 -> 1.
GaussDiagram family_nested_bigons(int n);

/// Virtual family with lk01 = n, lk10 = n - m: the torus block of 2n
/// positive crossings followed by a block of m negative arrows 1 -> 0.
/// Defined by its bracket values; S = n(n-m).
GaussDiagram family_l(int m, int n);

/// Virtual family with n positive and m negative arrows in each direction,
/// in blocks. Defined by its bracket values; T = (n-m)^2 - (n+m).
GaussDiagram family_k(int m, int n);

}  // namespace gausslink
