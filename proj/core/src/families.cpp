#include "gausslink/families.hpp"

#include <stdexcept>

#include "gausslink/moves.hpp"

namespace gausslink {

GaussDiagram family_torus(int n) {
    if (n < 0) throw std::invalid_argument("family_torus: n must be >= 0");
    GaussDiagram d;
    d.component_lengths = {2 * n, 2 * n};
    for (int i = 1; i <= 2 * n; ++i) {
        Endpoint a{0, i - 1}, b{1, i - 1};
        if (i % 2 == 1)
            d.arrows.push_back({a, b, 1});
        else
            d.arrows.push_back({b, a, 1});
    }
    return d;
}

GaussDiagram family_torus_prime(int n) {
    GaussDiagram d = family_torus(n);
    for (const MoveSite& s : enumerate_sites(d)) {
        if (s.polarity != Polarity::Positive || family_of(s.variant) != MoveFamily::Omega2)
            continue;
        if (s.insertions[0].component == s.insertions[1].component) continue;
        return apply_move(d, s);
    }
    throw std::logic_error("family_torus_prime: no positive inter-component site");
}

GaussDiagram family_nested_bigons(int n) {
    if (n < 0) throw std::invalid_argument("family_nested_bigons: n must be >= 0");
    GaussDiagram d;
    d.component_lengths = {2 * n, 2 * n};
    for (int i = 1; i <= n; ++i) {
        // pair i: positive arrow u_i at slot i-1, negative v_i at slot 2n-i,
        // both circles, both pointing 0 -> 1
        d.arrows.push_back({{0, i - 1}, {1, i - 1}, 1});
        d.arrows.push_back({{0, 2 * n - i}, {1, 2 * n - i}, -1});
    }
    return d;
}

GaussDiagram family_l(int m, int n) {
    if (n < 0 || m < 0) throw std::invalid_argument("family_l: need m, n >= 0");
    GaussDiagram d = family_torus(n);
    d.component_lengths = {2 * n + m, 2 * n + m};
    for (int t = 0; t < m; ++t)
        d.arrows.push_back({{1, 2 * n + t}, {0, 2 * n + t}, -1});
    return d;
}

GaussDiagram family_k(int m, int n) {
    if (n < 0 || m < 0) throw std::invalid_argument("family_k: need m, n >= 0");
    GaussDiagram d;
    int half = 2 * (n + m);
    d.component_lengths = {half, half};
    int pos0 = 0, pos1 = 0;
    // direction 0 -> 1: n positive then m negative
    for (int i = 0; i < n + m; ++i)
        d.arrows.push_back({{0, pos0++}, {1, pos1++}, i < n ? 1 : -1});
    // direction 1 -> 0: n positive then m negative
    for (int i = 0; i < n + m; ++i)
        d.arrows.push_back({{1, pos1++}, {0, pos0++}, i < n ? 1 : -1});
    return d;
}

}  // namespace gausslink
