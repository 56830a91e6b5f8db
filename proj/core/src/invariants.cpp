#include "gausslink/invariants.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace gausslink {

LinkingCounts linking_numbers(const GaussDiagram& g) {
    if (g.component_count() != 2)
        throw std::invalid_argument("linking_numbers: diagram must have exactly two components");
    LinkingCounts lc;
    for (const Arrow& a : g.arrows) {
        if (a.tail.component == a.head.component) continue;
        if (a.tail.component == 0) {
            lc.lk01 += a.sign;
            ++lc.c01;
        } else {
            lc.lk10 += a.sign;
            ++lc.c10;
        }
    }
    return lc;
}

long long multiple_linking_s(const GaussDiagram& g) {
    LinkingCounts lc = linking_numbers(g);
    return lc.lk01 * lc.lk10;
}

long long multiple_linking_t(const GaussDiagram& g) {
    LinkingCounts lc = linking_numbers(g);
    long long twice = lc.lk01 * lc.lk01 - lc.c01 + lc.lk10 * lc.lk10 - lc.c10;
    assert(twice % 2 == 0);  // lk and c always share parity per direction
    return twice / 2;
}

long long rii_lower_bound(const GaussDiagram& from, const GaussDiagram& to) {
    return std::llabs(multiple_linking_t(to) - multiple_linking_t(from));
}

InvariantReport compute_report(const GaussDiagram& g) {
    LinkingCounts lc = linking_numbers(g);
    InvariantReport r;
    r.lk01 = lc.lk01;
    r.lk10 = lc.lk10;
    r.s = multiple_linking_s(g);
    r.t = multiple_linking_t(g);
    r.crossings = g.crossing_count();
    r.components = g.component_count();
    // the crossingless unlink has T = 0
    r.rii_lower_bound_to_unlink = std::llabs(r.t);
    return r;
}

}  // namespace gausslink
