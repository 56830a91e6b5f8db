#include "gausslink/bracket.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gausslink {

ArrowPattern lk12_pattern() {
    ArrowPattern p;
    p.component_lengths = {1, 1};
    p.arrows = {{{0, 0}, {1, 0}, 0}};
    p.mode = Equivalence::RotateBasepoints;
    return p;
}

ArrowPattern opposite_pair_pattern() {
    ArrowPattern p;
    p.component_lengths = {2, 2};
    p.arrows = {{{0, 0}, {1, 0}, 0}, {{1, 1}, {0, 1}, 0}};
    p.mode = Equivalence::RotateAndPermute;
    return p;
}

ArrowPattern same_pair_pattern() {
    ArrowPattern p;
    p.component_lengths = {2, 2};
    p.arrows = {{{0, 0}, {1, 0}, 0}, {{0, 1}, {1, 1}, 0}};
    p.mode = Equivalence::RotateAndPermute;
    return p;
}

GaussDiagram induced_subdiagram(const GaussDiagram& g, const std::vector<int>& arrow_ids) {
    // New position of each kept endpoint = rank of its slot among kept slots
    // of the same component, counted from g's base point.
    std::map<std::pair<int, int>, int> rank;  // (component, old position) -> new position
    std::vector<std::pair<int, int>> kept;
    for (int id : arrow_ids) {
        const Arrow& a = g.arrows[id];
        kept.push_back({a.tail.component, a.tail.position});
        kept.push_back({a.head.component, a.head.position});
    }
    std::sort(kept.begin(), kept.end());
    std::vector<int> counts(g.component_count(), 0);
    for (const auto& slot : kept) rank[slot] = counts[slot.first]++;

    GaussDiagram out;
    out.component_lengths = counts;
    for (int id : arrow_ids) {
        const Arrow& a = g.arrows[id];
        Arrow b = a;
        b.tail.position = rank[{a.tail.component, a.tail.position}];
        b.head.position = rank[{a.head.component, a.head.position}];
        out.arrows.push_back(b);
    }
    return out;
}

namespace {

// Does the (already transformed) diagram t equal the pattern up to sign
// wildcards? Arrows are matched by their endpoint pair.
bool equals_pattern(const GaussDiagram& t, const ArrowPattern& p) {
    if (t.component_lengths != p.component_lengths) return false;
    if (t.arrows.size() != p.arrows.size()) return false;
    std::map<std::pair<Endpoint, Endpoint>, int> by_ends;
    for (const Arrow& a : t.arrows) by_ends[{a.tail, a.head}] = a.sign;
    for (const PatternArrow& pa : p.arrows) {
        auto it = by_ends.find({pa.tail, pa.head});
        if (it == by_ends.end()) return false;
        if (pa.sign != 0 && pa.sign != it->second) return false;
    }
    return true;
}

bool matches(const GaussDiagram& induced, const ArrowPattern& p) {
    if (static_cast<int>(p.component_lengths.size()) != induced.component_count()) return false;
    if (p.arrows.size() != induced.arrows.size()) return false;

    bool found = false;
    // Same transformation walk as isomorphic(), but against a pattern.
    if (p.mode == Equivalence::BasedExact) return equals_pattern(induced, p);
    int k = induced.component_count();
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    bool permute = (p.mode == Equivalence::RotateAndPermute);
    do {
        GaussDiagram base = permute ? with_permuted_components(induced, perm) : induced;
        if (base.component_lengths == p.component_lengths) {
            std::vector<int> rot(k, 0);
            while (true) {
                if (equals_pattern(rotated(base, rot), p)) {
                    found = true;
                    break;
                }
                int c = 0;
                for (; c < k; ++c) {
                    int len = std::max(base.component_lengths[c], 1);
                    if (++rot[c] < len) break;
                    rot[c] = 0;
                }
                if (c == k) break;
            }
        }
        if (found || !permute) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

}  // namespace

long long bracket(const ArrowPattern& p, const GaussDiagram& g) {
    if (p.mode == Equivalence::BasedExact &&
        static_cast<int>(p.component_lengths.size()) != g.component_count())
        throw std::invalid_argument("bracket: component count mismatch for based-exact pattern");

    const int degree = static_cast<int>(p.arrows.size());
    const int n = g.crossing_count();
    if (degree > n) return 0;

    long long total = 0;
    std::vector<int> subset(degree);
    // enumerate all size-`degree` subsets of arrows
    auto recurse = [&](auto&& self, int start, int depth) -> void {
        if (depth == degree) {
            GaussDiagram sub = induced_subdiagram(g, subset);
            if (matches(sub, p)) {
                long long w = 1;
                for (int id : subset) w *= g.arrows[id].sign;
                total += w;
            }
            return;
        }
        for (int i = start; i <= n - (degree - depth); ++i) {
            subset[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    recurse(recurse, 0, 0);
    return total;
}

long long bracket_sum(const PatternSum& ps, const GaussDiagram& g) {
    long long total = 0;
    for (const PatternTerm& term : ps) total += term.coefficient * bracket(term.pattern, g);
    return total;
}

PairClass classify_pair(int arrow_a, int arrow_b, const GaussDiagram& g) {
    if (g.component_count() != 2)
        throw std::invalid_argument("classify_pair: diagram must have exactly two components");
    const Arrow& a = g.arrows[arrow_a];
    const Arrow& b = g.arrows[arrow_b];
    auto inter = [](const Arrow& x) { return x.tail.component != x.head.component; };
    if (!inter(a) || !inter(b)) return PairClass::NotInterComponent;
    return a.tail.component == b.tail.component ? PairClass::TType : PairClass::SType;
}

}  // namespace gausslink
