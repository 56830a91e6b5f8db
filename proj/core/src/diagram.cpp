#include "gausslink/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gausslink {

int GaussDiagram::total_slots() const {
    return std::accumulate(component_lengths.begin(), component_lengths.end(), 0);
}

bool GaussDiagram::operator==(const GaussDiagram& other) const {
    if (component_lengths != other.component_lengths) return false;
    if (arrows.size() != other.arrows.size()) return false;
    std::vector<Arrow> a = arrows, b = other.arrows;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::vector<std::vector<SlotRef>> slot_table(const GaussDiagram& d) {
    std::vector<std::vector<SlotRef>> table(d.component_lengths.size());
    for (size_t c = 0; c < d.component_lengths.size(); ++c)
        table[c].resize(std::max(d.component_lengths[c], 0));
    for (size_t i = 0; i < d.arrows.size(); ++i) {
        const Arrow& a = d.arrows[i];
        for (int half = 0; half < 2; ++half) {
            Endpoint e = half ? a.head : a.tail;
            if (e.component < 0 || e.component >= d.component_count()) continue;
            if (e.position < 0 || e.position >= d.component_lengths[e.component]) continue;
            table[e.component][e.position] = SlotRef{static_cast<int>(i), half == 1};
        }
    }
    return table;
}

std::vector<std::string> validate(const GaussDiagram& d) {
    std::vector<std::string> errors;
    auto note = [&](std::string msg) { errors.push_back(std::move(msg)); };

    for (size_t c = 0; c < d.component_lengths.size(); ++c) {
        if (d.component_lengths[c] < 0)
            note("negative length for component " + std::to_string(c));
        else if (d.component_lengths[c] % 2 != 0)
            note("odd component length for component " + std::to_string(c));
    }

    if (d.total_slots() != 2 * d.crossing_count())
        note("total slots != 2 x arrow count");

    // coverage: count how many endpoints land on each slot
    std::vector<std::vector<int>> hits(d.component_lengths.size());
    for (size_t c = 0; c < d.component_lengths.size(); ++c)
        hits[c].assign(std::max(d.component_lengths[c], 0), 0);
    for (size_t i = 0; i < d.arrows.size(); ++i) {
        const Arrow& a = d.arrows[i];
        if (a.tail == a.head)
            note("arrow " + std::to_string(i) + " has tail == head");
        if (a.sign != 1 && a.sign != -1)
            note("arrow " + std::to_string(i) + " has sign outside {+1,-1}");
        for (int half = 0; half < 2; ++half) {
            Endpoint e = half ? a.head : a.tail;
            if (e.component < 0 || e.component >= d.component_count() ||
                e.position < 0 ||
                (e.component >= 0 && e.component < d.component_count() &&
                 e.position >= d.component_lengths[e.component])) {
                note("arrow " + std::to_string(i) + (half ? " head" : " tail") +
                     " endpoint out of range");
            } else {
                ++hits[e.component][e.position];
            }
        }
    }
    for (size_t c = 0; c < hits.size(); ++c)
        for (size_t p = 0; p < hits[c].size(); ++p)
            if (hits[c][p] != 1)
                note("slot (" + std::to_string(c) + "," + std::to_string(p) + ") covered " +
                     std::to_string(hits[c][p]) + " times");
    return errors;
}

bool is_structurally_sound(const GaussDiagram& d) {
    if (d.total_slots() != 2 * d.crossing_count()) return false;
    for (int len : d.component_lengths)
        if (len < 0) return false;
    std::vector<std::vector<int>> hits(d.component_lengths.size());
    for (size_t c = 0; c < d.component_lengths.size(); ++c)
        hits[c].assign(d.component_lengths[c], 0);
    for (const Arrow& a : d.arrows) {
        if (a.tail == a.head) return false;
        if (a.sign != 1 && a.sign != -1) return false;
        for (int half = 0; half < 2; ++half) {
            Endpoint e = half ? a.head : a.tail;
            if (e.component < 0 || e.component >= d.component_count()) return false;
            if (e.position < 0 || e.position >= d.component_lengths[e.component]) return false;
            ++hits[e.component][e.position];
        }
    }
    for (const auto& comp : hits)
        for (int h : comp)
            if (h != 1) return false;
    return true;
}

Endpoint next_slot(const GaussDiagram& d, Endpoint e) {
    int len = d.component_lengths[e.component];
    return {e.component, (e.position + 1) % len};
}

Endpoint prev_slot(const GaussDiagram& d, Endpoint e) {
    int len = d.component_lengths[e.component];
    return {e.component, (e.position + len - 1) % len};
}

GaussDiagram rotated(const GaussDiagram& d, const std::vector<int>& rotation) {
    GaussDiagram out = d;
    auto shift = [&](Endpoint& e) {
        int len = d.component_lengths[e.component];
        if (len > 0) e.position = (e.position - rotation[e.component] % len + len) % len;
    };
    for (Arrow& a : out.arrows) {
        shift(a.tail);
        shift(a.head);
    }
    return out;
}

GaussDiagram with_permuted_components(const GaussDiagram& d, const std::vector<int>& perm) {
    GaussDiagram out;
    out.component_lengths.resize(d.component_lengths.size());
    for (size_t c = 0; c < d.component_lengths.size(); ++c)
        out.component_lengths[perm[c]] = d.component_lengths[c];
    out.arrows = d.arrows;
    for (Arrow& a : out.arrows) {
        a.tail.component = perm[a.tail.component];
        a.head.component = perm[a.head.component];
    }
    return out;
}

GaussDiagram with_reversed_arrows(const GaussDiagram& d) {
    GaussDiagram out = d;
    for (Arrow& a : out.arrows) std::swap(a.tail, a.head);
    return out;
}

std::string encode(const GaussDiagram& d) {
    std::vector<Arrow> sorted = d.arrows;
    std::sort(sorted.begin(), sorted.end());
    std::string s;
    s.reserve(8 + d.component_lengths.size() * 2 + sorted.size() * 10);
    auto put = [&](int v) {
        s += static_cast<char>((v >> 8) & 0xff);
        s += static_cast<char>(v & 0xff);
    };
    put(d.component_count());
    for (int len : d.component_lengths) put(len);
    for (const Arrow& a : sorted) {
        put(a.tail.component);
        put(a.tail.position);
        put(a.head.component);
        put(a.head.position);
        put(a.sign == 1 ? 1 : 0);
    }
    return s;
}

namespace {

// Visits every transformation of d allowed by mode and calls fn(diagram).
// fn returns true to stop early.
template <typename Fn>
void for_each_transform(const GaussDiagram& d, Equivalence mode, Fn&& fn) {
    if (mode == Equivalence::BasedExact) {
        fn(d);
        return;
    }
    int k = d.component_count();
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    bool permute = (mode == Equivalence::RotateAndPermute);
    do {
        GaussDiagram base = permute ? with_permuted_components(d, perm) : d;
        std::vector<int> rot(k, 0);
        while (true) {
            if (fn(rotated(base, rot))) return;
            int c = 0;
            for (; c < k; ++c) {
                int len = std::max(base.component_lengths[c], 1);
                if (++rot[c] < len) break;
                rot[c] = 0;
            }
            if (c == k) break;
        }
        if (!permute) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

bool isomorphic(const GaussDiagram& a, const GaussDiagram& b, Equivalence mode) {
    if (a.component_count() != b.component_count()) return false;
    if (a.crossing_count() != b.crossing_count()) return false;
    {
        auto la = a.component_lengths, lb = b.component_lengths;
        std::sort(la.begin(), la.end());
        std::sort(lb.begin(), lb.end());
        if (mode == Equivalence::RotateAndPermute ? la != lb
                                                  : a.component_lengths != b.component_lengths)
            return false;
    }
    std::string target = encode(b);
    bool found = false;
    for_each_transform(a, mode, [&](const GaussDiagram& t) {
        if (t.component_lengths == b.component_lengths && encode(t) == target) {
            found = true;
            return true;
        }
        return false;
    });
    return found;
}

GaussDiagram canonical_form(const GaussDiagram& d, Equivalence mode) {
    GaussDiagram best = d;
    std::string best_key;
    bool first = true;
    for_each_transform(d, mode, [&](const GaussDiagram& t) {
        std::string key = encode(t);
        if (first || key < best_key) {
            best_key = std::move(key);
            best = t;
            std::sort(best.arrows.begin(), best.arrows.end());
            first = false;
        }
        return false;
    });
    return best;
}

}  // namespace gausslink
