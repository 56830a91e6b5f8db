#include "gausslink/moves.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace gausslink {

// ---------------------------------------------------------------------------
// variants and kinds

MoveFamily family_of(MoveVariant v) {
    switch (v) {
        case MoveVariant::Omega1a:
        case MoveVariant::Omega1b:
            return MoveFamily::Omega1;
        case MoveVariant::Omega2a:
        case MoveVariant::Omega2b:
        case MoveVariant::Omega2c:
        case MoveVariant::Omega2d:
            return MoveFamily::Omega2;
        default:
            return MoveFamily::Omega3;
    }
}

std::string to_string(MoveVariant v) {
    static const char* names[] = {"omega1a", "omega1b", "omega2a", "omega2b", "omega2c",
                                  "omega2d", "omega3a", "omega3b", "omega3c", "omega3d",
                                  "omega3e", "omega3f", "omega3g", "omega3h"};
    return names[static_cast<int>(v)];
}

std::string to_string(Polarity p) {
    switch (p) {
        case Polarity::Positive: return "positive";
        case Polarity::Negative: return "negative";
        default: return "none";
    }
}

std::optional<MoveVariant> variant_from_string(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(MoveVariant::Omega3h); ++i)
        if (to_string(static_cast<MoveVariant>(i)) == s) return static_cast<MoveVariant>(i);
    return std::nullopt;
}

std::vector<MoveKind> all_move_kinds() {
    std::vector<MoveKind> out;
    for (int i = 0; i <= static_cast<int>(MoveVariant::Omega3h); ++i) {
        auto v = static_cast<MoveVariant>(i);
        if (family_of(v) == MoveFamily::Omega3) {
            out.push_back({v, Polarity::None});
        } else {
            out.push_back({v, Polarity::Positive});
            out.push_back({v, Polarity::Negative});
        }
    }
    return out;
}

std::vector<MoveKind> negative_move_kinds() {
    std::vector<MoveKind> out;
    for (const MoveKind& k : all_move_kinds())
        if (k.polarity == Polarity::Negative) out.push_back(k);
    return out;
}

namespace {

constexpr int kKindSlots = 3 * (static_cast<int>(MoveVariant::Omega3h) + 1);

uint64_t kind_mask(std::span<const MoveKind> kinds) {
    uint64_t m = 0;
    for (const MoveKind& k : kinds)
        m |= uint64_t{1} << (static_cast<int>(k.variant) * 3 + static_cast<int>(k.polarity));
    return m;
}

bool has_kind(uint64_t mask, MoveVariant v, Polarity p) {
    return mask >> (static_cast<int>(v) * 3 + static_cast<int>(p)) & 1;
}

MoveVariant omega2_variant(bool aligned, int first_sign) {
    if (aligned) return first_sign > 0 ? MoveVariant::Omega2a : MoveVariant::Omega2b;
    return first_sign > 0 ? MoveVariant::Omega2c : MoveVariant::Omega2d;
}

}  // namespace

// ---------------------------------------------------------------------------
// Omega3 configuration table
//
// Roles: strands T(op), M(iddle), B(ottom) by over/under order; arrows
// TM, TB, MB. The top window holds the two tails, the bottom window the
// two heads, the middle window TM's head and MB's tail. A directed
// configuration is (order_bits, sign_mask); applying the move transposes
// all three windows, giving (order_bits ^ 7, sign_mask).

namespace {

int sign_flip_of_strand_set(int strands) {
    // arrows incident to each strand, as bit masks over (TM, TB, MB)
    static constexpr int incident[3] = {0b011, 0b101, 0b110};
    int s = 0;
    for (int i = 0; i < 3; ++i)
        if (strands >> i & 1) s ^= incident[i];
    return s;
}

MoveVariant omega3_class_label(int order_bits, int sign_mask) {
    int key = std::min(order_bits, order_bits ^ 7);
    // labels fixed by the conjugation structure of the rewrite table; see
    // the derivation tests alongside this module
    static const std::map<std::pair<int, int>, MoveVariant> labels = {
        {{0b010, 0b010}, MoveVariant::Omega3a}, {{0b000, 0b000}, MoveVariant::Omega3b},
        {{0b011, 0b110}, MoveVariant::Omega3c}, {{0b001, 0b100}, MoveVariant::Omega3d},
        {{0b011, 0b001}, MoveVariant::Omega3e}, {{0b001, 0b011}, MoveVariant::Omega3f},
        {{0b010, 0b101}, MoveVariant::Omega3g}, {{0b000, 0b111}, MoveVariant::Omega3h},
    };
    auto it = labels.find({key, sign_mask});
    if (it == labels.end()) throw std::logic_error("omega3_class_label: not a legal config");
    return it->second;
}

}  // namespace

const std::vector<Omega3Config>& omega3_config_table() {
    static const std::vector<Omega3Config> table = [] {
        std::vector<Omega3Config> t;
        for (int o = 0; o < 8; ++o) {
            int sigma = sign_flip_of_strand_set(o);
            for (int mirror = 0; mirror < 2; ++mirror) {
                int s = sigma ^ (mirror ? 7 : 0);
                t.push_back({o, s, omega3_class_label(o, s)});
            }
        }
        std::sort(t.begin(), t.end(), [](const Omega3Config& a, const Omega3Config& b) {
            return std::tie(a.order_bits, a.sign_mask) < std::tie(b.order_bits, b.sign_mask);
        });
        return t;
    }();
    return table;
}

namespace {

const Omega3Config* find_omega3_config(int order_bits, int sign_mask) {
    for (const Omega3Config& c : omega3_config_table())
        if (c.order_bits == order_bits && c.sign_mask == sign_mask) return &c;
    return nullptr;
}

}  // namespace

const std::vector<ConjugationRow>& conjugation_rows() {
    static const std::vector<ConjugationRow> rows = {
        {MoveVariant::Omega3b, MoveVariant::Omega2c, MoveVariant::Omega3a, MoveVariant::Omega2d},
        {MoveVariant::Omega3c, MoveVariant::Omega2c, MoveVariant::Omega3a, MoveVariant::Omega2d},
        {MoveVariant::Omega3d, MoveVariant::Omega2a, MoveVariant::Omega3b, MoveVariant::Omega2b},
        {MoveVariant::Omega3e, MoveVariant::Omega2a, MoveVariant::Omega3b, MoveVariant::Omega2b},
        {MoveVariant::Omega3f, MoveVariant::Omega2d, MoveVariant::Omega3a, MoveVariant::Omega2c},
        {MoveVariant::Omega3g, MoveVariant::Omega2c, MoveVariant::Omega3h, MoveVariant::Omega2d},
        {MoveVariant::Omega3h, MoveVariant::Omega2a, MoveVariant::Omega3f, MoveVariant::Omega2b},
    };
    return rows;
}

// ---------------------------------------------------------------------------
// slot bookkeeping

namespace {

struct InsertToken {
    int component;
    int anchor;    // insert before old slot `anchor`; anchor == old length appends
    int priority;  // tokens at the same anchor are ordered by (priority, list order)
};

// Inserts one slot per token. Returns the new position of each token's slot.
std::vector<Endpoint> insert_slots(GaussDiagram& d, const std::vector<InsertToken>& tokens) {
    std::vector<Endpoint> placed(tokens.size());
    for (size_t c = 0; c < d.component_lengths.size(); ++c) {
        int len = d.component_lengths[static_cast<int>(c)];
        // items: old slot ids 0..len-1 interleaved with token ids
        std::vector<std::pair<bool, int>> items;  // (is_token, id)
        for (int old = 0; old <= len; ++old) {
            std::vector<int> here;
            for (size_t t = 0; t < tokens.size(); ++t)
                if (tokens[t].component == static_cast<int>(c) && tokens[t].anchor == old)
                    here.push_back(static_cast<int>(t));
            std::stable_sort(here.begin(), here.end(), [&](int a, int b) {
                return tokens[a].priority < tokens[b].priority;
            });
            for (int t : here) items.push_back({true, t});
            if (old < len) items.push_back({false, old});
        }
        if (items.size() == static_cast<size_t>(len)) continue;  // nothing inserted here
        std::vector<int> old_to_new(len);
        for (size_t pos = 0; pos < items.size(); ++pos) {
            if (items[pos].first)
                placed[items[pos].second] = {static_cast<int>(c), static_cast<int>(pos)};
            else
                old_to_new[items[pos].second] = static_cast<int>(pos);
        }
        for (Arrow& a : d.arrows) {
            if (a.tail.component == static_cast<int>(c)) a.tail.position = old_to_new[a.tail.position];
            if (a.head.component == static_cast<int>(c)) a.head.position = old_to_new[a.head.position];
        }
        d.component_lengths[c] = static_cast<int>(items.size());
    }
    return placed;
}

// Removes the given arrows and their slots.
GaussDiagram remove_arrows(const GaussDiagram& g, std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    std::vector<std::vector<int>> dead(g.component_count());
    for (int id : ids) {
        const Arrow& a = g.arrows[id];
        dead[a.tail.component].push_back(a.tail.position);
        dead[a.head.component].push_back(a.head.position);
    }
    for (auto& v : dead) std::sort(v.begin(), v.end());

    GaussDiagram out;
    out.component_lengths = g.component_lengths;
    for (int c = 0; c < g.component_count(); ++c)
        out.component_lengths[c] -= static_cast<int>(dead[c].size());
    auto shift = [&](Endpoint e) {
        const auto& v = dead[e.component];
        int below = static_cast<int>(std::lower_bound(v.begin(), v.end(), e.position) - v.begin());
        return Endpoint{e.component, e.position - below};
    };
    for (size_t i = 0; i < g.arrows.size(); ++i) {
        if (std::binary_search(ids.begin(), ids.end(), static_cast<int>(i))) continue;
        Arrow a = g.arrows[i];
        a.tail = shift(a.tail);
        a.head = shift(a.head);
        out.arrows.push_back(a);
    }
    return out;
}

bool window_is_adjacent(const GaussDiagram& g, const SlotWindow& w) {
    if (w.first.component != w.second.component) return false;
    int len = g.component_lengths[w.first.component];
    if (len < 2) return false;
    return (w.first.position + 1) % len == w.second.position;
}

// Two insertion tokens realizing a new two-slot window at the point.
// Returns indices (first, second) of the tokens in insertion order.
// A wrapped window straddles the base point: its leading slot goes to the
// very end, its trailing slot before everything at position 0.
std::pair<int, int> window_tokens(const GaussDiagram& g, const InsertionPoint& ip,
                                  std::vector<InsertToken>& tokens) {
    int len = g.component_lengths[ip.component];
    if (ip.wrapped) {
        tokens.push_back({ip.component, 0, -1});
        tokens.push_back({ip.component, len, +1});
        return {static_cast<int>(tokens.size()) - 1, static_cast<int>(tokens.size()) - 2};
    }
    tokens.push_back({ip.component, ip.gap, 0});
    tokens.push_back({ip.component, ip.gap, 0});
    return {static_cast<int>(tokens.size()) - 2, static_cast<int>(tokens.size()) - 1};
}

void check(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("stale move site: ") + what);
}

}  // namespace

// ---------------------------------------------------------------------------
// Omega3 site recognition

namespace {

struct TriangleData {
    std::array<int, 3> role_arrows;       // TM, TB, MB
    std::array<SlotWindow, 3> windows;    // top, middle, bottom
    int order_bits;
    int sign_mask;
    const Omega3Config* config;
};

// Classifies three windows (with readings) covering the six endpoints of
// three arrows. Returns nullopt unless the data matches a legal config.
std::optional<TriangleData> classify_triangle(const GaussDiagram& g,
                                              const std::array<SlotWindow, 3>& windows,
                                              const std::vector<std::vector<SlotRef>>& table) {
    struct End {
        int arrow;
        bool is_head;
    };
    std::array<std::array<End, 2>, 3> ends{};
    std::set<std::pair<int, int>> slots;
    for (int w = 0; w < 3; ++w) {
        if (!window_is_adjacent(g, windows[w])) return std::nullopt;
        for (int i = 0; i < 2; ++i) {
            Endpoint e = i ? windows[w].second : windows[w].first;
            if (!slots.insert({e.component, e.position}).second) return std::nullopt;
            SlotRef ref = table[e.component][e.position];
            if (ref.arrow < 0) return std::nullopt;
            ends[w][i] = {ref.arrow, ref.is_head};
        }
        if (ends[w][0].arrow == ends[w][1].arrow) return std::nullopt;
    }
    auto tails = [&](int w) { return (ends[w][0].is_head ? 0 : 1) + (ends[w][1].is_head ? 0 : 1); };
    int top = -1, mid = -1, bot = -1;
    for (int w = 0; w < 3; ++w) {
        if (tails(w) == 2) top = w;
        else if (tails(w) == 0) bot = w;
        else mid = w;
    }
    if (top < 0 || mid < 0 || bot < 0) return std::nullopt;

    auto in_window = [&](int w, int arrow) {
        return ends[w][0].arrow == arrow || ends[w][1].arrow == arrow;
    };
    // role arrows: TM in top+mid, TB in top+bot, MB in mid+bot
    int tm = -1, tb = -1, mb = -1;
    for (int i = 0; i < 2; ++i) {
        int a = ends[top][i].arrow;
        if (in_window(mid, a)) tm = a;
        if (in_window(bot, a)) tb = a;
    }
    for (int i = 0; i < 2; ++i) {
        int a = ends[mid][i].arrow;
        if (in_window(bot, a)) mb = a;
    }
    if (tm < 0 || tb < 0 || mb < 0) return std::nullopt;
    if (tm == tb || tm == mb || tb == mb) return std::nullopt;
    // endpoint types forced by roles
    auto type_in = [&](int w, int arrow) {
        return ends[w][0].arrow == arrow ? ends[w][0].is_head : ends[w][1].is_head;
    };
    if (type_in(top, tm) || type_in(top, tb)) return std::nullopt;       // both tails
    if (!type_in(mid, tm) || type_in(mid, mb)) return std::nullopt;      // head, tail
    if (!type_in(bot, tb) || !type_in(bot, mb)) return std::nullopt;     // both heads

    TriangleData t;
    t.role_arrows = {tm, tb, mb};
    t.windows = {windows[top], windows[mid], windows[bot]};
    t.order_bits = (ends[top][0].arrow == tm ? 0 : 1) | ((ends[mid][0].arrow == tm ? 0 : 1) << 1) |
                   ((ends[bot][0].arrow == tb ? 0 : 1) << 2);
    t.sign_mask = (g.arrows[tm].sign < 0 ? 1 : 0) | ((g.arrows[tb].sign < 0 ? 1 : 0) << 1) |
                  ((g.arrows[mb].sign < 0 ? 1 : 0) << 2);
    t.config = find_omega3_config(t.order_bits, t.sign_mask);
    if (!t.config) return std::nullopt;
    return t;
}

// All window readings containing one endpoint of arrow a and one of arrow b.
std::vector<SlotWindow> pair_windows(const GaussDiagram& g, int a, int b) {
    std::vector<SlotWindow> out;
    std::array<Endpoint, 2> ea = {g.arrows[a].tail, g.arrows[a].head};
    std::array<Endpoint, 2> eb = {g.arrows[b].tail, g.arrows[b].head};
    for (Endpoint x : ea)
        for (Endpoint y : eb) {
            if (x.component != y.component) continue;
            int len = g.component_lengths[x.component];
            if (len < 2) continue;
            if ((x.position + 1) % len == y.position) out.push_back({x, y});
            if ((y.position + 1) % len == x.position) out.push_back({y, x});
        }
    return out;
}

std::vector<TriangleData> omega3_sites_among(const GaussDiagram& g, const std::vector<int>& ids) {
    std::vector<TriangleData> out;
    std::set<std::pair<std::array<int, 3>, std::set<std::pair<int, int>>>> seen;
    auto table = slot_table(g);
    int n = static_cast<int>(ids.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int a = ids[i], b = ids[j], c = ids[k];
                auto wab = pair_windows(g, a, b);
                if (wab.empty()) continue;
                auto wac = pair_windows(g, a, c);
                if (wac.empty()) continue;
                auto wbc = pair_windows(g, b, c);
                for (const SlotWindow& w1 : wab)
                    for (const SlotWindow& w2 : wac)
                        for (const SlotWindow& w3 : wbc) {
                            auto t = classify_triangle(g, {w1, w2, w3}, table);
                            if (!t) continue;
                            std::set<std::pair<int, int>> slotset;
                            for (const SlotWindow& w : t->windows) {
                                slotset.insert({w.first.component, w.first.position});
                                slotset.insert({w.second.component, w.second.position});
                            }
                            std::array<int, 3> arr = t->role_arrows;
                            std::sort(arr.begin(), arr.end());
                            if (!seen.insert({arr, slotset}).second) continue;
                            out.push_back(*t);
                        }
            }
    return out;
}

MoveSite site_from_triangle(const TriangleData& t) {
    MoveSite s;
    s.variant = t.config->variant;
    s.polarity = Polarity::None;
    s.arrows = {t.role_arrows[0], t.role_arrows[1], t.role_arrows[2]};
    s.windows = {t.windows[0], t.windows[1], t.windows[2]};
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// negative Omega2 classification

namespace {

struct NegativePairReading {
    SlotWindow tails;
    SlotWindow heads;
    bool aligned;
    int first_sign;
    int first_arrow;   // arrow whose tail is tails.first
    int second_arrow;
};

// All readings under which arrows {i, j} form a cancelling pair.
std::vector<NegativePairReading> negative_pair_readings(const GaussDiagram& g, int i, int j) {
    std::vector<NegativePairReading> out;
    const Arrow& u = g.arrows[i];
    const Arrow& v = g.arrows[j];
    if (u.sign == v.sign) return out;
    if (u.tail.component != v.tail.component) return out;
    if (u.head.component != v.head.component) return out;

    auto readings = [&](Endpoint x, Endpoint y) {
        std::vector<SlotWindow> r;
        int len = g.component_lengths[x.component];
        if (len < 2) return r;
        if ((x.position + 1) % len == y.position) r.push_back({x, y});
        if ((y.position + 1) % len == x.position) r.push_back({y, x});
        return r;
    };
    for (const SlotWindow& tw : readings(u.tail, v.tail))
        for (const SlotWindow& hw : readings(u.head, v.head)) {
            NegativePairReading r;
            r.tails = tw;
            r.heads = hw;
            r.first_arrow = (tw.first == u.tail) ? i : j;
            r.second_arrow = (r.first_arrow == i) ? j : i;
            bool head_first_same = (hw.first == g.arrows[r.first_arrow].head);
            r.aligned = head_first_same;
            r.first_sign = g.arrows[r.first_arrow].sign;
            out.push_back(r);
        }
    return out;
}

MoveSite site_from_negative_reading(const NegativePairReading& r) {
    MoveSite s;
    s.variant = omega2_variant(r.aligned, r.first_sign);
    s.polarity = Polarity::Negative;
    s.arrows = {r.first_arrow, r.second_arrow};
    s.windows = {r.tails, r.heads};
    s.sign = r.first_sign;
    s.aligned = r.aligned;
    return s;
}

std::string site_key(const MoveSite& s) {
    std::string k;
    auto put = [&](int v) { k += std::to_string(v) + ","; };
    put(static_cast<int>(s.variant));
    put(static_cast<int>(s.polarity));
    for (int a : s.arrows) put(a);
    k += "|";
    for (const SlotWindow& w : s.windows) {
        put(w.first.component);
        put(w.first.position);
        put(w.second.component);
        put(w.second.position);
    }
    k += "|";
    for (const InsertionPoint& p : s.insertions) {
        put(p.component);
        put(p.gap);
        put(p.wrapped ? 1 : 0);
    }
    put(s.sign);
    put(s.head_first ? 1 : 0);
    put(s.aligned ? 1 : 0);
    return k;
}

}  // namespace

// ---------------------------------------------------------------------------
// enumeration

std::vector<MoveSite> enumerate_sites(const GaussDiagram& g, std::span<const MoveKind> kinds) {
    uint64_t mask = kind_mask(kinds);
    std::vector<MoveSite> out;

    // negative Omega1: arrows with cyclically adjacent endpoints on one circle
    for (size_t i = 0; i < g.arrows.size(); ++i) {
        const Arrow& a = g.arrows[i];
        if (a.tail.component != a.head.component) continue;
        MoveVariant v = a.sign > 0 ? MoveVariant::Omega1a : MoveVariant::Omega1b;
        if (!has_kind(mask, v, Polarity::Negative)) continue;
        int len = g.component_lengths[a.tail.component];
        if (len < 2) continue;
        std::vector<SlotWindow> readings;
        if ((a.tail.position + 1) % len == a.head.position) readings.push_back({a.tail, a.head});
        if ((a.head.position + 1) % len == a.tail.position) readings.push_back({a.head, a.tail});
        if (readings.empty()) continue;
        std::sort(readings.begin(), readings.end());
        MoveSite s;
        s.variant = v;
        s.polarity = Polarity::Negative;
        s.arrows = {static_cast<int>(i)};
        s.windows = {readings.front()};
        s.sign = a.sign;
        s.head_first = (readings.front().first == a.head);
        out.push_back(s);
    }

    // negative Omega2: cancelling pairs, one site per arrow pair
    for (size_t i = 0; i < g.arrows.size(); ++i)
        for (size_t j = i + 1; j < g.arrows.size(); ++j) {
            auto readings = negative_pair_readings(g, static_cast<int>(i), static_cast<int>(j));
            if (readings.empty()) continue;
            std::vector<MoveSite> candidates;
            for (const auto& r : readings) candidates.push_back(site_from_negative_reading(r));
            std::sort(candidates.begin(), candidates.end(),
                      [](const MoveSite& a, const MoveSite& b) { return site_key(a) < site_key(b); });
            const MoveSite& s = candidates.front();
            if (has_kind(mask, s.variant, Polarity::Negative)) out.push_back(s);
        }

    // Omega3 sites
    bool any_omega3 = false;
    for (int v = static_cast<int>(MoveVariant::Omega3a); v <= static_cast<int>(MoveVariant::Omega3h); ++v)
        any_omega3 |= has_kind(mask, static_cast<MoveVariant>(v), Polarity::None);
    if (any_omega3) {
        std::vector<int> ids(g.arrows.size());
        for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
        for (const TriangleData& t : omega3_sites_among(g, ids)) {
            MoveSite s = site_from_triangle(t);
            if (has_kind(mask, s.variant, Polarity::None)) out.push_back(s);
        }
    }

    // positive insertions
    auto insertion_points = [&](int c) {
        std::vector<InsertionPoint> pts;
        int len = g.component_lengths[c];
        for (int gap = 0; gap <= len; ++gap) pts.push_back({c, gap, false});
        pts.push_back({c, 0, true});
        return pts;
    };
    for (int c = 0; c < g.component_count(); ++c) {
        for (const InsertionPoint& ip : insertion_points(c))
            for (int sign : {1, -1}) {
                MoveVariant v = sign > 0 ? MoveVariant::Omega1a : MoveVariant::Omega1b;
                if (!has_kind(mask, v, Polarity::Positive)) continue;
                for (bool head_first : {false, true}) {
                    MoveSite s;
                    s.variant = v;
                    s.polarity = Polarity::Positive;
                    s.insertions = {ip};
                    s.sign = sign;
                    s.head_first = head_first;
                    out.push_back(s);
                }
            }
    }
    bool any_pos2 = false;
    for (auto v : {MoveVariant::Omega2a, MoveVariant::Omega2b, MoveVariant::Omega2c, MoveVariant::Omega2d})
        any_pos2 |= has_kind(mask, v, Polarity::Positive);
    if (any_pos2) {
        for (int oc = 0; oc < g.component_count(); ++oc)
            for (const InsertionPoint& over : insertion_points(oc))
                for (int uc = 0; uc < g.component_count(); ++uc)
                    for (const InsertionPoint& under : insertion_points(uc)) {
                        if (over.wrapped && under.wrapped && oc == uc) continue;
                        for (int sign : {1, -1})
                            for (bool aligned : {true, false}) {
                                MoveVariant v = omega2_variant(aligned, sign);
                                if (!has_kind(mask, v, Polarity::Positive)) continue;
                                MoveSite s;
                                s.variant = v;
                                s.polarity = Polarity::Positive;
                                s.insertions = {over, under};
                                s.sign = sign;
                                s.aligned = aligned;
                                out.push_back(s);
                            }
                    }
    }

    std::stable_sort(out.begin(), out.end(), [](const MoveSite& a, const MoveSite& b) {
        return site_key(a) < site_key(b);
    });
    return out;
}

std::vector<MoveSite> enumerate_sites(const GaussDiagram& g) {
    auto kinds = all_move_kinds();
    return enumerate_sites(g, kinds);
}

// ---------------------------------------------------------------------------
// apply

GaussDiagram apply_move(const GaussDiagram& g, const MoveSite& site) {
    auto arrow_ok = [&](int id) { return id >= 0 && id < g.crossing_count(); };

    switch (site.polarity) {
        case Polarity::Negative: {
            if (family_of(site.variant) == MoveFamily::Omega1) {
                check(site.arrows.size() == 1 && site.windows.size() == 1, "omega1 shape");
                check(arrow_ok(site.arrows[0]), "arrow index");
                const Arrow& a = g.arrows[site.arrows[0]];
                check(a.tail.component == a.head.component, "kink arrow");
                check(window_is_adjacent(g, site.windows[0]), "window adjacency");
                std::set<Endpoint> ws{site.windows[0].first, site.windows[0].second};
                check(ws.count(a.tail) && ws.count(a.head), "window covers arrow");
                return remove_arrows(g, {site.arrows[0]});
            }
            check(family_of(site.variant) == MoveFamily::Omega2, "negative family");
            check(site.arrows.size() == 2 && site.windows.size() == 2, "omega2 shape");
            check(arrow_ok(site.arrows[0]) && arrow_ok(site.arrows[1]), "arrow index");
            const Arrow& u = g.arrows[site.arrows[0]];
            const Arrow& v = g.arrows[site.arrows[1]];
            check(u.sign != v.sign, "opposite signs");
            check(window_is_adjacent(g, site.windows[0]) && window_is_adjacent(g, site.windows[1]),
                  "window adjacency");
            std::set<Endpoint> tw{site.windows[0].first, site.windows[0].second};
            std::set<Endpoint> hw{site.windows[1].first, site.windows[1].second};
            check(tw.count(u.tail) && tw.count(v.tail), "tail window");
            check(hw.count(u.head) && hw.count(v.head), "head window");
            return remove_arrows(g, {site.arrows[0], site.arrows[1]});
        }
        case Polarity::Positive: {
            auto point_ok = [&](const InsertionPoint& p) {
                if (p.component < 0 || p.component >= g.component_count()) return false;
                if (p.wrapped) return true;
                return p.gap >= 0 && p.gap <= g.component_lengths[p.component];
            };
            if (family_of(site.variant) == MoveFamily::Omega1) {
                check(site.insertions.size() == 1, "omega1 shape");
                check(point_ok(site.insertions[0]), "insertion point");
                check(site.sign == 1 || site.sign == -1, "sign");
                GaussDiagram out = g;
                std::vector<InsertToken> tokens;
                auto [fi, se] = window_tokens(out, site.insertions[0], tokens);
                auto placed = insert_slots(out, tokens);
                Arrow a;
                a.sign = site.sign;
                a.tail = site.head_first ? placed[se] : placed[fi];
                a.head = site.head_first ? placed[fi] : placed[se];
                out.arrows.push_back(a);
                return out;
            }
            check(family_of(site.variant) == MoveFamily::Omega2, "positive family");
            check(site.insertions.size() == 2, "omega2 shape");
            check(point_ok(site.insertions[0]) && point_ok(site.insertions[1]), "insertion point");
            // two windows cannot both straddle one base point
            check(!(site.insertions[0].wrapped && site.insertions[1].wrapped &&
                    site.insertions[0].component == site.insertions[1].component),
                  "wrapped windows collide");
            check(site.sign == 1 || site.sign == -1, "sign");
            GaussDiagram out = g;
            std::vector<InsertToken> tokens;
            auto [t1, t2] = window_tokens(out, site.insertions[0], tokens);
            auto [h1, h2] = window_tokens(out, site.insertions[1], tokens);
            auto placed = insert_slots(out, tokens);
            Arrow u, v;
            u.sign = site.sign;
            v.sign = -site.sign;
            u.tail = placed[t1];
            v.tail = placed[t2];
            u.head = site.aligned ? placed[h1] : placed[h2];
            v.head = site.aligned ? placed[h2] : placed[h1];
            out.arrows.push_back(u);
            out.arrows.push_back(v);
            return out;
        }
        case Polarity::None: {
            check(family_of(site.variant) == MoveFamily::Omega3, "omega3 family");
            check(site.windows.size() == 3 && site.arrows.size() == 3, "omega3 shape");
            auto t = classify_triangle(g, {site.windows[0], site.windows[1], site.windows[2]},
                                       slot_table(g));
            check(t.has_value(), "triangle structure");
            check(t->config->variant == site.variant, "variant");
            check(std::vector<int>(t->role_arrows.begin(), t->role_arrows.end()) == site.arrows,
                  "role arrows");
            GaussDiagram out = g;
            for (const SlotWindow& w : t->windows) {
                for (Arrow& a : out.arrows) {
                    auto swap_pos = [&](Endpoint& e) {
                        if (e == w.first)
                            e = w.second;
                        else if (e == w.second)
                            e = w.first;
                    };
                    swap_pos(a.tail);
                    swap_pos(a.head);
                }
            }
            return out;
        }
    }
    throw std::invalid_argument("stale move site: unknown polarity");
}

// ---------------------------------------------------------------------------
// inverse

namespace {

// Gap (in post-removal coordinates) recreating a removed window, plus
// whether the window wrapped around the base point.
InsertionPoint inverse_insertion(int before_len, const SlotWindow& w,
                                 const std::vector<std::vector<int>>& removed_positions) {
    int c = w.first.component;
    if (w.first.position == before_len - 1 && w.second.position == 0 && before_len >= 2)
        return {c, 0, true};
    const auto& dead = removed_positions[c];
    int below = static_cast<int>(
        std::lower_bound(dead.begin(), dead.end(), w.first.position) - dead.begin());
    return {c, w.first.position - below, false};
}

}  // namespace

MoveSite inverse_site(const MoveSite& site, const GaussDiagram& after) {
    switch (site.polarity) {
        case Polarity::Positive: {
            // the created arrows sit at the end of `after`
            MoveSite inv;
            inv.variant = site.variant;
            inv.polarity = Polarity::Negative;
            if (family_of(site.variant) == MoveFamily::Omega1) {
                int id = after.crossing_count() - 1;
                const Arrow& a = after.arrows[id];
                inv.arrows = {id};
                Endpoint first = site.head_first ? a.head : a.tail;
                Endpoint second = site.head_first ? a.tail : a.head;
                inv.windows = {{first, second}};
                inv.sign = a.sign;
                inv.head_first = site.head_first;
                return inv;
            }
            int u = after.crossing_count() - 2;
            int v = after.crossing_count() - 1;
            inv.arrows = {u, v};
            inv.windows = {{after.arrows[u].tail, after.arrows[v].tail},
                           {site.aligned ? after.arrows[u].head : after.arrows[v].head,
                            site.aligned ? after.arrows[v].head : after.arrows[u].head}};
            inv.sign = after.arrows[u].sign;
            inv.aligned = site.aligned;
            return inv;
        }
        case Polarity::Negative: {
            MoveSite inv;
            inv.variant = site.variant;
            inv.polarity = Polarity::Positive;
            inv.sign = site.sign;
            // window positions are in pre-removal coordinates
            if (family_of(site.variant) == MoveFamily::Omega1) {
                int c = site.windows[0].first.component;
                std::vector<std::vector<int>> dead(after.component_lengths.size());
                dead[c] = {site.windows[0].first.position, site.windows[0].second.position};
                std::sort(dead[c].begin(), dead[c].end());
                int before_len = after.component_lengths[c] + 2;
                inv.insertions = {inverse_insertion(before_len, site.windows[0], dead)};
                inv.head_first = site.head_first;
                return inv;
            }
            std::vector<std::vector<int>> dead(after.component_lengths.size());
            std::vector<int> before_len = after.component_lengths;
            for (const SlotWindow& w : site.windows) {
                int c = w.first.component;
                dead[c].push_back(w.first.position);
                dead[c].push_back(w.second.position);
                before_len[c] += 2;
            }
            for (auto& v : dead) std::sort(v.begin(), v.end());
            inv.insertions = {
                inverse_insertion(before_len[site.windows[0].first.component], site.windows[0], dead),
                inverse_insertion(before_len[site.windows[1].first.component], site.windows[1], dead)};
            inv.aligned = site.aligned;
            return inv;
        }
        case Polarity::None: {
            // same windows, direction reverses within the same class
            auto t = classify_triangle(after, {site.windows[0], site.windows[1], site.windows[2]},
                                       slot_table(after));
            if (!t) throw std::invalid_argument("inverse_site: omega3 windows not found in after");
            return site_from_triangle(*t);
        }
    }
    throw std::invalid_argument("inverse_site: unknown polarity");
}

// ---------------------------------------------------------------------------
// table-2 expansion

namespace {

std::vector<InsertionPoint> local_insertion_points(const GaussDiagram& g, const MoveSite& site) {
    std::set<InsertionPoint> pts;
    for (const SlotWindow& w : site.windows) {
        int c = w.first.component;
        int len = g.component_lengths[c];
        for (int pos : {w.first.position, w.second.position})
            for (int gap = pos - 2; gap <= pos + 3; ++gap)
                if (gap >= 0 && gap <= len) pts.insert({c, gap, false});
        if (len >= 1) pts.insert({c, 0, true});
    }
    return {pts.begin(), pts.end()};
}

std::optional<std::vector<MoveSite>> try_expand(const GaussDiagram& g, const MoveSite& site,
                                                const GaussDiagram& direct, MoveVariant pos_variant,
                                                MoveVariant inner_variant, MoveVariant neg_variant);

std::vector<MoveSite> expand_omega3(const GaussDiagram& g, const MoveSite& site) {
    if (site.variant == MoveVariant::Omega3a) return {site};
    const ConjugationRow* row = nullptr;
    for (const ConjugationRow& r : conjugation_rows())
        if (r.target == site.variant) row = &r;
    if (!row) throw std::invalid_argument("decompose_via_table2: site is not an omega3 move");

    GaussDiagram direct = apply_move(g, site);
    // canonical direction first, then the reverse reading of the same row
    if (auto seq = try_expand(g, site, direct, row->positive, row->inner, row->negative)) return *seq;
    if (auto seq = try_expand(g, site, direct, row->negative, row->inner, row->positive)) return *seq;
    throw std::runtime_error("decompose_via_table2: no expansion found for " +
                             to_string(site.variant) + " site (defect)");
}

std::optional<std::vector<MoveSite>> try_expand(const GaussDiagram& g, const MoveSite& site,
                                                const GaussDiagram& direct, MoveVariant pos_variant,
                                                MoveVariant inner_variant, MoveVariant neg_variant) {
    auto points = local_insertion_points(g, site);
    for (const InsertionPoint& over : points)
        for (const InsertionPoint& under : points) {
            if (over.wrapped && under.wrapped && over.component == under.component) continue;
            for (int sign : {1, -1})
                for (bool aligned : {true, false}) {
                    if (omega2_variant(aligned, sign) != pos_variant) continue;
                    MoveSite pos;
                    pos.variant = pos_variant;
                    pos.polarity = Polarity::Positive;
                    pos.insertions = {over, under};
                    pos.sign = sign;
                    pos.aligned = aligned;
                    GaussDiagram h1 = apply_move(g, pos);
                    int u = h1.crossing_count() - 2;
                    int v = h1.crossing_count() - 1;
                    std::vector<int> pool = site.arrows;
                    pool.push_back(u);
                    pool.push_back(v);
                    for (const TriangleData& t : omega3_sites_among(h1, pool)) {
                        if (t.config->variant != inner_variant) continue;
                        MoveSite inner = site_from_triangle(t);
                        GaussDiagram h2 = apply_move(h1, inner);
                        // candidate cancelling pairs within the pool
                        for (size_t x = 0; x < pool.size(); ++x)
                            for (size_t y = x + 1; y < pool.size(); ++y) {
                                for (const auto& r :
                                     negative_pair_readings(h2, pool[x], pool[y])) {
                                    MoveSite neg = site_from_negative_reading(r);
                                    if (neg.variant != neg_variant) continue;
                                    GaussDiagram h3 = apply_move(h2, neg);
                                    if (h3 == direct) {
                                        try {
                                            std::vector<MoveSite> seq{pos};
                                            auto mid = expand_omega3(h1, inner);
                                            seq.insert(seq.end(), mid.begin(), mid.end());
                                            // the expanded chain reproduces h2
                                            // slot-exactly but may permute arrow
                                            // indices; re-anchor the final
                                            // removal by its window slots
                                            GaussDiagram chain_end = h1;
                                            for (size_t m = 1; m < seq.size(); ++m)
                                                chain_end = apply_move(chain_end, seq[m]);
                                            auto tbl = slot_table(chain_end);
                                            MoveSite fixed = neg;
                                            fixed.arrows = {
                                                tbl[neg.windows[0].first.component]
                                                   [neg.windows[0].first.position].arrow,
                                                tbl[neg.windows[0].second.component]
                                                   [neg.windows[0].second.position].arrow};
                                            seq.push_back(fixed);
                                            return seq;
                                        } catch (const std::runtime_error&) {
                                            // inner site not locally expandable
                                            // here; keep searching
                                        }
                                    }
                                }
                            }
                    }
                }
        }
    return std::nullopt;
}

}  // namespace

std::vector<MoveSite> decompose_via_table2(const GaussDiagram& g, const MoveSite& site) {
    if (site.polarity != Polarity::None || family_of(site.variant) != MoveFamily::Omega3)
        throw std::invalid_argument("decompose_via_table2: not an omega3 site");
    if (site.variant == MoveVariant::Omega3a)
        throw std::invalid_argument("decompose_via_table2: omega3a needs no expansion");
    return expand_omega3(g, site);
}

// ---------------------------------------------------------------------------
// witnesses

GaussDiagram omega3_closure(const Omega3Config& config, int lone_strand) {
    // per-strand contents in window order: (role arrow, is_head)
    // roles: 0 = TM, 1 = TB, 2 = MB
    struct E {
        int role;
        bool is_head;
    };
    std::array<std::array<E, 2>, 3> strand{};
    bool oT = config.order_bits & 1, oM = config.order_bits & 2, oB = config.order_bits & 4;
    strand[0] = oT ? std::array<E, 2>{{{1, false}, {0, false}}}
                   : std::array<E, 2>{{{0, false}, {1, false}}};
    strand[1] = oM ? std::array<E, 2>{{{2, false}, {0, true}}}
                   : std::array<E, 2>{{{0, true}, {2, false}}};
    strand[2] = oB ? std::array<E, 2>{{{2, true}, {1, true}}}
                   : std::array<E, 2>{{{1, true}, {2, true}}};

    GaussDiagram d;
    d.component_lengths = {4, 2};
    std::array<Arrow, 3> arrows{};
    for (int r = 0; r < 3; ++r) arrows[r].sign = (config.sign_mask >> r & 1) ? -1 : 1;
    int joined_pos = 0;
    for (int s = 0; s < 3; ++s) {
        bool lone = (s == lone_strand);
        for (int i = 0; i < 2; ++i) {
            Endpoint at{lone ? 1 : 0, lone ? i : joined_pos++};
            if (strand[s][i].is_head)
                arrows[strand[s][i].role].head = at;
            else
                arrows[strand[s][i].role].tail = at;
        }
    }
    d.arrows = {arrows[0], arrows[1], arrows[2]};
    return d;
}

// ---------------------------------------------------------------------------
// JSON

std::string site_to_json(const MoveSite& site) {
    nlohmann::ordered_json j;
    j["variant"] = to_string(site.variant);
    j["polarity"] = to_string(site.polarity);
    j["arrows"] = site.arrows;
    auto wins = nlohmann::json::array();
    for (const SlotWindow& w : site.windows)
        wins.push_back({{"component", w.first.component},
                        {"first", w.first.position},
                        {"second", w.second.position}});
    j["windows"] = wins;
    auto ins = nlohmann::json::array();
    for (const InsertionPoint& p : site.insertions)
        ins.push_back({{"component", p.component}, {"gap", p.gap}, {"wrapped", p.wrapped}});
    j["insertions"] = ins;
    j["sign"] = site.sign;
    j["head_first"] = site.head_first;
    j["aligned"] = site.aligned;
    return j.dump();
}

MoveSite site_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    MoveSite s;
    auto v = variant_from_string(j.at("variant").get<std::string>());
    if (!v) throw std::invalid_argument("site_from_json: unknown variant");
    s.variant = *v;
    std::string pol = j.at("polarity").get<std::string>();
    s.polarity = pol == "positive" ? Polarity::Positive
                 : pol == "negative" ? Polarity::Negative
                                     : Polarity::None;
    s.arrows = j.at("arrows").get<std::vector<int>>();
    for (const auto& w : j.at("windows")) {
        int c = w.at("component").get<int>();
        s.windows.push_back({{c, w.at("first").get<int>()}, {c, w.at("second").get<int>()}});
    }
    for (const auto& p : j.at("insertions"))
        s.insertions.push_back({p.at("component").get<int>(), p.at("gap").get<int>(),
                                p.at("wrapped").get<bool>()});
    s.sign = j.at("sign").get<int>();
    s.head_first = j.at("head_first").get<bool>();
    s.aligned = j.at("aligned").get<bool>();
    return s;
}

}  // namespace gausslink
