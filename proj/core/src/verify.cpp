#include "gausslink/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gausslink/codec.hpp"
#include "gausslink/invariants.hpp"
#include "json.hpp"

namespace gausslink {

namespace {

// splitmix64: deterministic across platforms, unlike <random> distributions
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    uint64_t below(uint64_t n) {
        uint64_t limit = ~uint64_t{0} - ~uint64_t{0} % n;
        uint64_t v;
        do v = next();
        while (v >= limit);
        return v % n;
    }
};

uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    Rng r(seed ^ (salt * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull));
    return r.next();
}

}  // namespace

GaussDiagram random_diagram(uint64_t seed, int components, int max_crossings) {
    if (components < 1) throw std::invalid_argument("random_diagram: components must be >= 1");
    Rng rng(mix_seed(seed, 0x5eed));
    int m = static_cast<int>(rng.below(static_cast<uint64_t>(max_crossings) + 1));

    // component assignment, re-rolled until every circle gets an even
    // number of endpoints
    std::vector<std::pair<int, int>> comps(m);
    while (true) {
        std::vector<int> count(components, 0);
        for (int i = 0; i < m; ++i) {
            comps[i] = {static_cast<int>(rng.below(components)),
                        static_cast<int>(rng.below(components))};
            ++count[comps[i].first];
            ++count[comps[i].second];
        }
        bool ok = true;
        for (int c : count) ok &= (c % 2 == 0);
        if (ok) break;
    }

    GaussDiagram d;
    d.component_lengths.assign(components, 0);
    struct Token {
        int arrow;
        bool is_head;
    };
    std::vector<std::vector<Token>> tokens(components);
    for (int i = 0; i < m; ++i) {
        tokens[comps[i].first].push_back({i, false});
        tokens[comps[i].second].push_back({i, true});
    }
    d.arrows.resize(m);
    for (int i = 0; i < m; ++i) d.arrows[i].sign = rng.below(2) ? 1 : -1;
    for (int c = 0; c < components; ++c) {
        auto& list = tokens[c];
        // Fisher-Yates
        for (size_t i = list.size(); i > 1; --i)
            std::swap(list[i - 1], list[rng.below(i)]);
        d.component_lengths[c] = static_cast<int>(list.size());
        for (size_t p = 0; p < list.size(); ++p) {
            Endpoint e{c, static_cast<int>(p)};
            if (list[p].is_head)
                d.arrows[list[p].arrow].head = e;
            else
                d.arrows[list[p].arrow].tail = e;
        }
    }
    return d;
}

namespace {

bool is_inter_omega2(const MoveSite& s) {
    if (family_of(s.variant) != MoveFamily::Omega2) return false;
    if (s.polarity == Polarity::Positive)
        return s.insertions[0].component != s.insertions[1].component;
    return s.windows[0].first.component != s.windows[1].first.component;
}

long long expected_t_delta(const MoveSite& s) {
    if (!is_inter_omega2(s)) return 0;
    return s.polarity == Polarity::Positive ? -1 : +1;
}

Counterexample make_counterexample(const GaussDiagram& g, const MoveSite& s, long long expected,
                                   long long actual) {
    return {serialize_gauss_code(g), site_to_json(s), expected, actual};
}

Verdict check_move_deltas(const VerifySuiteConfig& cfg, bool on_t) {
    Verdict v;
    v.claim_id = on_t ? "t_behavior" : "s_invariance";
    v.pass = true;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        GaussDiagram g = random_diagram(mix_seed(cfg.random_seed, trial), 2, cfg.max_crossings);
        long long before = on_t ? multiple_linking_t(g) : multiple_linking_s(g);
        for (const MoveSite& s : enumerate_sites(g, cfg.kinds)) {
            if (s.polarity == Polarity::Positive &&
                g.crossing_count() + (family_of(s.variant) == MoveFamily::Omega1 ? 1 : 2) >
                    cfg.max_crossings)
                continue;
            GaussDiagram h = apply_move(g, s);
            long long after = on_t ? multiple_linking_t(h) : multiple_linking_s(h);
            long long expected = on_t ? expected_t_delta(s) : 0;
            ++v.checks;
            if (after - before != expected) {
                v.pass = false;
                v.counterexample = make_counterexample(g, s, expected, after - before);
                v.detail = "delta mismatch";
                return v;
            }
        }
    }
    return v;
}

// drops one arrow from a diagram, compressing the freed slots
GaussDiagram drop_arrow(const GaussDiagram& g, int id) {
    GaussDiagram out;
    out.component_lengths = g.component_lengths;
    std::vector<std::vector<int>> dead(g.component_count());
    dead[g.arrows[id].tail.component].push_back(g.arrows[id].tail.position);
    dead[g.arrows[id].head.component].push_back(g.arrows[id].head.position);
    for (auto& v : dead) std::sort(v.begin(), v.end());
    for (int c = 0; c < g.component_count(); ++c)
        out.component_lengths[c] -= static_cast<int>(dead[c].size());
    auto shift = [&](Endpoint e) {
        const auto& v = dead[e.component];
        int below = static_cast<int>(std::lower_bound(v.begin(), v.end(), e.position) - v.begin());
        return Endpoint{e.component, e.position - below};
    };
    for (int i = 0; i < g.crossing_count(); ++i) {
        if (i == id) continue;
        Arrow a = g.arrows[i];
        a.tail = shift(a.tail);
        a.head = shift(a.head);
        out.arrows.push_back(a);
    }
    return out;
}

const Omega3Config& omega3a_config() {
    for (const Omega3Config& c : omega3_config_table())
        if (c.variant == MoveVariant::Omega3a && c.order_bits == 0b010) return c;
    throw std::logic_error("omega3a config missing");
}

ArrowPattern pattern_of(const GaussDiagram& d, Equivalence mode) {
    ArrowPattern p;
    p.component_lengths = d.component_lengths;
    for (const Arrow& a : d.arrows) p.arrows.push_back({a.tail, a.head, a.sign});
    p.mode = mode;
    return p;
}

}  // namespace

std::pair<GaussDiagram, GaussDiagram> relator_diagrams(int lone_strand) {
    GaussDiagram closure = omega3_closure(omega3a_config(), lone_strand);
    // the pair that can meet a two-arrow inter-component pattern is the
    // two arrows touching the lone strand; drop the third (roles TM,TB,MB)
    int third = lone_strand == 0 ? 2 : lone_strand == 1 ? 1 : 0;
    GaussDiagram before = drop_arrow(closure, third);
    // the move transposes the lone circle's two slots
    GaussDiagram after = before;
    for (Arrow& a : after.arrows) {
        if (a.tail.component == 1) a.tail.position = 1 - a.tail.position;
        if (a.head.component == 1) a.head.position = 1 - a.head.position;
    }
    return {before, after};
}

PatternSum relator_pattern_sum(int lone_strand, Equivalence mode) {
    auto [before, after] = relator_diagrams(lone_strand);
    return {{+1, pattern_of(before, mode)}, {-1, pattern_of(after, mode)}};
}

namespace {

Verdict check_relators_impl(const VerifySuiteConfig& cfg) {
    Verdict v;
    v.claim_id = "relators";
    v.pass = true;

    // the subtraction relators vanish as counting patterns once base
    // points may rotate; in based-exact mode they must not vanish
    // identically (mode ablation, checked on the fragments themselves)
    bool based_exact_nonzero_seen = false;
    for (int lone = 0; lone < 3; ++lone)
        if (bracket_sum(relator_pattern_sum(lone, Equivalence::BasedExact),
                        relator_diagrams(lone).first) != 0)
            based_exact_nonzero_seen = true;
    for (int trial = 0; trial < cfg.trials && v.pass; ++trial) {
        GaussDiagram g = random_diagram(mix_seed(cfg.random_seed, 0xabc + trial), 2,
                                        cfg.max_crossings);
        for (int lone = 0; lone < 3; ++lone) {
            for (Equivalence mode : {Equivalence::RotateBasepoints, Equivalence::RotateAndPermute}) {
                long long value = bracket_sum(relator_pattern_sum(lone, mode), g);
                ++v.checks;
                if (value != 0) {
                    v.pass = false;
                    v.detail = "relator " + std::to_string(lone + 1) +
                               " does not vanish in unbased mode";
                    MoveSite dummy;
                    v.counterexample = make_counterexample(g, dummy, 0, value);
                    return v;
                }
            }
        }
    }

    // pairing the invariant patterns against the relator fragments:
    // the opposite-direction class meets only the middle-strand relator,
    // the same-direction class the other two; all vanish unbased
    for (int lone = 0; lone < 3; ++lone) {
        auto [before, after] = relator_diagrams(lone);
        for (const ArrowPattern& p : {opposite_pair_pattern(), same_pair_pattern()}) {
            long long diff = bracket(p, before) - bracket(p, after);
            ++v.checks;
            if (diff != 0) {
                v.pass = false;
                v.detail = "invariant pattern does not cancel on relator fragments";
                return v;
            }
        }
    }
    // based-exact ablation on the fragment side: matching against one
    // fixed based representative must break the middle-strand cancellation
    {
        auto [before, after] = relator_diagrams(1);
        ArrowPattern rep = pattern_of(before, Equivalence::BasedExact);
        for (PatternArrow& a : rep.arrows) a.sign = 0;
        long long diff = bracket(rep, before) - bracket(rep, after);
        ++v.checks;
        if (diff == 0) {
            v.pass = false;
            v.detail = "based-exact ablation unexpectedly cancels";
            return v;
        }
    }
    ++v.checks;
    if (!based_exact_nonzero_seen) {
        v.pass = false;
        v.detail = "based-exact relator sums vanished on the whole corpus";
        return v;
    }
    v.detail = "relators vanish unbased; based-exact ablation fails as expected";
    return v;
}

Verdict check_table2_impl(const VerifySuiteConfig& cfg) {
    Verdict v;
    v.claim_id = "table2";
    v.pass = true;
    std::map<MoveVariant, long long> coverage;

    // witnesses guarantee every variant appears in the corpus
    std::vector<GaussDiagram> corpus;
    for (const Omega3Config& c : omega3_config_table())
        for (int lone = 0; lone < 3; ++lone) corpus.push_back(omega3_closure(c, lone));
    int random_count = cfg.trials;
    for (int trial = 0; trial < random_count; ++trial)
        corpus.push_back(random_diagram(mix_seed(cfg.random_seed, 0x7ab1e + trial), 2,
                                        std::min(cfg.max_crossings, 10)));

    for (const GaussDiagram& g : corpus) {
        for (const MoveSite& s : enumerate_sites(g, cfg.kinds)) {
            if (family_of(s.variant) != MoveFamily::Omega3 || s.variant == MoveVariant::Omega3a)
                continue;
            ++coverage[s.variant];
            GaussDiagram direct = apply_move(g, s);
            std::vector<MoveSite> seq;
            try {
                seq = decompose_via_table2(g, s);
            } catch (const std::exception& e) {
                v.pass = false;
                v.detail = std::string("decomposition failed: ") + e.what();
                v.counterexample = make_counterexample(g, s, 0, 0);
                return v;
            }
            GaussDiagram cur = g;
            std::vector<long long> t_trace{multiple_linking_t(cur)};
            std::vector<std::pair<size_t, long long>> open_pairs;  // (index, alpha)
            bool pairs_ok = true;
            for (const MoveSite& step : seq) {
                GaussDiagram next = apply_move(cur, step);
                long long dt = multiple_linking_t(next) - multiple_linking_t(cur);
                if (family_of(step.variant) == MoveFamily::Omega2) {
                    if (step.polarity == Polarity::Positive)
                        open_pairs.push_back({open_pairs.size(), dt});
                    else {
                        if (open_pairs.empty()) {
                            pairs_ok = false;
                        } else {
                            long long alpha = open_pairs.back().second;
                            open_pairs.pop_back();
                            long long beta = dt;
                            bool good = (alpha == 0 && beta == 0) || (alpha == -1 && beta == 1);
                            pairs_ok &= good;
                        }
                    }
                } else if (dt != 0) {
                    pairs_ok = false;  // omega3a steps must not move T
                }
                cur = next;
                t_trace.push_back(multiple_linking_t(cur));
            }
            ++v.checks;
            bool composite_ok = (cur == direct);
            bool net_ok = t_trace.front() == t_trace.back();
            if (!composite_ok || !pairs_ok || !net_ok || !open_pairs.empty()) {
                v.pass = false;
                v.detail = !composite_ok ? "composite differs from direct application"
                                         : "omega2 delta pattern violated";
                v.counterexample = make_counterexample(g, s, 0, 0);
                return v;
            }
        }
    }
    for (int i = static_cast<int>(MoveVariant::Omega3b); i <= static_cast<int>(MoveVariant::Omega3h);
         ++i) {
        ++v.checks;
        if (coverage[static_cast<MoveVariant>(i)] == 0) {
            v.pass = false;
            v.detail = "under-coverage: variant " + to_string(static_cast<MoveVariant>(i)) +
                       " never exercised";
            return v;
        }
    }
    v.detail = "all decompositions match; omega2 deltas in {(0,0),(-1,1)}";
    return v;
}

}  // namespace

Verdict check_s_invariance(const VerifySuiteConfig& cfg) { return check_move_deltas(cfg, false); }
Verdict check_t_behavior(const VerifySuiteConfig& cfg) { return check_move_deltas(cfg, true); }
Verdict check_relators(const VerifySuiteConfig& cfg) { return check_relators_impl(cfg); }
Verdict check_table2(const VerifySuiteConfig& cfg) { return check_table2_impl(cfg); }

std::vector<Verdict> run_all_checks(const VerifySuiteConfig& cfg) {
    return {check_s_invariance(cfg), check_t_behavior(cfg), check_relators(cfg),
            check_table2(cfg)};
}

std::vector<Verdict> run_checks(const VerifySuiteConfig& cfg,
                                const std::vector<std::string>& claim_ids) {
    std::vector<Verdict> out;
    for (const std::string& id : claim_ids) {
        if (id == "s_invariance")
            out.push_back(check_s_invariance(cfg));
        else if (id == "t_behavior")
            out.push_back(check_t_behavior(cfg));
        else if (id == "relators")
            out.push_back(check_relators(cfg));
        else if (id == "table2")
            out.push_back(check_table2(cfg));
        else
            throw std::invalid_argument("unknown claim id: " + id);
    }
    return out;
}

std::string verdict_to_json(const Verdict& v) {
    nlohmann::ordered_json j;
    j["claim"] = v.claim_id;
    j["pass"] = v.pass;
    j["checks"] = v.checks;
    j["detail"] = v.detail;
    if (v.counterexample) {
        j["counterexample"] = {{"gauss_code", v.counterexample->gauss_code},
                               {"site", nlohmann::json::parse(v.counterexample->site_json)},
                               {"expected", v.counterexample->expected},
                               {"actual", v.counterexample->actual}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j.dump();
}

}  // namespace gausslink
