#include <stdexcept>

#include "doctest.h"
#include "gausslink/bracket.hpp"
#include "gausslink/codec.hpp"
#include "gausslink/families.hpp"
#include "gausslink/invariants.hpp"
#include "gausslink/verify.hpp"
#include "helpers.hpp"

using namespace gausslink;

TEST_CASE("random diagrams are seed-deterministic and valid") {
    for (int trial = 0; trial < 10000; ++trial) {
        GaussDiagram d = random_diagram(trial, 2, 12);
        CHECK(validate(d).empty());
        if (trial < 100) CHECK(random_diagram(trial, 2, 12) == d);
    }
    CHECK(random_diagram(5, 2, 12) == random_diagram(5, 2, 12));
    CHECK_FALSE(random_diagram(5, 2, 12) == random_diagram(6, 2, 12));
}

TEST_CASE("empirical T statistics match the pair-enumeration oracle") {
    long long closed_total = 0, enumerated_total = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        GaussDiagram g = random_diagram(101 + trial, 2, 8);
        closed_total += multiple_linking_t(g);
        for (int i = 0; i < g.crossing_count(); ++i)
            for (int j = i + 1; j < g.crossing_count(); ++j) {
                const Arrow& a = g.arrows[i];
                const Arrow& b = g.arrows[j];
                if (a.tail.component == a.head.component) continue;
                if (b.tail.component == b.head.component) continue;
                if (a.tail.component == b.tail.component)
                    enumerated_total += a.sign * b.sign;
            }
    }
    CHECK(closed_total == enumerated_total);
}

TEST_CASE("nested bigon negative sites raise T by one each") {
    for (int n : {1, 2, 3}) {
        GaussDiagram g = family_nested_bigons(n);
        auto kinds = negative_move_kinds();
        int exercised = 0;
        for (const MoveSite& s : enumerate_sites(g, kinds)) {
            if (family_of(s.variant) != MoveFamily::Omega2) continue;
            GaussDiagram h = apply_move(g, s);
            CHECK(multiple_linking_t(h) - multiple_linking_t(g) == 1);
            CHECK(multiple_linking_s(h) == multiple_linking_s(g));
            ++exercised;
        }
        CHECK(exercised >= 1);
    }
}

TEST_CASE("invariance checks pass on a reduced corpus") {
    VerifySuiteConfig cfg;
    cfg.random_seed = 0;
    cfg.trials = 120;
    cfg.max_crossings = 8;
    Verdict s = check_s_invariance(cfg);
    CHECK(s.pass);
    CHECK(s.checks > 1000);
    Verdict t = check_t_behavior(cfg);
    CHECK(t.pass);
    CHECK(t.checks == s.checks);
}

TEST_CASE("relator fragments behave as claimed") {
    // middle-strand relator is the opposite-direction pair class, the
    // other two are same-direction pairs
    for (int lone = 0; lone < 3; ++lone) {
        auto [before, after] = relator_diagrams(lone);
        CHECK(is_structurally_sound(before));
        CHECK(is_structurally_sound(after));
        bool opposite = bracket(opposite_pair_pattern(), before) != 0;
        CHECK(opposite == (lone == 1));
        CHECK(isomorphic(before, after, Equivalence::RotateBasepoints));
        CHECK_FALSE(before == after);
    }

    VerifySuiteConfig cfg;
    cfg.trials = 60;
    cfg.max_crossings = 8;
    Verdict v = check_relators(cfg);
    CHECK(v.pass);
    INFO(v.detail);

    // explicit mode ablation on one random diagram batch
    for (int trial = 0; trial < 40; ++trial) {
        GaussDiagram g = random_diagram(7777 + trial, 2, 10);
        for (int lone = 0; lone < 3; ++lone) {
            CHECK(bracket_sum(relator_pattern_sum(lone, Equivalence::RotateBasepoints), g) == 0);
            CHECK(bracket_sum(relator_pattern_sum(lone, Equivalence::RotateAndPermute), g) == 0);
        }
    }
}

TEST_CASE("table2 verdict passes with full variant coverage") {
    VerifySuiteConfig cfg;
    cfg.trials = 50;
    cfg.max_crossings = 8;
    Verdict v = check_table2(cfg);
    INFO(v.detail);
    CHECK(v.pass);
    CHECK(v.checks > 42);  // all witness closures at least
}

TEST_CASE("run_checks selects claims and verdicts serialize") {
    VerifySuiteConfig cfg;
    cfg.trials = 5;
    cfg.max_crossings = 6;
    auto verdicts = run_checks(cfg, {"s_invariance", "relators"});
    REQUIRE(verdicts.size() == 2);
    CHECK(verdicts[0].claim_id == "s_invariance");
    CHECK(verdicts[1].claim_id == "relators");
    for (const Verdict& v : verdicts) {
        std::string j = verdict_to_json(v);
        CHECK(j.find("\"claim\"") != std::string::npos);
        CHECK(j.find("\"pass\":true") != std::string::npos);
    }
    CHECK_THROWS_AS(run_checks(cfg, {"nonsense"}), std::invalid_argument);
}

TEST_CASE("counterexample plumbing is replayable") {
    VerifySuiteConfig cfg;
    cfg.trials = 3;
    cfg.max_crossings = 6;
    Verdict v = check_s_invariance(cfg);
    CHECK(v.pass);
    CHECK_FALSE(v.counterexample.has_value());

    Counterexample ce{serialize_gauss_code(family_torus(2)),
                      site_to_json(enumerate_sites(family_torus(2)).front()), 0, 1};
    Verdict fail{"s_invariance", false, 1, "synthetic", ce};
    std::string j = verdict_to_json(fail);
    CHECK(j.find("\"gauss_code\"") != std::string::npos);
    GaussDiagram g = parse_gauss_code(ce.gauss_code);
    MoveSite s = site_from_json(ce.site_json);
    CHECK_NOTHROW(apply_move(g, s));
}
