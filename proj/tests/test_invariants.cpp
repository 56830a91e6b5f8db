#include <stdexcept>

#include "doctest.h"
#include "gausslink/bracket.hpp"
#include "gausslink/codec.hpp"
#include "gausslink/families.hpp"
#include "gausslink/invariants.hpp"
#include "gausslink/verify.hpp"
#include "helpers.hpp"

using namespace gausslink;

TEST_CASE("linking numbers of small diagrams") {
    CHECK(linking_numbers(parse_gauss_code("O1+U2+/U1+O2+")) == LinkingCounts{1, 1, 1, 1});
    GaussDiagram empty;
    empty.component_lengths = {0, 0};
    CHECK(linking_numbers(empty) == LinkingCounts{0, 0, 0, 0});
    for (int n : {1, 2, 5, 9})
        CHECK(linking_numbers(family_torus(n)) ==
              LinkingCounts{n, n, n, n});

    GaussDiagram one_comp;
    one_comp.component_lengths = {0};
    CHECK_THROWS_AS(linking_numbers(one_comp), std::invalid_argument);
}

TEST_CASE("closed forms on the named families") {
    for (int n = 0; n <= 50; ++n) {
        CHECK(multiple_linking_s(family_torus(n)) == 1LL * n * n);
        CHECK(multiple_linking_t(family_torus(n)) == 1LL * n * (n - 1));
    }
    for (int n : {0, 1, 2, 3}) {
        CHECK(multiple_linking_s(family_torus_prime(n)) == 1LL * n * n);
        CHECK(multiple_linking_t(family_torus_prime(n)) == 1LL * n * (n - 1) - 1);
    }
    for (int n = 1; n <= 10; ++n) {
        CHECK(multiple_linking_t(family_nested_bigons(n)) == -n);
        CHECK(multiple_linking_s(family_nested_bigons(n)) == 0);
        CHECK(linking_numbers(family_nested_bigons(n)).lk01 == 0);
    }
    for (int n = 0; n <= 12; ++n) CHECK(multiple_linking_t(family_k(n, n)) == -2 * n);
}

TEST_CASE("closed forms equal brute-force brackets on random diagrams") {
    for (int trial = 0; trial < 1000; ++trial) {
        GaussDiagram g = random_diagram(31337 + trial, 2, 12);
        CHECK(multiple_linking_s(g) == bracket(opposite_pair_pattern(), g));
        CHECK(multiple_linking_t(g) == bracket(same_pair_pattern(), g));
    }
}

TEST_CASE("rii lower bound") {
    GaussDiagram unlink;
    unlink.component_lengths = {0, 0};
    for (int n = 1; n <= 10; ++n)
        CHECK(rii_lower_bound(family_nested_bigons(n), unlink) == n);
    GaussDiagram g = random_diagram(42, 2, 10);
    CHECK(rii_lower_bound(g, g) == 0);
    CHECK(rii_lower_bound(family_torus(2), family_torus_prime(2)) == 1);
}

TEST_CASE("reversing every arrow fixes S and T") {
    for (int trial = 0; trial < 300; ++trial) {
        GaussDiagram g = random_diagram(60000 + trial, 2, 12);
        GaussDiagram r = with_reversed_arrows(g);
        CHECK(multiple_linking_s(g) == multiple_linking_s(r));
        CHECK(multiple_linking_t(g) == multiple_linking_t(r));
    }
}

TEST_CASE("report fields are internally consistent") {
    for (int trial = 0; trial < 100; ++trial) {
        GaussDiagram g = random_diagram(71000 + trial, 2, 12);
        InvariantReport r = compute_report(g);
        CHECK(r.s == r.lk01 * r.lk10);
        LinkingCounts lc = linking_numbers(g);
        CHECK(2 * r.t == r.lk01 * r.lk01 - lc.c01 + r.lk10 * r.lk10 - lc.c10);
        CHECK(r.rii_lower_bound_to_unlink == (r.t < 0 ? -r.t : r.t));
        CHECK(r.components == 2);
        CHECK(r.crossings == g.crossing_count());
    }
}
