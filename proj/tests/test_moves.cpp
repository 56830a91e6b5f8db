#include <map>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "gausslink/codec.hpp"
#include "gausslink/families.hpp"
#include "gausslink/invariants.hpp"
#include "gausslink/moves.hpp"
#include "gausslink/verify.hpp"
#include "helpers.hpp"

using namespace gausslink;

namespace {

std::vector<MoveSite> negative_inter_omega2_sites(const GaussDiagram& g) {
    std::vector<MoveSite> out;
    auto kinds = negative_move_kinds();
    for (const MoveSite& s : enumerate_sites(g, kinds))
        if (family_of(s.variant) == MoveFamily::Omega2 &&
            s.windows[0].first.component != s.windows[1].first.component)
            out.push_back(s);
    return out;
}

}  // namespace

TEST_CASE("a single kink yields exactly one negative omega1 site") {
    GaussDiagram kink = parse_gauss_code("O1+U1+");
    auto kinds = negative_move_kinds();
    auto sites = enumerate_sites(kink, kinds);
    REQUIRE(sites.size() == 1);
    CHECK(sites[0].variant == MoveVariant::Omega1a);
    GaussDiagram after = apply_move(kink, sites[0]);
    CHECK(after.crossing_count() == 0);
    CHECK(after.component_lengths == std::vector<int>{0});
}

TEST_CASE("crossingless diagram: no negative sites, positive family nonempty") {
    GaussDiagram unlink;
    unlink.component_lengths = {0, 0};
    auto kinds = negative_move_kinds();
    CHECK(enumerate_sites(unlink, kinds).empty());
    int positive_omega2 = 0;
    for (const MoveSite& s : enumerate_sites(unlink))
        if (s.polarity == Polarity::Positive && family_of(s.variant) == MoveFamily::Omega2)
            ++positive_omega2;
    CHECK(positive_omega2 > 0);
}

TEST_CASE("negative site count on the nested bigon family") {
    CHECK(negative_inter_omega2_sites(family_nested_bigons(1)).size() == 1);
    CHECK(negative_inter_omega2_sites(family_nested_bigons(2)).size() == 2);
    // deeper nests expose the innermost pair and the outermost pair (via
    // the wrap reading); the middle pairs are blocked
    for (int n : {3, 4, 6}) CHECK(negative_inter_omega2_sites(family_nested_bigons(n)).size() == 2);
}

TEST_CASE("positive inter-component omega2 drops T by one") {
    GaussDiagram unlink;
    unlink.component_lengths = {0, 0};
    MoveSite s;
    s.variant = MoveVariant::Omega2a;
    s.polarity = Polarity::Positive;
    s.insertions = {{0, 0, false}, {1, 0, false}};
    s.sign = 1;
    s.aligned = true;
    GaussDiagram once = apply_move(unlink, s);
    CHECK(multiple_linking_t(once) == -1);
    CHECK(multiple_linking_s(once) == 0);

    for (int n : {1, 2, 3}) {
        GaussDiagram g = family_torus(n);
        GaussDiagram h = apply_move(g, s);
        CHECK(multiple_linking_t(h) == 1LL * n * (n - 1) - 1);
        CHECK(multiple_linking_s(h) == 1LL * n * n);
    }
}

TEST_CASE("apply rejects stale sites") {
    GaussDiagram g = family_torus(2);
    MoveSite bogus;
    bogus.variant = MoveVariant::Omega1a;
    bogus.polarity = Polarity::Negative;
    bogus.arrows = {0};
    bogus.windows = {{{0, 0}, {0, 1}}};
    CHECK_THROWS_AS(apply_move(g, bogus), std::invalid_argument);  // arrow 0 is not a kink

    MoveSite far;
    far.variant = MoveVariant::Omega2a;
    far.polarity = Polarity::Positive;
    far.insertions = {{0, 99, false}, {1, 0, false}};
    far.sign = 1;
    CHECK_THROWS_AS(apply_move(g, far), std::invalid_argument);

    // site enumerated on one diagram, applied to another
    GaussDiagram kink = parse_gauss_code("O1+U1+");
    auto kinds = negative_move_kinds();
    auto sites = enumerate_sites(kink, kinds);
    CHECK_THROWS_AS(apply_move(family_torus(3), sites.at(0)), std::invalid_argument);
}

TEST_CASE("every enumerated site applies and preserves validity") {
    for (int trial = 0; trial < 60; ++trial) {
        GaussDiagram g = random_diagram(910000 + trial, 2, 8);
        for (const MoveSite& s : enumerate_sites(g)) {
            GaussDiagram h = apply_move(g, s);
            CHECK(is_structurally_sound(h));
            int delta = h.crossing_count() - g.crossing_count();
            switch (s.polarity) {
                case Polarity::Positive:
                    CHECK(delta == (family_of(s.variant) == MoveFamily::Omega1 ? 1 : 2));
                    break;
                case Polarity::Negative:
                    CHECK(delta == (family_of(s.variant) == MoveFamily::Omega1 ? -1 : -2));
                    break;
                case Polarity::None:
                    CHECK(delta == 0);
                    break;
            }
        }
    }
}

TEST_CASE("inverse round trip on hand-picked moves") {
    GaussDiagram unlink;
    unlink.component_lengths = {0, 0};
    MoveSite pos;
    pos.variant = MoveVariant::Omega2c;
    pos.polarity = Polarity::Positive;
    pos.insertions = {{0, 0, false}, {1, 0, false}};
    pos.sign = 1;
    pos.aligned = false;
    GaussDiagram once = apply_move(unlink, pos);
    MoveSite neg = inverse_site(pos, once);
    CHECK(apply_move(once, neg) == unlink);

    // negative then positive: removing the pair and re-inserting restores
    GaussDiagram d2 = family_nested_bigons(2);
    for (const MoveSite& s : negative_inter_omega2_sites(d2)) {
        GaussDiagram after = apply_move(d2, s);
        MoveSite back = inverse_site(s, after);
        CHECK(apply_move(after, back) == d2);
    }
}

TEST_CASE("inverse round trip on 500 random sites") {
    int checked = 0;
    for (int trial = 0; checked < 500; ++trial) {
        REQUIRE(trial < 200);
        GaussDiagram g = random_diagram(47000 + trial, 2, 8);
        auto sites = enumerate_sites(g);
        for (size_t k = 0; k < sites.size() && checked < 500; k += 7) {
            const MoveSite& s = sites[k];
            GaussDiagram after = apply_move(g, s);
            MoveSite back = inverse_site(s, after);
            GaussDiagram restored = apply_move(after, back);
            CHECK(restored == g);
            ++checked;
        }
    }
}

TEST_CASE("omega3 configuration table structure") {
    const auto& table = omega3_config_table();
    CHECK(table.size() == 16);
    std::map<MoveVariant, int> per_variant;
    std::set<std::pair<int, int>> keys;
    for (const Omega3Config& c : table) {
        ++per_variant[c.variant];
        CHECK(keys.insert({c.order_bits, c.sign_mask}).second);
        // the transposed configuration is the same variant read backwards
        bool partner = false;
        for (const Omega3Config& d : table)
            partner |= (d.order_bits == (c.order_bits ^ 7) && d.sign_mask == c.sign_mask &&
                        d.variant == c.variant);
        CHECK(partner);
    }
    CHECK(per_variant.size() == 8);
    for (const auto& [v, count] : per_variant) CHECK(count == 2);
    // the anchored class: signs (+,-,+) on (top-mid, top-bottom, mid-bottom)
    for (const Omega3Config& c : table)
        if (c.variant == MoveVariant::Omega3a) CHECK(c.sign_mask == 0b010);
}

TEST_CASE("closures host exactly their variant's site") {
    for (const Omega3Config& c : omega3_config_table())
        for (int lone = 0; lone < 3; ++lone) {
            GaussDiagram w = omega3_closure(c, lone);
            CHECK(is_structurally_sound(w));
            int found = 0;
            for (const MoveSite& s : enumerate_sites(w))
                if (family_of(s.variant) == MoveFamily::Omega3) {
                    CHECK(s.variant == c.variant);
                    ++found;
                }
            CHECK(found >= 1);
        }
}

TEST_CASE("omega3 moves change neither S nor T nor crossing count") {
    for (const Omega3Config& c : omega3_config_table())
        for (int lone = 0; lone < 3; ++lone) {
            GaussDiagram w = omega3_closure(c, lone);
            for (const MoveSite& s : enumerate_sites(w)) {
                if (family_of(s.variant) != MoveFamily::Omega3) continue;
                GaussDiagram after = apply_move(w, s);
                CHECK(multiple_linking_s(after) == multiple_linking_s(w));
                CHECK(multiple_linking_t(after) == multiple_linking_t(w));
                // applying the move at the same windows again restores
                MoveSite back = inverse_site(s, after);
                CHECK(apply_move(after, back) == w);
            }
        }
}

TEST_CASE("torus diagrams carry no omega3 sites") {
    for (int n : {2, 3, 4}) {
        int count = 0;
        for (const MoveSite& s : enumerate_sites(family_torus(n)))
            if (family_of(s.variant) == MoveFamily::Omega3) ++count;
        CHECK(count == 0);
    }
}

TEST_CASE("table-2 expansion: three moves for omega3b/c/f, five for d/e/h") {
    std::map<MoveVariant, size_t> expected{
        {MoveVariant::Omega3b, 3}, {MoveVariant::Omega3c, 3}, {MoveVariant::Omega3f, 3},
        {MoveVariant::Omega3d, 5}, {MoveVariant::Omega3e, 5}, {MoveVariant::Omega3h, 5},
        {MoveVariant::Omega3g, 7},
    };
    std::map<MoveVariant, int> seen;
    for (const Omega3Config& c : omega3_config_table()) {
        if (c.variant == MoveVariant::Omega3a) continue;
        for (int lone = 0; lone < 3; ++lone) {
            GaussDiagram w = omega3_closure(c, lone);
            for (const MoveSite& s : enumerate_sites(w)) {
                if (family_of(s.variant) != MoveFamily::Omega3) continue;
                auto seq = decompose_via_table2(w, s);
                CHECK(seq.size() == expected.at(s.variant));
                ++seen[s.variant];
                // composite equals direct application; inner omega3 steps
                // are all omega3a
                GaussDiagram direct = apply_move(w, s);
                GaussDiagram cur = w;
                long long t0 = multiple_linking_t(cur);
                for (const MoveSite& step : seq) {
                    if (family_of(step.variant) == MoveFamily::Omega3)
                        CHECK(step.variant == MoveVariant::Omega3a);
                    cur = apply_move(cur, step);
                }
                CHECK(cur == direct);
                CHECK(multiple_linking_t(cur) == t0);
            }
        }
    }
    for (const auto& [v, n] : expected) {
        (void)n;
        CHECK(seen[v] > 0);
    }
}

TEST_CASE("decompose rejects non-omega3 and omega3a sites") {
    GaussDiagram kink = parse_gauss_code("O1+U1+");
    auto kinds = negative_move_kinds();
    auto sites = enumerate_sites(kink, kinds);
    CHECK_THROWS_AS(decompose_via_table2(kink, sites.at(0)), std::invalid_argument);

    const Omega3Config* a_config = nullptr;
    for (const Omega3Config& c : omega3_config_table())
        if (c.variant == MoveVariant::Omega3a) a_config = &c;
    GaussDiagram w = omega3_closure(*a_config, 2);
    for (const MoveSite& s : enumerate_sites(w))
        if (s.variant == MoveVariant::Omega3a)
            CHECK_THROWS_AS(decompose_via_table2(w, s), std::invalid_argument);
}

TEST_CASE("site JSON round trip") {
    GaussDiagram g = family_nested_bigons(2);
    for (const MoveSite& s : enumerate_sites(g)) {
        MoveSite back = site_from_json(site_to_json(s));
        CHECK(back == s);
    }
}

TEST_CASE("kind filtering") {
    GaussDiagram g = family_nested_bigons(2);
    std::vector<MoveKind> only_neg2{{MoveVariant::Omega2a, Polarity::Negative},
                                    {MoveVariant::Omega2b, Polarity::Negative},
                                    {MoveVariant::Omega2c, Polarity::Negative},
                                    {MoveVariant::Omega2d, Polarity::Negative}};
    for (const MoveSite& s : enumerate_sites(g, only_neg2)) {
        CHECK(family_of(s.variant) == MoveFamily::Omega2);
        CHECK(s.polarity == Polarity::Negative);
    }
    CHECK(enumerate_sites(g, only_neg2).size() == 2);
}
