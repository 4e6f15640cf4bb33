#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "sopcm/identification.hpp"
#include "sopcm/poset.hpp"
#include "support.hpp"

using namespace sopcm;

namespace {

const PrimeField F;

VertexSet bit(int v) { return VertexSet{1} << v; }

}  // namespace

TEST_CASE("poset validation") {
    CHECK_NOTHROW(build_poset(2, {{0, 1}}, {{0, 1}}));
    CHECK_NOTHROW(build_poset(2, {}, {}));
    CHECK_NOTHROW(build_poset(3, {{0, 2}}, {}));
    // x1 < y1 < x1 is a cycle.
    CHECK_THROWS_AS(build_poset(2, {{0, 0}}, {{0, 0}}), InvalidInput);
    // x1 < y2 follows from x1 < y1 < y2, so it is not a cover.
    CHECK_THROWS_AS(build_poset(2, {{0, 0}, {0, 1}}, {}), InvalidInput);
    CHECK_THROWS_AS(build_poset(0, {}, {}), InvalidInput);
    try {
        build_poset(2, {{0, 0}}, {{0, 0}});
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("not a valid two-chain poset") != std::string::npos);
    }
}

TEST_CASE("order complexes of small posets") {
    auto none = build_poset(2, {}, {});
    CHECK(order_complex(none).facets() == std::vector<VertexSet>{bit(0) | bit(1), bit(2) | bit(3)});
    auto point = build_poset(1, {}, {});
    CHECK(order_complex(point).facets().size() == 2);

    auto both = build_poset(2, {{0, 1}}, {{0, 1}});
    auto c = order_complex(both);
    CHECK(c.facets().size() == 4);
    CHECK(c.contains(bit(0) | bit(3)));
    CHECK(c.contains(bit(2) | bit(1)));
    CHECK_FALSE(c.contains(bit(0) | bit(2)));
}

TEST_CASE("order complex faces are the chains") {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& p : support::all_two_chain_posets(n)) {
            auto c = order_complex(p);
            for (VertexSet s = 0; s < (VertexSet{1} << (2 * n)); ++s) {
                bool chain = true;
                for (int a = 0; a < 2 * n; ++a) {
                    for (int b = a + 1; b < 2 * n; ++b) {
                        if ((s >> a & 1) && (s >> b & 1) && !p.comparable(a, b)) chain = false;
                    }
                }
                CHECK(c.contains(s) == chain);
            }
        }
    }
}

TEST_CASE("diagonal conditions on the documented cases") {
    CHECK(diagonal_conditions(build_poset(2, {{0, 1}}, {{0, 1}})));
    CHECK_FALSE(diagonal_conditions(build_poset(2, {}, {})));
    CHECK_FALSE(diagonal_conditions(build_poset(3, {{0, 2}}, {})));
    auto one = build_poset(3, {{0, 1}}, {});
    CHECK_FALSE(diagonal_conditions(one));
    auto v = poset_cm_verdict(one, F);
    CHECK_FALSE(v.by_universal_sop);
    CHECK(v.agree);
}

TEST_CASE("shelling orders") {
    auto both = build_poset(2, {{0, 1}}, {{0, 1}});
    auto order = shelling_order(both);
    REQUIRE(order);
    CHECK(order->size() == 4);
    CHECK(is_shelling(*order));
    CHECK(order->front() == (bit(0) | bit(1)));

    auto up = build_poset(3, {{0, 1}, {1, 2}}, {});
    auto shelled = shelling_order(up);
    REQUIRE(shelled);
    CHECK(is_shelling(*shelled));
    CHECK(shelling_order(build_poset(2, {}, {})) == std::nullopt);

    CHECK(shelling_order(build_poset(1, {}, {}))->size() == 2);
    // Two disjoint edges are not shellable in either order.
    CHECK_FALSE(is_shelling({bit(0) | bit(1), bit(2) | bit(3)}));
}

TEST_CASE("enumeration covers every two-chain poset") {
    CHECK(support::all_two_chain_posets(1).size() == 1);
    for (int n = 1; n <= 3; ++n) {
        for (const auto& p : support::all_two_chain_posets(n)) {
            // Rebuilding from the covers gives the same order.
            auto q = build_poset(n, p.covers_xy(), p.covers_yx());
            for (int a = 0; a < 2 * n; ++a) CHECK(q.below(a) == p.below(a));
        }
    }
}

TEST_CASE("Cohen-Macaulay verdicts and shellings for n <= 3") {
    int cm = 0;
    for (int n = 1; n <= 3; ++n) {
        for (const auto& p : support::all_two_chain_posets(n)) {
            auto v = poset_cm_verdict(p, F);
            CHECK(v.agree);
            auto c = order_complex(p);
            CHECK(v.by_universal_sop == (oracle::hochster_depth(c, F.characteristic()) == c.d()));
            if (!v.by_conditions) continue;
            ++cm;
            CHECK(c.is_pure());
            CHECK(c.d() == n);
            for (auto f : c.facets()) {
                for (int i = 0; i < n; ++i) CHECK(((f >> p.x(i) & 1) ^ (f >> p.y(i) & 1)) == 1);
            }
            auto order = shelling_order(p);
            REQUIRE(order);
            CHECK(is_shelling(*order));
        }
    }
    CHECK(cm > 3);
}

TEST_CASE("x_i - y_i is an identification sop under condition (1)") {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& p : support::all_two_chain_posets(n)) {
            bool level = true;
            for (auto [i, j] : p.covers_xy()) level = level && j == i + 1;
            for (auto [i, j] : p.covers_yx()) level = level && j == i + 1;
            if (!level) continue;
            IdentificationSop sop;
            for (int i = 0; i < n; ++i) sop.pairs.emplace_back(p.x(i), p.y(i));
            CHECK(verify_identification_sop(stanley_reisner_ideal(order_complex(p)), sop));
        }
    }
}

TEST_CASE("linear resolution criterion") {
    auto point = linear_resolution_test(build_poset(1, {}, {}), F);
    CHECK(point.by_condition);
    CHECK(point.by_regularity);

    auto none = linear_resolution_test(build_poset(2, {}, {}), F);
    CHECK(none.by_condition);
    CHECK(none.by_regularity);
    CHECK(none.agree);

    auto both = linear_resolution_test(build_poset(2, {{0, 1}}, {{0, 1}}), F);
    CHECK_FALSE(both.by_condition);
    CHECK_FALSE(both.by_regularity);
    CHECK(both.reg == 2);
    REQUIRE(both.witness);
    CHECK(*both.witness == std::array<int, 4>{0, 1, 1, 0});

    auto single = linear_resolution_test(build_poset(2, {{0, 1}}, {}), F);
    CHECK(single.by_condition);
    CHECK(single.by_regularity);

    for (int n = 1; n <= 3; ++n) {
        for (const auto& p : support::all_two_chain_posets(n)) CHECK(linear_resolution_test(p, F).agree);
    }
}
