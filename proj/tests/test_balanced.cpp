#include <catch2/catch_amalgamated.hpp>

#include <hypertoric/balanced.hpp>
#include <hypertoric/families.hpp>

#include "support.hpp"

using namespace hypertoric;

TEST_CASE("group-based walk satisfies the balancing condition", "[balanced]") {
    Hypergraph gb = group_based_16();
    BalancedEdgeSet w = test_support::walk_by_labels(gb, {"e324", "e111", "e243", "e432"},
                                                     {"e122", "e313", "e234", "e441"});
    CHECK(is_balanced(w));

    CHECK(is_balanced(BalancedEdgeSet(gb, {}, {})));
    CHECK_FALSE(is_balanced(test_support::walk_by_labels(gb, {"e111"}, {})));
    CHECK_THROWS_AS(BalancedEdgeSet(gb, Multiset{{99, 1}}, Multiset{}), std::out_of_range);
}

TEST_CASE("binomial of a walk records the color exponents", "[balanced]") {
    Hypergraph gb = group_based_16();
    BalancedEdgeSet w = test_support::walk_by_labels(gb, {"e324", "e111", "e243", "e432"},
                                                     {"e122", "e313", "e234", "e441"});
    Binomial f = binomial_of(w);
    CHECK(f.plus == test_support::edges_by_labels(gb, {"e324", "e111", "e243", "e432"}));
    CHECK(f.minus == test_support::edges_by_labels(gb, {"e122", "e313", "e234", "e441"}));
    CHECK(f.degree() == 4);
    CHECK(kernel_condition_holds(gb, f));

    CHECK_THROWS_AS(binomial_of(BalancedEdgeSet(gb, {}, {})), std::invalid_argument);

    Hypergraph k22 = complete_kpartite(2, 2);
    BalancedEdgeSet cycle(k22, Multiset::from_elements({0, 3}), Multiset::from_elements({1, 2}));
    Binomial quadric = binomial_of(cycle);
    CHECK(quadric.plus == Multiset({{0, 1}, {3, 1}}));
    CHECK(quadric.minus == Multiset({{1, 1}, {2, 1}}));
}

TEST_CASE("walks and binomials round-trip", "[balanced]") {
    Hypergraph k22 = complete_kpartite(2, 2);
    Binomial quadric(Multiset({{0, 1}, {3, 1}}), Multiset({{1, 1}, {2, 1}}));
    BalancedEdgeSet cycle = balanced_of_binomial(k22, quadric);
    CHECK(cycle.blue == quadric.plus);
    CHECK(cycle.red == quadric.minus);
    CHECK(binomial_of(cycle) == quadric);

    CHECK_THROWS_AS(balanced_of_binomial(k22, Binomial()), std::invalid_argument);
    CHECK_THROWS_AS(balanced_of_binomial(k22, Binomial(Multiset({{0, 1}}), Multiset({{1, 1}}))),
                    std::invalid_argument);

    // The unique degree-4 binomial of the 2x2x2 model maps to the 8-edge walk.
    Hypergraph no3 = no_three_way(2, 2, 2);
    BalancedEdgeSet walk = slim_table_walk(no3, 2, 2);
    Binomial f = binomial_of(walk);
    BalancedEdgeSet back = balanced_of_binomial(no3, f);
    CHECK(back == walk);
    CHECK(back.size() == 8);

    // Walks with a shared edge reduce when mapped to a binomial.
    Hypergraph k23 = complete_kpartite(2, 3);
    BalancedEdgeSet shared(k23, Multiset::from_elements({0, 4, 2}),
                           Multiset::from_elements({1, 3, 2}));
    REQUIRE(is_balanced(shared));
    Binomial reduced = binomial_of(shared);
    CHECK(reduced.plus == Multiset({{0, 1}, {4, 1}}));
    CHECK(reduced.minus == Multiset({{1, 1}, {3, 1}}));
    CHECK_FALSE(balanced_of_binomial(k23, reduced) == shared);
}

TEST_CASE("primitivity detects nested balanced subsets", "[balanced]") {
    Hypergraph no3 = no_three_way(2, 2, 2);
    CHECK(is_primitive(slim_table_walk(no3, 2, 2)));

    Hypergraph k22 = complete_kpartite(2, 2);
    BalancedEdgeSet cycle(k22, Multiset::from_elements({0, 3}), Multiset::from_elements({1, 2}));
    CHECK(is_primitive(cycle));

    // Multiset union of two 4-cycles: the first cycle sits inside.
    Hypergraph k33 = complete_kpartite(2, 3);
    auto e = [&](VertexId r, VertexId c) {
        return *k33.edge_index_of({r, static_cast<VertexId>(3 + c)});
    };
    BalancedEdgeSet two_cycles(
        k33,
        Multiset::from_elements({e(0, 0), e(1, 1), e(0, 2), e(2, 1)}),
        Multiset::from_elements({e(0, 1), e(1, 0), e(0, 1), e(2, 2)}));
    REQUIRE(is_balanced(two_cycles));
    CHECK_FALSE(is_primitive(two_cycles));

    BalancedEdgeSet unbalanced(k33, Multiset::from_elements({e(0, 0)}), Multiset{});
    CHECK_THROWS_AS(is_primitive(unbalanced), std::invalid_argument);
    CHECK_FALSE(is_primitive(BalancedEdgeSet(k33, {}, {})));
}

TEST_CASE("primitivity agrees with the naive subset oracle", "[balanced][property]") {
    Hypergraph k33 = complete_kpartite(2, 3);
    Hypergraph no3 = no_three_way(2, 2, 2);
    Hypergraph cum = cumulant_hypergraph(4, false);
    auto e33 = [&](VertexId r, VertexId c) {
        return *k33.edge_index_of({r, static_cast<VertexId>(3 + c)});
    };

    std::vector<BalancedEdgeSet> corpus = {
        slim_table_walk(no3, 2, 2),
        BalancedEdgeSet(k33, Multiset::from_elements({e33(0, 0), e33(1, 1)}),
                        Multiset::from_elements({e33(0, 1), e33(1, 0)})),
        BalancedEdgeSet(k33, Multiset::from_elements({e33(0, 0), e33(1, 1), e33(2, 2)}),
                        Multiset::from_elements({e33(0, 1), e33(1, 2), e33(2, 0)})),
        BalancedEdgeSet(k33,
                        Multiset::from_elements({e33(0, 0), e33(1, 1), e33(0, 2), e33(2, 1)}),
                        Multiset::from_elements({e33(0, 1), e33(1, 0), e33(0, 1), e33(2, 2)})),
        // Shared-edge walk: never primitive.
        BalancedEdgeSet(k33, Multiset::from_elements({e33(0, 0), e33(1, 1), e33(2, 2)}),
                        Multiset::from_elements({e33(0, 0), e33(1, 2), e33(2, 1)})),
        BalancedEdgeSet(cum, Multiset::from_elements({*cum.edge_index_of({0, 1}),
                                                      *cum.edge_index_of({0, 2}),
                                                      *cum.edge_index_of({1, 2})}),
                        Multiset({{*cum.edge_index_of({0, 1, 2}), 2}})),
    };
    for (const auto& walk : corpus) {
        REQUIRE(is_balanced(walk));
        CHECK(is_primitive(walk) == test_support::naive_is_primitive(walk));
        if (is_primitive(walk)) CHECK(intersection_of(walk.blue, walk.red).empty());
    }
}

TEST_CASE("adding a splitting set keeps balance", "[balanced]") {
    Hypergraph gb = group_based_16();
    BalancedEdgeSet w = test_support::walk_by_labels(gb, {"e324", "e111", "e243", "e432"},
                                                     {"e122", "e313", "e234", "e441"});
    Multiset s = test_support::edges_by_labels(gb, {"e133", "e212"});
    BalancedEdgeSet padded = add_splitting(w, s);
    CHECK(padded.size() == 12);
    CHECK(is_balanced(padded));
    CHECK(padded.blue.size() == w.blue.size() + s.size());

    CHECK(add_splitting(w, Multiset{}) == w);
    CHECK_THROWS_AS(add_splitting(w, Multiset{{999, 1}}), std::out_of_range);
}

TEST_CASE("maxdeg is the larger color degree", "[balanced]") {
    Hypergraph cum = cumulant_hypergraph(4, false);
    auto e = [&](std::vector<VertexId> vs) { return *cum.edge_index_of(std::move(vs)); };
    BalancedEdgeSet b(cum, Multiset::from_elements({e({0, 1}), e({0, 2}), e({0, 3})}),
                      Multiset::from_elements({e({1, 2})}));
    CHECK(maxdeg(0, b) == 3);
    CHECK(maxdeg(1, b) == 1);
    CHECK(maxdeg(3, b) == 1);

    Hypergraph k22 = complete_kpartite(2, 2);
    BalancedEdgeSet cycle(k22, Multiset::from_elements({0, 3}), Multiset::from_elements({1, 2}));
    CHECK(maxdeg(0, cycle) == 1);

    BalancedEdgeSet empty(k22, {}, {});
    CHECK(maxdeg(0, empty) == 0);
}

TEST_CASE("degree sums tie colors to edge sizes", "[balanced][property]") {
    Hypergraph gb = group_based_16();
    BalancedEdgeSet w = test_support::walk_by_labels(gb, {"e324", "e111", "e243", "e432"},
                                                     {"e122", "e313", "e234", "e441"});
    for (const auto& walk : {w, add_splitting(w, test_support::edges_by_labels(gb, {"e133", "e212"}))}) {
        std::int64_t blue_total = 0, red_total = 0, blue_weighted = 0;
        for (VertexId v = 0; v < gb.n_vertices(); ++v) {
            blue_total += walk.deg_blue(v);
            red_total += walk.deg_red(v);
        }
        for (const auto& [e, mult] : walk.blue.entries())
            blue_weighted += mult * static_cast<std::int64_t>(gb.edge(e).size());
        CHECK(blue_total == blue_weighted);
        CHECK(blue_total == red_total);
        // 3-uniform host: the balanced condition forces equal color sizes.
        CHECK(3 * walk.blue.size() == blue_total);
        CHECK(walk.blue.size() == walk.red.size());
    }
}
