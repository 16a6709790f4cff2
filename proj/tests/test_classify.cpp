#include <doctest.h>

#include <random>

#include "ogsat/classify.hpp"
#include "ogsat/embed.hpp"
#include "ogsat/families.hpp"
#include "oracles.hpp"

using namespace ogsat;

namespace {
OrderedGraph og(int n, std::vector<Edge> e) { return OrderedGraph(n, std::move(e)); }

bool has_rule(const Verdict& v, const std::string& id) {
    for (const auto& r : v.rules)
        if (r.id == id) return true;
    return false;
}
}  // namespace

TEST_CASE("minedges and superedges") {
    CHECK(minedges(consecutive_matching(2)) == std::vector<Edge>{{1, 2}, {3, 4}});
    CHECK(minedges(crossing_chain(2)).empty());
    const auto g101 = linked_matching(LinkedMatchingSpec({1, 0, 1}));
    CHECK(minedges(g101) == std::vector<Edge>{{2, 3}, {8, 9}});
    CHECK(superedges(g101) == std::vector<Edge>{{1, 5}, {6, 10}});  // (4,7) covers nothing
    CHECK(superedges(consecutive_matching(4)).empty());
    CHECK(superedges(og(4, {{1, 4}, {2, 3}})) == std::vector<Edge>{{1, 4}});
}

TEST_CASE("minedges and superedges are disjoint") {
    std::mt19937 rng(47);
    for (int it = 0; it < 60; it++) {
        const int n = std::uniform_int_distribution<int>(2, 9)(rng);
        OrderedGraph g(n, oracle::random_edge_set(rng, n, 9));
        const auto mins = minedges(g);
        for (const auto& e : superedges(g))
            CHECK(std::find(mins.begin(), mins.end(), e) == mins.end());
    }
}

TEST_CASE("cyclic minedges and bisuperedges") {
    CHECK(cyclic_minedges(consecutive_matching_cyclic(2)) == std::vector<Edge>{{1, 2}, {3, 4}});
    CHECK(cyclic_minedges(enclosed_matching(1)) == std::vector<Edge>{{3, 4}});
    CHECK(cyclic_minedges(complete_graph_cyclic(3)).empty());
    CHECK(bisuperedges(enclosed_matching(1)).empty());  // one side of (1,5) is just {6}
    CHECK(bisuperedges(consecutive_matching_cyclic(2)).empty());
    CHECK(bisuperedges(CyclicGraph(6, {{1, 4}, {2, 3}, {5, 6}})) == std::vector<Edge>{{1, 4}});
    // a wrapping edge whose outside interval induces an edge
    CHECK(bisuperedges(CyclicGraph(6, {{2, 5}, {3, 4}, {1, 6}})) == std::vector<Edge>{{2, 5}});
}

TEST_CASE("interval chromatic number: greedy equals brute force") {
    CHECK(interval_chromatic_number(og(2, {{1, 2}})) == 2);
    CHECK(interval_chromatic_number(crossing_chain(2)) == 2);
    CHECK(interval_chromatic_number(consecutive_matching(2)) == 3);

    std::mt19937 rng(53);
    for (int it = 0; it < 300; it++) {
        const int n = std::uniform_int_distribution<int>(1, 10)(rng);
        OrderedGraph g(n, oracle::random_edge_set(rng, n, 8));
        CHECK(interval_chromatic_number(g) == oracle::brute_interval_chromatic(g));
    }
}

TEST_CASE("separable and nested splits") {
    auto sep = is_separable(consecutive_matching(2));
    REQUIRE(sep);
    CHECK(sep->cut == 2);
    CHECK_FALSE(is_separable(crossing_chain(2)));
    CHECK_FALSE(is_separable(linked_matching(LinkedMatchingSpec({1, 0, 1}))));

    auto nest = is_nested(og(4, {{1, 4}, {2, 3}}));
    REQUIRE(nest);
    CHECK(nest->outer == std::vector<Edge>{{1, 4}});
    CHECK(nest->inner == std::vector<Edge>{{2, 3}});
    CHECK_FALSE(is_nested(consecutive_matching(2)));
    CHECK_FALSE(is_nested(linked_matching(LinkedMatchingSpec({0, 1, 0}))));

    std::mt19937 rng(59);
    for (int it = 0; it < 200; it++) {
        const int n = std::uniform_int_distribution<int>(2, 8)(rng);
        OrderedGraph g(n, oracle::random_edge_set(rng, n, 8));
        CHECK(is_separable(g).has_value() == oracle::brute_separable(g));
        CHECK(is_nested(g).has_value() == oracle::brute_nested(g));
        if (auto s = is_nested(g)) {
            for (const auto& o : s->outer)
                for (const auto& i : s->inner) CHECK((o.u < i.u && i.v < o.v));
        }
    }
}

TEST_CASE("linked matching recognition by regeneration") {
    CHECK(recognize_linked_matching(linked_matching(LinkedMatchingSpec({2, 0, 1}))) ==
          std::vector<int>{2, 0, 1});
    CHECK(recognize_linked_matching(crossing_chain(3)) == std::vector<int>{0, 0, 0});
    CHECK(recognize_linked_matching(og(2, {{1, 2}})) == std::vector<int>{0});
    CHECK_FALSE(recognize_linked_matching(consecutive_matching(2)));
    CHECK_FALSE(recognize_linked_matching(complete_graph(3)));
    CHECK_FALSE(recognize_linked_matching(og(3, {{1, 2}})));  // isolated vertex
}

TEST_CASE("ordered verdicts fire the right rules") {
    auto v = verdict_ordered(linked_matching(LinkedMatchingSpec({1, 1, 1})));
    CHECK(v.status == SatStatus::Linear);
    CHECK(has_rule(v, "claim:allnonzero"));
    CHECK(has_rule(v, "thm:minsup"));

    v = verdict_ordered(linked_matching(LinkedMatchingSpec({0, 1, 0})));
    CHECK(v.status == SatStatus::Bounded);
    CHECK(has_rule(v, "thm:gamma3"));

    v = verdict_ordered(linked_matching(LinkedMatchingSpec({0, 2, 0})));
    CHECK(v.status == SatStatus::Unknown);
    CHECK(v.rules.empty());

    v = verdict_ordered(og(2, {{1, 2}}));
    CHECK(v.status == SatStatus::Bounded);
    CHECK(has_rule(v, "obs:single"));

    v = verdict_ordered(complete_graph(3));
    CHECK(v.status == SatStatus::Linear);
    CHECK(has_rule(v, "claim:minedge"));

    v = verdict_ordered(consecutive_matching(2));
    CHECK(v.status == SatStatus::Linear);
    CHECK(has_rule(v, "thm:sep"));

    v = verdict_ordered(crossing_chain(2));
    CHECK(v.status == SatStatus::Linear);
    CHECK(has_rule(v, "cor:intchrom"));
    CHECK(has_rule(v, "claim:minedge"));

    v = verdict_ordered(linked_matching(LinkedMatchingSpec({2, 0, 0})));
    CHECK(v.status == SatStatus::Linear);
    CHECK(has_rule(v, "claim:firstnonzero"));

    v = verdict_ordered(og(4, {{1, 4}, {2, 3}}));  // nested pair
    CHECK(v.status == SatStatus::Linear);
    CHECK(has_rule(v, "thm:sep"));
    CHECK(has_rule(v, "cor:coverminedge"));

    // every neighbour of the first vertex has degree > 1
    v = verdict_ordered(og(4, {{1, 2}, {2, 3}, {2, 4}}));
    CHECK(v.status == SatStatus::Linear);
    CHECK(has_rule(v, "claim:firstneighbors"));

    CHECK_THROWS_AS(verdict_ordered(og(3, {})), std::invalid_argument);
}

TEST_CASE("the overlay-family bounded rule") {
    const auto g = linked_matching(LinkedMatchingSpec({0, 0, 1, 0, 0, 1, 0, 0}));
    const auto v = verdict_ordered(g);
    CHECK(v.status == SatStatus::Bounded);
    CHECK(has_rule(v, "thm:gamma0010"));

    // the variant ending in four zero links decomposes against the plain chain
    const auto g2 = linked_matching(LinkedMatchingSpec({0, 0, 1, 1, 1, 0, 0, 0}));
    const auto v2 = verdict_ordered(g2);
    CHECK(v2.status == SatStatus::Bounded);
    CHECK(has_rule(v2, "thm:gamma0010"));
}

TEST_CASE("cyclic verdicts fire the right rules") {
    auto v = verdict_cyclic(consecutive_matching_cyclic(3));
    CHECK(v.status == SatStatus::Linear);
    CHECK(has_rule(v, "claim:lkcyclic"));
    CHECK(has_rule(v, "thm:minsupcyclic"));

    v = verdict_cyclic(consecutive_matching_cyclic(2));
    CHECK(v.status == SatStatus::Linear);
    CHECK(has_rule(v, "claim:lkcyclic"));
    CHECK_FALSE(has_rule(v, "thm:minsupcyclic"));  // no L3 inside

    v = verdict_cyclic(enclosed_matching(2));
    CHECK(v.status == SatStatus::Bounded);
    CHECK(has_rule(v, "thm:xk"));

    v = verdict_cyclic(enclosed_matching(0));
    CHECK(v.status == SatStatus::Linear);
    CHECK(has_rule(v, "claim:minedgecyclic"));

    v = verdict_cyclic(complete_graph_cyclic(3));
    CHECK(v.status == SatStatus::Linear);
    CHECK(has_rule(v, "claim:minedgecyclic"));

    // rotated families are recognised up to rotation
    v = verdict_cyclic(rotate(enclosed_matching(2), 3));
    CHECK(v.status == SatStatus::Bounded);
    v = verdict_cyclic(rotate(consecutive_matching_cyclic(3), 2));
    CHECK(v.status == SatStatus::Linear);

    // cyclic reading of a bounded ordered pattern: unknown without a certificate
    v = verdict_cyclic(cyclic_closure(linked_matching(LinkedMatchingSpec({1, 0, 1}))));
    CHECK(v.status == SatStatus::Unknown);
}

TEST_CASE("semisaturation characterizations are complete") {
    auto v = ssat_verdict_ordered(linked_matching(LinkedMatchingSpec({1, 0, 1})));
    CHECK(v.status == SatStatus::Bounded);
    CHECK(has_rule(v, "thm:semiord"));

    CHECK(ssat_verdict_ordered(complete_graph(3)).status == SatStatus::Linear);
    CHECK(ssat_verdict_ordered(og(2, {{1, 2}})).status == SatStatus::Bounded);
    CHECK(ssat_verdict_ordered(consecutive_matching(2)).status == SatStatus::Bounded);
    CHECK(ssat_verdict_ordered(crossing_chain(2)).status == SatStatus::Linear);

    CHECK(ssat_verdict_cyclic(consecutive_matching_cyclic(2)).status == SatStatus::Bounded);
    CHECK(ssat_verdict_cyclic(complete_graph_cyclic(3)).status == SatStatus::Linear);
    CHECK(ssat_verdict_cyclic(enclosed_matching(1)).status == SatStatus::Bounded);

    // never Unknown on a corpus sweep
    std::mt19937 rng(61);
    for (int it = 0; it < 60; it++) {
        const int n = std::uniform_int_distribution<int>(2, 8)(rng);
        auto edges = oracle::random_edge_set(rng, n, 8);
        if (edges.empty()) continue;
        CHECK(ssat_verdict_ordered(OrderedGraph(n, edges)).status != SatStatus::Unknown);
        CHECK(ssat_verdict_cyclic(CyclicGraph(n, edges)).status != SatStatus::Unknown);
    }
}

TEST_CASE("interval chromatic number two implies a linear verdict") {
    // the single edge is the one exception: it is bounded outright
    std::mt19937 rng(67);
    int hits = 0;
    for (int it = 0; it < 200; it++) {
        const int n = std::uniform_int_distribution<int>(2, 8)(rng);
        auto edges = oracle::random_edge_set(rng, n, 8);
        if (edges.empty()) continue;
        if (n == 2 && edges.size() == 1) continue;
        OrderedGraph g(n, edges);
        if (interval_chromatic_number(g) != 2) continue;
        hits++;
        CHECK(verdict_ordered(g).status == SatStatus::Linear);
    }
    CHECK(hits > 10);
}

TEST_CASE("all-positive linked matchings have only minedges and superedges") {
    std::mt19937 rng(71);
    for (int it = 0; it < 20; it++) {
        const int k = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<int> m(k);
        for (int& x : m) x = std::uniform_int_distribution<int>(1, 2)(rng);
        const auto g = linked_matching(LinkedMatchingSpec(m));
        const auto mins = minedges(g);
        const auto sups = superedges(g);
        for (const auto& e : g.edges) {
            const bool is_min = std::find(mins.begin(), mins.end(), e) != mins.end();
            const bool is_sup = std::find(sups.begin(), sups.end(), e) != sups.end();
            CHECK((is_min || is_sup));
        }
    }
}

TEST_CASE("verdict JSON shape") {
    const auto v = verdict_ordered(linked_matching(LinkedMatchingSpec({0, 1, 0})));
    const auto text = verdict_json(v);
    CHECK(text.find("\"status\":\"Bounded\"") != std::string::npos);
    CHECK(text.find("\"id\":\"thm:gamma3\"") != std::string::npos);
    CHECK(text.find("\"citation\"") != std::string::npos);
}
