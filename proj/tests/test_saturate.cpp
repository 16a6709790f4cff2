#include <doctest.h>

#include <random>

#include "ogsat/classify.hpp"
#include "ogsat/families.hpp"
#include "ogsat/saturate.hpp"
#include "oracles.hpp"

using namespace ogsat;

namespace {

OrderedGraph og(int n, std::vector<Edge> e) { return OrderedGraph(n, std::move(e)); }

// fixtures derived during development and verified by is_witness below
const OrderedGraph kWitness010(11, {{1, 3}, {2, 4}, {2, 7}, {3, 9}, {4, 5}, {5, 10}, {7, 8},
                                    {8, 10}, {9, 11}});
const OrderedGraph kWitness101(21, {{1, 5},  {2, 3},   {4, 8},   {5, 9},   {5, 10},  {6, 7},
                                    {8, 9},  {7, 12},  {9, 12},  {10, 13}, {10, 15}, {12, 17},
                                    {13, 14}, {13, 17}, {14, 18}, {15, 16}, {17, 21}, {19, 20}});

}  // namespace

TEST_CASE("is_saturating examples") {
    const auto edge = og(2, {{1, 2}});
    CHECK(is_saturating(og(5, {}), edge).ok);

    const auto star = og(4, {{1, 2}, {1, 3}, {1, 4}});
    CHECK(is_saturating(star, complete_graph(3)).ok);

    const auto l2 = consecutive_matching(2);
    auto rep = is_saturating(l2, l2);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.embedding);
    CHECK(rep.embedding->map == std::vector<int>{1, 2, 3, 4});

    rep = is_saturating(og(4, {}), l2);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.failing_edge);
    CHECK(*rep.failing_edge == Edge{1, 2});  // first non-edge in lexicographic order
}

TEST_CASE("is_semisaturating examples") {
    CHECK(is_semisaturating(og(2, {}), og(2, {{1, 2}})).ok);
    CHECK_FALSE(is_semisaturating(og(4, {}), consecutive_matching(2)).ok);

    const auto g101 = linked_matching(LinkedMatchingSpec({1, 0, 1}));
    CHECK(is_semisaturating(semisat_host(g101, 30), g101).ok);
}

TEST_CASE("saturating implies semisaturating") {
    std::mt19937 rng(73);
    for (int it = 0; it < 25; it++) {
        const int n = std::uniform_int_distribution<int>(2, 6)(rng);
        const int m = std::uniform_int_distribution<int>(2, 4)(rng);
        auto pedges = oracle::random_edge_set(rng, m, 3);
        if (pedges.empty()) continue;
        OrderedGraph pattern(m, pedges);
        OrderedGraph host(n, oracle::random_edge_set(rng, n, 6));
        if (contains_ordered(host, pattern)) continue;
        const auto sat = greedy_saturate(host, pattern);
        CHECK(is_saturating(sat, pattern).ok);
        CHECK(is_semisaturating(sat, pattern).ok);
    }
}

TEST_CASE("is_witness checks the run conditions") {
    const auto edge = og(2, {{1, 2}});
    auto cert = is_witness(og(2, {}), edge, true);
    REQUIRE(cert);
    CHECK(cert->isolated_anchor == 1);
    CHECK(cert->matching_mode);

    // non-matching mode needs two consecutive isolated vertices
    auto cert2 = is_witness(og(2, {}), edge, false);
    REQUIRE(cert2);
    CHECK(cert2->isolated_anchor == 1);

    CHECK_FALSE(is_witness(og(3, {}), consecutive_matching(2), true));
    CHECK_THROWS_AS(is_witness(og(4, {}), og(3, {{1, 2}}), false), std::invalid_argument);
    CHECK_THROWS_AS(is_witness(og(4, {}), og(3, {{1, 2}, {1, 3}, {2, 3}}), true), std::invalid_argument);
}

TEST_CASE("development fixtures verify as witnesses, ordered and cyclic") {
    const auto g010 = linked_matching(LinkedMatchingSpec({0, 1, 0}));
    auto c1 = is_witness(kWitness010, g010, true);
    REQUIRE(c1);
    CHECK(c1->isolated_anchor == 6);
    CHECK(is_witness(cyclic_closure(kWitness010), cyclic_closure(g010), true).has_value());

    const auto g101 = linked_matching(LinkedMatchingSpec({1, 0, 1}));
    auto c2 = is_witness(kWitness101, g101, true);
    REQUIRE(c2);
    CHECK(c2->isolated_anchor == 11);
    CHECK(is_witness(cyclic_closure(kWitness101), cyclic_closure(g101), true).has_value());
}

TEST_CASE("blowup grows the isolated run and nothing else") {
    const auto edge = og(2, {{1, 2}});
    const auto cert = is_witness(og(2, {}), edge, true);
    REQUIRE(cert);
    const auto h10 = blowup(*cert, 10);
    CHECK(h10.n == 10);
    CHECK(h10.edges.empty());
    CHECK(is_saturating(h10, edge).ok);
    CHECK_THROWS_AS(blowup(*cert, 1), std::invalid_argument);

    const auto g010 = linked_matching(LinkedMatchingSpec({0, 1, 0}));
    const auto c = is_witness(kWitness010, g010, true);
    REQUIRE(c);
    for (int n = kWitness010.n; n <= kWitness010.n + 20; n += 5) {
        const auto h = blowup(*c, n);
        CHECK(h.n == n);
        CHECK(h.edges.size() == kWitness010.edges.size());
    }
}

TEST_CASE("blowup plus greedy completion saturates at constant size") {
    const auto g010 = linked_matching(LinkedMatchingSpec({0, 1, 0}));
    const auto cert = is_witness(kWitness010, g010, true);
    REQUIRE(cert);
    size_t edges_seen = 0;
    for (int n = kWitness010.n; n <= kWitness010.n + 20; n++) {
        const auto h = greedy_saturate(blowup(*cert, n), g010);
        CHECK(is_saturating(h, g010).ok);
        if (edges_seen == 0) edges_seen = h.edges.size();
        CHECK(h.edges.size() == edges_seen);  // bounded saturation: constant across n
    }
}

TEST_CASE("greedy_saturate is deterministic, idempotent and correct") {
    const auto k3 = complete_graph(3);
    const auto star = greedy_saturate(og(4, {}), k3);
    CHECK(star == og(4, {{1, 2}, {1, 3}, {1, 4}}));
    CHECK(is_saturating(star, k3).ok);
    CHECK(greedy_saturate(star, k3) == star);
    CHECK_THROWS_AS(greedy_saturate(complete_graph(3), k3), std::invalid_argument);

    std::mt19937 rng(79);
    for (int it = 0; it < 20; it++) {
        const int n = std::uniform_int_distribution<int>(3, 6)(rng);
        OrderedGraph host(n, {});
        const auto pattern = crossing_chain(2);
        const auto sat = greedy_saturate(host, pattern);
        CHECK(is_saturating(sat, pattern).ok);
        CHECK(greedy_saturate(sat, pattern) == sat);
    }
}

TEST_CASE("linear host construction") {
    const auto g2 = crossing_chain(2);
    const auto h = linear_host(g2, 12);
    // chosen edge (1,3): a=0, b=1, c=1 -> last vertex joined to all plus consecutive pairs
    for (int i = 1; i < 12; i++) {
        CHECK(h.has_edge(i, i + 1));
        CHECK(h.has_edge(i, 12));
    }
    CHECK(h.edges.size() == 21u);
    CHECK(is_saturating(h, g2).ok);

    CHECK_THROWS_AS(linear_host(g2, 4), std::invalid_argument);
    CHECK_THROWS_AS(linear_host(og(3, {}), 5), std::invalid_argument);

    for (const auto& g : {consecutive_matching(2), consecutive_matching(3),
                          linked_matching(LinkedMatchingSpec({0, 1, 0})),
                          linked_matching(LinkedMatchingSpec({1, 0, 1}))}) {
        const int n = g.n + 6;
        const auto host = linear_host(g, n);
        CHECK(is_saturating(host, g).ok);
        // a+b+c+2 = |V(g)|, so the edge count is at most (a+b+c) n = O(n)
        CHECK(host.edges.size() <= static_cast<size_t>((g.n - 2) * n));
    }
}

TEST_CASE("cyclic linear host construction") {
    const auto l2 = consecutive_matching_cyclic(2);
    const auto h = cyclic_linear_host(l2, 10);
    CHECK(is_saturating(h, l2).ok);
    // minimum hitting interval of cyclic L2 is {2,3}, so J = {1}: a star
    // plus whatever the greedy completion admits
    const auto deg = h.degrees();
    CHECK(deg[1] == 9);

    const auto x1 = enclosed_matching(1);
    CHECK(is_saturating(cyclic_linear_host(x1, 15), x1).ok);

    // degree bound outside J from the construction
    const int k = l2.n, s = 2;
    for (int v = 2; v <= h.n; v++) CHECK(deg[v] <= 2 * k - s - 3);

    CHECK_THROWS_AS(cyclic_linear_host(l2, 4), std::invalid_argument);
}

TEST_CASE("semisaturating host constructions") {
    const auto g101 = linked_matching(LinkedMatchingSpec({1, 0, 1}));
    const auto h = semisat_host(g101, 30);
    // block sizes from the pattern coordinates: 5 and 10
    const auto deg = h.degrees();
    for (int v = 1; v <= 5; v++) CHECK(deg[v] == 14);
    for (int v = 6; v <= 20; v++) CHECK(deg[v] == 0);
    for (int v = 21; v <= 30; v++) CHECK(deg[v] == 14);
    CHECK(h.edges.size() == 105u);  // complete on the 15 block vertices
    CHECK(is_semisaturating(h, g101).ok);

    for (int n : {20, 35, 50}) {
        const auto hn = semisat_host(g101, n);
        CHECK(hn.edges.size() == 105u);  // independent of n
        CHECK(is_semisaturating(hn, g101).ok);
    }

    // single edge: both blocks empty
    const auto he = semisat_host(og(2, {{1, 2}}), 8);
    CHECK(he.edges.empty());
    CHECK(is_semisaturating(he, og(2, {{1, 2}})).ok);

    CHECK_THROWS_AS(semisat_host(complete_graph(3), 30), std::invalid_argument);
    CHECK_THROWS_AS(semisat_host(crossing_chain(2), 30), std::invalid_argument);
    CHECK_THROWS_AS(semisat_host(g101, 10), std::invalid_argument);
}

TEST_CASE("cyclic semisaturating host") {
    const auto l2 = consecutive_matching_cyclic(2);
    const auto h = semisat_host_cyclic(l2, 20);
    CHECK(h.edges.size() == 6u);  // clique on 2k-4 = 4 vertices
    CHECK(is_semisaturating(h, l2).ok);

    for (int n : {10, 30, 50}) CHECK(is_semisaturating(semisat_host_cyclic(l2, n), l2).ok);

    const auto x1 = enclosed_matching(1);
    CHECK(is_semisaturating(semisat_host_cyclic(x1, 25), x1).ok);

    CHECK_THROWS_AS(semisat_host_cyclic(complete_graph_cyclic(3), 20), std::invalid_argument);
    CHECK_THROWS_AS(semisat_host_cyclic(l2, 4), std::invalid_argument);
}

TEST_CASE("verifier reports render as JSON") {
    const auto rep = is_saturating(og(4, {}), consecutive_matching(2));
    const auto text = report_json(rep);
    CHECK(text.find("\"ok\":false") != std::string::npos);
    CHECK(text.find("\"failing_edge\":[1,2]") != std::string::npos);
    CHECK(text.find("\"edge_count\":0") != std::string::npos);
}
