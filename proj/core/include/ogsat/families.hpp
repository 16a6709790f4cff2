#pragma once

#include <vector>

#include "ogsat/graph.hpp"

namespace ogsat {

// Parameters of a linked matching: k link edges, m[i] short isolated
// edges placed inside link edge i+1.
struct LinkedMatchingSpec {
    std::vector<int> m;

    explicit LinkedMatchingSpec(std::vector<int> m_);
    int links() const { return static_cast<int>(m.size()); }
};

// Matching of k consecutive disjoint short edges: n = 2k,
// edges (2i-1, 2i).
OrderedGraph consecutive_matching(int k);
CyclicGraph consecutive_matching_cyclic(int k);

// Crossing chain of k edges: n = 2k, edges (1,3), (2i, 2i+3), (2k-2, 2k).
// k = 1 degenerates to the single edge on two vertices.
OrderedGraph crossing_chain(int k);

// Crossing chain with m[i] short isolated edges inserted inside link
// edge i, outside all other links. When several gaps qualify the block
// goes in the leftmost admissible gap (all choices give the same graph
// up to order isomorphism).
OrderedGraph linked_matching(const LinkedMatchingSpec& spec);

// Cyclic matching on 2k+4 vertices: two crossing long edges (1, n-1) and
// (2, n) enclosing a consecutive matching on 3..n-2. k = 0 is allowed and
// gives just the crossing pair.
CyclicGraph enclosed_matching(int k);

OrderedGraph complete_graph(int k);
CyclicGraph complete_graph_cyclic(int k);

// Overlay on 2n-6 vertices: G minus its first-vertex isolated edge placed
// on the first n-2 vertices, G minus its last-vertex isolated edge placed
// on the last n-2 vertices (the copies share two middle vertices).
// Requires the first and last vertex of g to be incident to an isolated
// edge (an edge forming its own connected component).
OrderedGraph xshape(const OrderedGraph& g);

// g minus the endpoints of the isolated edge at its first (resp. last)
// vertex, relabelled to 1..n-2. Same precondition as xshape.
OrderedGraph drop_first_link(const OrderedGraph& g);
OrderedGraph drop_last_link(const OrderedGraph& g);

// Member of the family obtained by placing g1 on {1..n1-1} u {i}, a on
// {n1..n1+n0-1} and g2 on {j} u {n1+n0..n1+n0+n2-2}. Requires
// n1 <= i, j <= n1+n0-1.
OrderedGraph yx_member(const OrderedGraph& g1, const OrderedGraph& a, const OrderedGraph& g2, int i, int j);

// All n0*n0 members, ordered by (i, j).
std::vector<OrderedGraph> yx_members(const OrderedGraph& g1, const OrderedGraph& a, const OrderedGraph& g2);

}  // namespace ogsat
