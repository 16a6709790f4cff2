#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ogsat/graph.hpp"

namespace ogsat {

// Order-preserving injective map from pattern vertices to host vertices,
// carrying every pattern edge to a host edge. map[i-1] is the host image
// of pattern vertex i; isolated pattern vertices are mapped too.
struct Embedding {
    std::vector<int> map;

    int image_of(int pattern_vertex) const { return map[pattern_vertex - 1]; }
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

// Strictly increasing embedding of pattern into host, or nullopt. Returns
// the lexicographically smallest embedding (by host-vertex sequence).
std::optional<Embedding> contains_ordered(const OrderedGraph& host, const OrderedGraph& pattern);

// Orientation-preserving embedding: some rotation of the pattern's vertex
// sequence maps to an increasing sequence of host vertices. Deterministic:
// smallest embedding over rotations tried in increasing order.
std::optional<Embedding> contains_cyclic(const CyclicGraph& host, const CyclicGraph& pattern);

// True iff host+e contains a copy of the pattern whose embedding uses e
// as the image of some pattern edge. Throws if e is already present.
bool creates_new_copy(const OrderedGraph& host, Edge e, const OrderedGraph& pattern);
bool creates_new_copy(const CyclicGraph& host, Edge e, const CyclicGraph& pattern);

// Vertex v -> ((v-1+r) mod n)+1 applied to all edges; r may be negative.
CyclicGraph rotate(const CyclicGraph& g, int r);

}  // namespace ogsat
