#pragma once

#include <optional>
#include <string>

#include "ogsat/embed.hpp"
#include "ogsat/graph.hpp"

namespace ogsat {

// Outcome of a host verification with a concrete counterexample: either
// the embedding showing the host contains the pattern, or the first
// non-edge (in lexicographic order) whose addition fails.
struct VerifierReport {
    bool ok = false;
    std::optional<Edge> failing_edge;
    std::optional<Embedding> embedding;
    int edge_count = 0;
};

// {"ok": ..., "failing_edge"?, "embedding"?, "edge_count": ...}
std::string report_json(const VerifierReport& r);

// host avoids pattern and every edge addition creates a copy.
VerifierReport is_saturating(const OrderedGraph& host, const OrderedGraph& pattern);
VerifierReport is_saturating(const CyclicGraph& host, const CyclicGraph& pattern);

// every edge addition creates a new copy through the added edge; the host
// may already contain the pattern.
VerifierReport is_semisaturating(const OrderedGraph& host, const OrderedGraph& pattern);
VerifierReport is_semisaturating(const CyclicGraph& host, const CyclicGraph& pattern);

// A verified certificate of bounded saturation: the witness avoids the
// pattern, carries the required isolated run (two consecutive isolated
// vertices, or one when matching_mode and the pattern is a matching), and
// every edge incident to the run creates a copy when added.
template <typename G>
struct WitnessCertificate {
    G pattern;
    G witness;
    int isolated_anchor = 0;  // leftmost vertex of the run
    bool matching_mode = false;
};

using OrderedCertificate = WitnessCertificate<OrderedGraph>;
using CyclicCertificate = WitnessCertificate<CyclicGraph>;

// Checks the witness conditions at every candidate run (leftmost wins).
// Pattern must have no isolated vertices; matching_mode requires the
// pattern to be a perfect matching.
std::optional<OrderedCertificate> is_witness(const OrderedGraph& host, const OrderedGraph& pattern,
                                             bool matching_mode);
std::optional<CyclicCertificate> is_witness(const CyclicGraph& host, const CyclicGraph& pattern,
                                            bool matching_mode);

// Witness with its isolated run grown into an isolated interval so the
// result has exactly n vertices (n >= witness size). Adds no edges.
OrderedGraph blowup(const OrderedCertificate& cert, int n);
CyclicGraph blowup(const CyclicCertificate& cert, int n);

// Maximal avoiding supergraph: candidate non-edges scanned once in
// lexicographic order, keeping those that do not create a copy. The host
// must avoid the pattern; the result is saturating and the map is
// idempotent.
OrderedGraph greedy_saturate(const OrderedGraph& host, const OrderedGraph& pattern);
CyclicGraph greedy_saturate(const CyclicGraph& host, const CyclicGraph& pattern);

// Linear-size saturating host: pick an edge uv of g covering no other
// edge (smallest such), write a, b, c for the vertex counts before u,
// between u and v, after v; join the first a and last c host vertices to
// everything and add all edges spanning at most b-1 vertices.
OrderedGraph linear_host(const OrderedGraph& g, int n);

// Cyclic linear-size host: connect an interval of s-1 vertices to every
// vertex, where s is the minimum length of a vertex interval hitting
// every edge of g, then complete greedily.
CyclicGraph cyclic_linear_host(const CyclicGraph& g, int n);

// Bounded semisaturating host for patterns passing the ordered
// characterization: cliques on a prefix block and a suffix block joined
// completely, sizes read off the pattern.
OrderedGraph semisat_host(const OrderedGraph& g, int n);

// Bounded cyclic semisaturating host: a clique on 2k-4 consecutive
// vertices; requires a cyclic minedge.
CyclicGraph semisat_host_cyclic(const CyclicGraph& g, int n);

}  // namespace ogsat
