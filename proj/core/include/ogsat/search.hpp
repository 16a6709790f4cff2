#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ogsat/saturate.hpp"

namespace ogsat {

enum class SearchStrategy { Full, XShapeTemplate };

struct SearchBudget {
    int max_vertices = 16;
    int max_edges = 10;  // Full: total edges; XShapeTemplate: extra edges over the base
    std::uint64_t max_nodes = 100'000'000;
    SearchStrategy strategy = SearchStrategy::XShapeTemplate;
};

struct ExactOptions {
    std::uint64_t max_nodes = 100'000'000;
    int threads = 1;
};

// Result of an iterative-deepening exact search. Budget exhaustion is a
// distinct outcome: k and host are only meaningful when found is true.
// Budget accounting is per edge-count level, so results and exhaustion
// are independent of the thread count.
template <typename G>
struct ExactResult {
    bool found = false;
    bool exhausted = false;
    int k = -1;
    G host;
    std::uint64_t nodes = 0;
};

// Smallest k admitting an n-vertex saturating host with k edges, plus the
// first such host in canonical enumeration order. Minimality is certified
// by the failed exhaustive levels below k.
ExactResult<OrderedGraph> exact_sat(const OrderedGraph& g, int n, const ExactOptions& opts = {});
ExactResult<CyclicGraph> exact_sat(const CyclicGraph& g, int n, const ExactOptions& opts = {});

// Same for semisaturating hosts.
ExactResult<OrderedGraph> exact_ssat(const OrderedGraph& g, int n, const ExactOptions& opts = {});
ExactResult<CyclicGraph> exact_ssat(const CyclicGraph& g, int n, const ExactOptions& opts = {});

template <typename G>
struct HostEnumeration {
    bool exhausted = false;
    std::vector<G> hosts;
    std::uint64_t nodes = 0;
};

// Every n-vertex, k-edge saturating host, up to the canonical-enumeration
// representative (mirror-deduplicated for mirror-symmetric ordered
// patterns, rotation-deduplicated for cyclic patterns).
HostEnumeration<OrderedGraph> minimal_saturated_hosts(const OrderedGraph& g, int n, int k,
                                                      const ExactOptions& opts = {});
HostEnumeration<CyclicGraph> minimal_saturated_hosts(const CyclicGraph& g, int n, int k,
                                                     const ExactOptions& opts = {});

template <typename G>
struct WitnessSearchResult {
    std::optional<WitnessCertificate<G>> certificate;
    bool exhausted = false;  // node cap hit before the caps were fully explored
    std::uint64_t nodes = 0;
};

// Searches for a witness certifying bounded saturation and revalidates
// any hit through is_witness. Full strategy: hosts by vertex count, then
// anchor position, then edge count, pruning candidates that contain the
// pattern and candidates where some anchor edge cannot create a copy even
// after all remaining additions. XShapeTemplate strategy: overlays of the
// two end-link derivatives (both orders, overlaps 0..2) with the anchor
// run inserted at every gap, extended by up to max_edges extra edges.
WitnessSearchResult<OrderedGraph> search_witness(const OrderedGraph& g, const SearchBudget& budget,
                                                 int threads = 1);

// Cyclic reading of an ordered certificate: verifies the witness against
// the cyclic closures and returns the cyclic certificate if it holds.
std::optional<CyclicCertificate> cyclic_certificate_from_ordered(const OrderedCertificate& cert);

}  // namespace ogsat
