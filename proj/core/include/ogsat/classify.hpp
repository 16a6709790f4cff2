#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ogsat/graph.hpp"

namespace ogsat {

class CertificateStore;

// Edges (u, u+1) whose endpoints both have degree one.
std::vector<Edge> minedges(const OrderedGraph& g);

// Edges strictly covering some other edge.
std::vector<Edge> superedges(const OrderedGraph& g);

// Cyclic edges uv whose two open sides each contain both endpoints of
// some edge.
std::vector<Edge> bisuperedges(const CyclicGraph& g);

// Cyclic edges with one empty side and both endpoints of degree one.
std::vector<Edge> cyclic_minedges(const CyclicGraph& g);

// Minimum number of contiguous intervals partitioning 1..n with no edge
// inside a single interval. Computed by the greedy left-to-right cut;
// optimality is checked against a brute-force oracle in the tests.
int interval_chromatic_number(const OrderedGraph& g);

struct SeparableSplit {
    int cut = 0;  // every edge lies entirely <= cut or entirely > cut
    std::vector<Edge> left, right;
};
std::optional<SeparableSplit> is_separable(const OrderedGraph& g);

struct NestedSplit {
    std::vector<Edge> outer, inner;  // every outer edge strictly covers every inner edge
};
std::optional<NestedSplit> is_nested(const OrderedGraph& g);

enum class SatStatus { Bounded, Linear, Unknown };

struct FiredRule {
    std::string id;        // stable identifier, e.g. "thm:minsup"
    std::string citation;  // one-line statement of the rule
    bool bounded = false;  // true: O(1) rule, false: Theta(n) rule
    friend bool operator==(const FiredRule&, const FiredRule&) = default;
};

// status == Unknown iff rules is empty; a Bounded rule and a Linear rule
// firing on the same graph is a logic error and throws.
struct Verdict {
    SatStatus status = SatStatus::Unknown;
    std::vector<FiredRule> rules;
};

const char* to_string(SatStatus s);

// Saturation verdicts driven by the implemented rules; Unknown when no
// rule applies. An optional certificate store upgrades patterns with a
// verified witness to Bounded.
Verdict verdict_ordered(const OrderedGraph& g, const CertificateStore* certs = nullptr);
Verdict verdict_cyclic(const CyclicGraph& g, const CertificateStore* certs = nullptr);

// Complete semisaturation characterizations; never Unknown.
Verdict ssat_verdict_ordered(const OrderedGraph& g);
Verdict ssat_verdict_cyclic(const CyclicGraph& g);

// {"status": ..., "rules": [{"id", "citation"}]}
std::string verdict_json(const Verdict& v);

// Family recognition by canonical regeneration: the linked-matching
// parameters of g, if g equals a regenerated linked matching.
std::optional<std::vector<int>> recognize_linked_matching(const OrderedGraph& g);

}  // namespace ogsat
