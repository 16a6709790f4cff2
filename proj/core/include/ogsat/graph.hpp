#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ogsat {

// Vertices are 1..n. An edge is stored canonically with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

// Simple graph on the linearly ordered vertex set 1..n. The edge list is
// kept sorted lexicographically, without loops or duplicates.
struct OrderedGraph {
    int n = 1;
    std::vector<Edge> edges;

    OrderedGraph() = default;
    OrderedGraph(int n, std::vector<Edge> e);

    bool has_edge(int a, int b) const;
    std::vector<int> degrees() const;  // 1-based, degrees()[0] unused

    friend auto operator<=>(const OrderedGraph&, const OrderedGraph&) = default;
};

// Simple graph on the cyclically ordered vertex set 1..n (1 follows n).
// Stored exactly like OrderedGraph; the cyclic semantics live in the
// operations (containment, intervals, rotation).
struct CyclicGraph {
    int n = 1;
    std::vector<Edge> edges;

    CyclicGraph() = default;
    CyclicGraph(int n, std::vector<Edge> e);

    bool has_edge(int a, int b) const;
    std::vector<int> degrees() const;

    friend auto operator<=>(const CyclicGraph&, const CyclicGraph&) = default;
};

using ParsedGraph = std::variant<OrderedGraph, CyclicGraph>;

// .og format: first line "ordered n=<N>" or "cyclic n=<N>", then one
// "u v" pair per non-empty line. '#' starts a comment. Edge order in
// files is irrelevant on input and sorted lexicographically on output.
ParsedGraph parse_graph(std::string_view text);

std::string serialize(const OrderedGraph& g);
std::string serialize(const CyclicGraph& g);

// Reflection i -> n+1-i.
OrderedGraph mirror(const OrderedGraph& g);

// Same vertices and edges, read cyclically / linearly.
CyclicGraph cyclic_closure(const OrderedGraph& g);
OrderedGraph as_ordered(const CyclicGraph& g);

}  // namespace ogsat
