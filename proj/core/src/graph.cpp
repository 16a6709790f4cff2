#include "ogsat/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ogsat {

namespace {

std::vector<Edge> canonicalize(int n, std::vector<Edge> edges, const char* kind) {
    for (auto& e : edges) {
        if (e.u == e.v)
            throw std::invalid_argument(std::string(kind) + ": loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 1 || e.v > n)
            throw std::invalid_argument(std::string(kind) + ": edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") out of range 1.." + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw std::invalid_argument(std::string(kind) + ": duplicate edge (" + std::to_string(dup->u) +
                                    "," + std::to_string(dup->v) + ")");
    return edges;
}

std::vector<int> degrees_of(int n, const std::vector<Edge>& edges) {
    std::vector<int> deg(n + 1, 0);
    for (const auto& e : edges) {
        deg[e.u]++;
        deg[e.v]++;
    }
    return deg;
}

bool has_edge_in(const std::vector<Edge>& edges, int a, int b) {
    const Edge e = make_edge(a, b);
    return std::binary_search(edges.begin(), edges.end(), e);
}

std::string serialize_impl(const char* header, int n, const std::vector<Edge>& edges) {
    std::ostringstream out;
    out << header << " n=" << n << "\n";
    for (const auto& e : edges) out << e.u << " " << e.v << "\n";
    return out.str();
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

OrderedGraph::OrderedGraph(int n_, std::vector<Edge> e) : n(n_) {
    if (n < 1) throw std::invalid_argument("ordered graph: vertex count must be positive");
    edges = canonicalize(n, std::move(e), "ordered graph");
}

bool OrderedGraph::has_edge(int a, int b) const { return has_edge_in(edges, a, b); }

std::vector<int> OrderedGraph::degrees() const { return degrees_of(n, edges); }

CyclicGraph::CyclicGraph(int n_, std::vector<Edge> e) : n(n_) {
    if (n < 1) throw std::invalid_argument("cyclic graph: vertex count must be positive");
    edges = canonicalize(n, std::move(e), "cyclic graph");
}

bool CyclicGraph::has_edge(int a, int b) const { return has_edge_in(edges, a, b); }

std::vector<int> CyclicGraph::degrees() const { return degrees_of(n, edges); }

ParsedGraph parse_graph(std::string_view text) {
    int lineno = 0;
    bool have_header = false;
    bool cyclic = false;
    int n = 0;
    std::vector<Edge> edges;

    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        lineno++;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string_view::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);

        if (!have_header) {
            std::string_view mode;
            if (line.starts_with("ordered"))
                mode = "ordered";
            else if (line.starts_with("cyclic"))
                mode = "cyclic";
            else
                throw ParseError(lineno, "expected header 'ordered n=<N>' or 'cyclic n=<N>'");
            cyclic = mode == "cyclic";
            std::string_view rest = line.substr(mode.size());
            size_t nb = rest.find_first_not_of(" \t");
            if (nb == std::string_view::npos || !rest.substr(nb).starts_with("n="))
                throw ParseError(lineno, "malformed header: missing n=<N>");
            std::string_view num = rest.substr(nb + 2);
            auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
            if (ec != std::errc{} || p != num.data() + num.size() || n < 1)
                throw ParseError(lineno, "malformed header: bad vertex count");
            have_header = true;
            continue;
        }

        int u = 0, v = 0;
        const char* first = line.data();
        const char* last = line.data() + line.size();
        auto [p1, ec1] = std::from_chars(first, last, u);
        if (ec1 != std::errc{}) throw ParseError(lineno, "expected edge 'u v'");
        while (p1 != last && (*p1 == ' ' || *p1 == '\t')) p1++;
        auto [p2, ec2] = std::from_chars(p1, last, v);
        if (ec2 != std::errc{} || p2 != last) throw ParseError(lineno, "expected edge 'u v'");
        if (u == v) throw ParseError(lineno, "loop (" + std::to_string(u) + " " + std::to_string(v) + ")");
        if (u < 1 || v < 1 || u > n || v > n)
            throw ParseError(lineno, "vertex out of range 1.." + std::to_string(n));
        Edge edge = make_edge(u, v);
        if (std::find(edges.begin(), edges.end(), edge) != edges.end())
            throw ParseError(lineno, "duplicate edge (" + std::to_string(edge.u) + " " + std::to_string(edge.v) + ")");
        edges.push_back(edge);
    }
    if (!have_header) throw ParseError(1, "empty input, expected header");

    if (cyclic) return CyclicGraph(n, std::move(edges));
    return OrderedGraph(n, std::move(edges));
}

std::string serialize(const OrderedGraph& g) { return serialize_impl("ordered", g.n, g.edges); }

std::string serialize(const CyclicGraph& g) { return serialize_impl("cyclic", g.n, g.edges); }

OrderedGraph mirror(const OrderedGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.edges.size());
    for (const auto& e : g.edges) edges.push_back(make_edge(g.n + 1 - e.v, g.n + 1 - e.u));
    return OrderedGraph(g.n, std::move(edges));
}

CyclicGraph cyclic_closure(const OrderedGraph& g) { return CyclicGraph(g.n, g.edges); }

OrderedGraph as_ordered(const CyclicGraph& g) { return OrderedGraph(g.n, g.edges); }

}  // namespace ogsat
