#include "ogsat/families.hpp"

#include <algorithm>
#include <numeric>

namespace ogsat {

namespace {

std::vector<Edge> consecutive_edges(int k) {
    std::vector<Edge> edges;
    edges.reserve(k);
    for (int i = 1; i <= k; i++) edges.push_back({2 * i - 1, 2 * i});
    return edges;
}

std::vector<Edge> complete_edges(int k) {
    std::vector<Edge> edges;
    for (int u = 1; u <= k; u++)
        for (int v = u + 1; v <= k; v++) edges.push_back({u, v});
    return edges;
}

// Inserting between gap.u and gap.u+1 lands strictly inside (a,b) iff
// a <= gap and gap+1 <= b, strictly outside iff gap+1 <= a or gap >= b.
bool gap_inside(int gap, const Edge& e) { return e.u <= gap && gap + 1 <= e.v; }

}  // namespace

LinkedMatchingSpec::LinkedMatchingSpec(std::vector<int> m_) : m(std::move(m_)) {
    if (m.empty()) throw std::invalid_argument("linked matching: need at least one link");
    for (int x : m)
        if (x < 0) throw std::invalid_argument("linked matching: counts must be non-negative");
}

OrderedGraph consecutive_matching(int k) {
    if (k < 1) throw std::invalid_argument("consecutive matching: k must be >= 1");
    return OrderedGraph(2 * k, consecutive_edges(k));
}

CyclicGraph consecutive_matching_cyclic(int k) {
    if (k < 1) throw std::invalid_argument("consecutive matching: k must be >= 1");
    return CyclicGraph(2 * k, consecutive_edges(k));
}

OrderedGraph crossing_chain(int k) {
    if (k < 1) throw std::invalid_argument("crossing chain: k must be >= 1");
    if (k == 1) return OrderedGraph(2, {{1, 2}});
    std::vector<Edge> edges;
    edges.push_back({1, 3});
    for (int i = 1; i <= k - 2; i++) edges.push_back({2 * i, 2 * i + 3});
    edges.push_back({2 * k - 2, 2 * k});
    return OrderedGraph(2 * k, std::move(edges));
}

OrderedGraph linked_matching(const LinkedMatchingSpec& spec) {
    const int k = spec.links();
    const OrderedGraph base = crossing_chain(k);

    // Leftmost gap inside link i and outside all other links.
    std::vector<int> gap_after(k, -1);
    for (int i = 0; i < k; i++) {
        for (int gap = base.edges[i].u; gap < base.edges[i].v; gap++) {
            bool ok = true;
            for (int j = 0; j < k && ok; j++)
                if (j != i && gap_inside(gap, base.edges[j])) ok = false;
            if (ok) {
                gap_after[i] = gap;
                break;
            }
        }
        if (gap_after[i] < 0) throw std::logic_error("linked matching: no admissible gap");
    }

    // New label of an original vertex: itself plus all blocks inserted
    // at gaps left of it.
    auto shift = [&](int v) {
        int s = v;
        for (int i = 0; i < k; i++)
            if (gap_after[i] < v) s += 2 * spec.m[i];
        return s;
    };

    std::vector<Edge> edges;
    for (const auto& e : base.edges) edges.push_back({shift(e.u), shift(e.v)});
    for (int i = 0; i < k; i++) {
        int start = shift(gap_after[i]);
        for (int t = 1; t <= spec.m[i]; t++) edges.push_back({start + 2 * t - 1, start + 2 * t});
    }
    int total = 2 * k + 2 * std::accumulate(spec.m.begin(), spec.m.end(), 0);
    return OrderedGraph(total, std::move(edges));
}

CyclicGraph enclosed_matching(int k) {
    if (k < 0) throw std::invalid_argument("enclosed matching: k must be >= 0");
    const int n = 2 * k + 4;
    std::vector<Edge> edges = {{1, n - 1}, {2, n}};
    for (int i = 1; i <= k; i++) edges.push_back({2 * i + 1, 2 * i + 2});
    return CyclicGraph(n, std::move(edges));
}

OrderedGraph complete_graph(int k) {
    if (k < 1) throw std::invalid_argument("complete graph: k must be >= 1");
    return OrderedGraph(k, complete_edges(k));
}

CyclicGraph complete_graph_cyclic(int k) {
    if (k < 1) throw std::invalid_argument("complete graph: k must be >= 1");
    return CyclicGraph(k, complete_edges(k));
}

namespace {

// Isolated edge incident to vertex v, or -1.
int isolated_edge_at(const OrderedGraph& g, int v) {
    const auto deg = g.degrees();
    for (size_t i = 0; i < g.edges.size(); i++) {
        const Edge& e = g.edges[i];
        if ((e.u == v || e.v == v) && deg[e.u] == 1 && deg[e.v] == 1) return static_cast<int>(i);
    }
    return -1;
}

OrderedGraph delete_edge_vertices(const OrderedGraph& g, const Edge& e) {
    std::vector<int> relabel(g.n + 1, 0);
    int next = 0;
    for (int v = 1; v <= g.n; v++)
        if (v != e.u && v != e.v) relabel[v] = ++next;
    std::vector<Edge> edges;
    for (const auto& f : g.edges) {
        if (f == e) continue;
        if (f.u == e.u || f.u == e.v || f.v == e.u || f.v == e.v)
            throw std::logic_error("delete_edge_vertices: edge not isolated");
        edges.push_back({relabel[f.u], relabel[f.v]});
    }
    return OrderedGraph(g.n - 2, std::move(edges));
}

}  // namespace

OrderedGraph drop_first_link(const OrderedGraph& g) {
    int idx = isolated_edge_at(g, 1);
    if (idx < 0) throw std::invalid_argument("xshape: first vertex has no isolated edge");
    return delete_edge_vertices(g, g.edges[idx]);
}

OrderedGraph drop_last_link(const OrderedGraph& g) {
    int idx = isolated_edge_at(g, g.n);
    if (idx < 0) throw std::invalid_argument("xshape: last vertex has no isolated edge");
    return delete_edge_vertices(g, g.edges[idx]);
}

OrderedGraph xshape(const OrderedGraph& g) {
    if (g.n < 4) throw std::invalid_argument("xshape: graph too small");
    const OrderedGraph left = drop_first_link(g);
    const OrderedGraph right = drop_last_link(g);
    const int n = 2 * g.n - 6;
    const int offset = n - right.n;
    std::vector<Edge> edges = left.edges;
    for (const auto& e : right.edges) edges.push_back({e.u + offset, e.v + offset});
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return OrderedGraph(n, std::move(edges));
}

OrderedGraph yx_member(const OrderedGraph& g1, const OrderedGraph& a, const OrderedGraph& g2, int i, int j) {
    const int n1 = g1.n, n0 = a.n, n2 = g2.n;
    if (i < n1 || i > n1 + n0 - 1 || j < n1 || j > n1 + n0 - 1)
        throw std::invalid_argument("yx member: i and j must lie in [n1, n1+n0-1]");
    const int total = n1 + n0 + n2 - 2;

    std::vector<Edge> edges;
    auto map1 = [&](int v) { return v < n1 ? v : i; };
    for (const auto& e : g1.edges) edges.push_back(make_edge(map1(e.u), map1(e.v)));
    for (const auto& e : a.edges) edges.push_back({e.u + n1 - 1, e.v + n1 - 1});
    auto map2 = [&](int v) { return v == 1 ? j : v + n1 + n0 - 2; };
    for (const auto& e : g2.edges) edges.push_back(make_edge(map2(e.u), map2(e.v)));

    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return OrderedGraph(total, std::move(edges));
}

std::vector<OrderedGraph> yx_members(const OrderedGraph& g1, const OrderedGraph& a, const OrderedGraph& g2) {
    std::vector<OrderedGraph> out;
    for (int i = g1.n; i <= g1.n + a.n - 1; i++)
        for (int j = g1.n; j <= g1.n + a.n - 1; j++) out.push_back(yx_member(g1, a, g2, i, j));
    return out;
}

}  // namespace ogsat
