#pragma once

#include <boost/dynamic_bitset.hpp>
#include <vector>

#include "ogsat/graph.hpp"

namespace ogsat::detail {

using Bits = boost::dynamic_bitset<>;

// Mutable adjacency used by the containment core and the host builders.
struct AdjMatrix {
    int n = 0;
    std::vector<Bits> adj;  // adj[u-1] bit v-1
    std::vector<int> deg;

    explicit AdjMatrix(int n_) : n(n_), adj(n_, Bits(n_)), deg(n_ + 1, 0) {}

    static AdjMatrix of(int n, const std::vector<Edge>& edges) {
        AdjMatrix m(n);
        for (const auto& e : edges) m.set(e.u, e.v);
        return m;
    }

    void set(int u, int v) {
        adj[u - 1].set(v - 1);
        adj[v - 1].set(u - 1);
        deg[u]++;
        deg[v]++;
    }
    void clear(int u, int v) {
        adj[u - 1].reset(v - 1);
        adj[v - 1].reset(u - 1);
        deg[u]--;
        deg[v]--;
    }
    bool has(int u, int v) const { return adj[u - 1].test(v - 1); }

    std::vector<Edge> edge_list() const {
        std::vector<Edge> out;
        for (int u = 1; u <= n; u++)
            for (auto b = adj[u - 1].find_next(u - 1); b != Bits::npos; b = adj[u - 1].find_next(b))
                out.push_back({u, static_cast<int>(b) + 1});
        return out;
    }
};

// Precomputed pattern structure for the left-to-right backtracking.
struct PatternIndex {
    int n = 0;
    std::vector<std::vector<int>> back;  // back[i]: pattern neighbours j < i
    std::vector<bool> has_forward;       // some pattern neighbour j > i
    std::vector<int> degree;

    PatternIndex(int n_, const std::vector<Edge>& edges)
        : n(n_), back(n_ + 1), has_forward(n_ + 1, false), degree(n_ + 1, 0) {
        for (const auto& e : edges) {
            back[e.v].push_back(e.u);
            has_forward[e.u] = true;
            degree[e.u]++;
            degree[e.v]++;
        }
    }
};

// Lexicographically smallest strictly increasing map of pattern vertices
// onto host vertices carrying pattern edges to host edges and honouring
// pins (pins[i] = forced image of pattern vertex i, 0 = free). Empty
// result means no embedding. pins may be empty (no constraints).
std::vector<int> embed_increasing(const AdjMatrix& host, const PatternIndex& pattern,
                                  const std::vector<int>& pins);

}  // namespace ogsat::detail
