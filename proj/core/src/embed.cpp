#include "ogsat/embed.hpp"

#include <algorithm>

#include "embed_detail.hpp"

namespace ogsat {

namespace detail {

namespace {

struct Searcher {
    const AdjMatrix& host;
    const PatternIndex& pat;
    const std::vector<int>& pins;
    std::vector<int> lb{}, ub{}, phi{};

    bool prepare() {
        const int m = pat.n, n = host.n;
        if (m > n) return false;
        lb.assign(m + 2, 0);
        ub.assign(m + 2, 0);
        phi.assign(m + 1, 0);
        for (int i = 1; i <= m; i++) {
            lb[i] = lb[i - 1] + 1;
            if (pin(i)) {
                if (pin(i) < lb[i]) return false;
                lb[i] = pin(i);
            }
        }
        ub[m + 1] = n + 1;
        for (int i = m; i >= 1; i--) {
            ub[i] = ub[i + 1] - 1;
            if (pin(i)) {
                if (pin(i) > ub[i]) return false;
                ub[i] = pin(i);
            }
        }
        return lb[m] <= n;
    }

    int pin(int i) const { return pins.empty() ? 0 : pins[i]; }

    bool feasible(int i, int c) const {
        if (host.deg[c] < pat.degree[i]) return false;
        for (int j : pat.back[i])
            if (!host.has(phi[j], c)) return false;
        // a later pattern neighbour needs some host neighbour beyond c
        if (pat.has_forward[i] && host.adj[c - 1].find_next(c - 1) == Bits::npos) return false;
        return true;
    }

    bool rec(int i, int lo) {
        if (i > pat.n) return true;
        if (pin(i)) {
            int c = pin(i);
            if (c < lo || c > ub[i]) return false;
            if (!feasible(i, c)) return false;
            phi[i] = c;
            return rec(i + 1, c + 1);
        }
        for (int c = std::max(lo, lb[i]); c <= ub[i]; c++) {
            if (!feasible(i, c)) continue;
            phi[i] = c;
            if (rec(i + 1, c + 1)) return true;
        }
        return false;
    }
};

}  // namespace

std::vector<int> embed_increasing(const AdjMatrix& host, const PatternIndex& pattern,
                                  const std::vector<int>& pins) {
    Searcher s{host, pattern, pins};
    if (!s.prepare() || !s.rec(1, 1)) return {};
    return std::vector<int>(s.phi.begin() + 1, s.phi.end());
}

}  // namespace detail

namespace {

std::vector<Edge> rotate_edges(const std::vector<Edge>& edges, int n, int r) {
    r = ((r % n) + n) % n;
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const auto& e : edges)
        out.push_back(make_edge((e.u - 1 + r) % n + 1, (e.v - 1 + r) % n + 1));
    return out;
}

std::optional<Embedding> embed_cyclic_rotation(const detail::AdjMatrix& host, int pn,
                                               const std::vector<Edge>& pedges, int r,
                                               const std::vector<int>& pins_rotated) {
    detail::PatternIndex pat(pn, rotate_edges(pedges, pn, r));
    auto psi = detail::embed_increasing(host, pat, pins_rotated);
    if (psi.empty() && pn > 0) return std::nullopt;
    // compose back: original vertex v has rotated label ((v-1+r) mod pn)+1
    std::vector<int> map(pn);
    for (int v = 1; v <= pn; v++) map[v - 1] = psi[(v - 1 + r) % pn];
    return Embedding{std::move(map)};
}

}  // namespace

std::optional<Embedding> contains_ordered(const OrderedGraph& host, const OrderedGraph& pattern) {
    detail::AdjMatrix h = detail::AdjMatrix::of(host.n, host.edges);
    detail::PatternIndex pat(pattern.n, pattern.edges);
    auto phi = detail::embed_increasing(h, pat, {});
    if (phi.empty() && pattern.n > 0) return std::nullopt;
    return Embedding{std::move(phi)};
}

std::optional<Embedding> contains_cyclic(const CyclicGraph& host, const CyclicGraph& pattern) {
    detail::AdjMatrix h = detail::AdjMatrix::of(host.n, host.edges);
    for (int r = 0; r < pattern.n; r++) {
        auto e = embed_cyclic_rotation(h, pattern.n, pattern.edges, r, {});
        if (e) return e;
    }
    return std::nullopt;
}

bool creates_new_copy(const OrderedGraph& host, Edge e, const OrderedGraph& pattern) {
    e = make_edge(e.u, e.v);
    if (host.has_edge(e.u, e.v)) throw std::invalid_argument("creates_new_copy: edge already present");
    detail::AdjMatrix h = detail::AdjMatrix::of(host.n, host.edges);
    h.set(e.u, e.v);
    detail::PatternIndex pat(pattern.n, pattern.edges);
    std::vector<int> pins(pattern.n + 1, 0);
    for (const auto& pe : pattern.edges) {
        pins[pe.u] = e.u;
        pins[pe.v] = e.v;
        if (!detail::embed_increasing(h, pat, pins).empty()) return true;
        pins[pe.u] = 0;
        pins[pe.v] = 0;
    }
    return false;
}

bool creates_new_copy(const CyclicGraph& host, Edge e, const CyclicGraph& pattern) {
    e = make_edge(e.u, e.v);
    if (host.has_edge(e.u, e.v)) throw std::invalid_argument("creates_new_copy: edge already present");
    detail::AdjMatrix h = detail::AdjMatrix::of(host.n, host.edges);
    h.set(e.u, e.v);
    const int pn = pattern.n;
    for (int r = 0; r < pn; r++) {
        auto redges = rotate_edges(pattern.edges, pn, r);
        detail::PatternIndex pat(pn, redges);
        std::vector<int> pins(pn + 1, 0);
        for (const auto& pe : redges) {
            pins[pe.u] = e.u;
            pins[pe.v] = e.v;
            if (!detail::embed_increasing(h, pat, pins).empty()) return true;
            pins[pe.u] = 0;
            pins[pe.v] = 0;
        }
    }
    return false;
}

CyclicGraph rotate(const CyclicGraph& g, int r) {
    return CyclicGraph(g.n, rotate_edges(g.edges, g.n, r));
}

}  // namespace ogsat
