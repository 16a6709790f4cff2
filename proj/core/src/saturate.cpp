#include "ogsat/saturate.hpp"

#include <algorithm>

#include <json.hpp>

#include "embed_detail.hpp"
#include "ogsat/classify.hpp"

namespace ogsat {

namespace {

std::optional<Embedding> contains(const OrderedGraph& h, const OrderedGraph& p) {
    return contains_ordered(h, p);
}
std::optional<Embedding> contains(const CyclicGraph& h, const CyclicGraph& p) {
    return contains_cyclic(h, p);
}

template <typename G>
VerifierReport saturating_impl(const G& host, const G& pattern) {
    VerifierReport r;
    r.edge_count = static_cast<int>(host.edges.size());
    if (auto emb = contains(host, pattern)) {
        r.embedding = *emb;
        return r;
    }
    G work = host;
    for (int u = 1; u <= host.n; u++) {
        for (int v = u + 1; v <= host.n; v++) {
            if (host.has_edge(u, v)) continue;
            auto edges = work.edges;
            edges.push_back({u, v});
            G plus(host.n, std::move(edges));
            if (!contains(plus, pattern)) {
                r.failing_edge = Edge{u, v};
                return r;
            }
        }
    }
    r.ok = true;
    return r;
}

template <typename G>
VerifierReport semisaturating_impl(const G& host, const G& pattern) {
    VerifierReport r;
    r.edge_count = static_cast<int>(host.edges.size());
    for (int u = 1; u <= host.n; u++) {
        for (int v = u + 1; v <= host.n; v++) {
            if (host.has_edge(u, v)) continue;
            if (!creates_new_copy(host, Edge{u, v}, pattern)) {
                r.failing_edge = Edge{u, v};
                return r;
            }
        }
    }
    r.ok = true;
    return r;
}

}  // namespace

VerifierReport is_saturating(const OrderedGraph& host, const OrderedGraph& pattern) {
    return saturating_impl(host, pattern);
}
VerifierReport is_saturating(const CyclicGraph& host, const CyclicGraph& pattern) {
    return saturating_impl(host, pattern);
}
VerifierReport is_semisaturating(const OrderedGraph& host, const OrderedGraph& pattern) {
    return semisaturating_impl(host, pattern);
}
VerifierReport is_semisaturating(const CyclicGraph& host, const CyclicGraph& pattern) {
    return semisaturating_impl(host, pattern);
}

std::string report_json(const VerifierReport& r) {
    nlohmann::json j;
    j["ok"] = r.ok;
    j["edge_count"] = r.edge_count;
    if (r.failing_edge) j["failing_edge"] = {r.failing_edge->u, r.failing_edge->v};
    if (r.embedding) j["embedding"] = r.embedding->map;
    return j.dump();
}

namespace {

template <typename G>
bool is_matching(const G& g) {
    const auto deg = g.degrees();
    for (int v = 1; v <= g.n; v++)
        if (deg[v] != 1) return false;
    return true;
}

template <typename G>
void check_witness_pre(const G& pattern, bool matching_mode) {
    const auto deg = pattern.degrees();
    for (int v = 1; v <= pattern.n; v++)
        if (deg[v] == 0) throw std::invalid_argument("is_witness: pattern has isolated vertices");
    if (matching_mode && !is_matching(pattern))
        throw std::invalid_argument("is_witness: matching_mode requires a matching pattern");
}

// All additions incident to the run create a copy through the added edge.
template <typename G>
bool run_serves(const G& host, const G& pattern, const std::vector<int>& run) {
    for (int r : run) {
        for (int w = 1; w <= host.n; w++) {
            if (w == r) continue;
            if (std::find(run.begin(), run.end(), w) != run.end() && w < r) continue;  // pair done once
            if (host.has_edge(r, w)) return false;  // run vertex not isolated
            if (!creates_new_copy(host, make_edge(r, w), pattern)) return false;
        }
    }
    return true;
}

}  // namespace

std::optional<OrderedCertificate> is_witness(const OrderedGraph& host, const OrderedGraph& pattern,
                                             bool matching_mode) {
    check_witness_pre(pattern, matching_mode);
    if (host.n < 2) return std::nullopt;
    if (contains_ordered(host, pattern)) return std::nullopt;
    const auto deg = host.degrees();
    const int len = matching_mode ? 1 : 2;
    for (int a = 1; a + len - 1 <= host.n; a++) {
        std::vector<int> run;
        bool isolated = true;
        for (int t = 0; t < len; t++) {
            if (deg[a + t] != 0) isolated = false;
            run.push_back(a + t);
        }
        if (!isolated) continue;
        if (run_serves(host, pattern, run))
            return OrderedCertificate{pattern, host, a, matching_mode};
    }
    return std::nullopt;
}

std::optional<CyclicCertificate> is_witness(const CyclicGraph& host, const CyclicGraph& pattern,
                                            bool matching_mode) {
    check_witness_pre(pattern, matching_mode);
    if (host.n < 2) return std::nullopt;
    if (contains_cyclic(host, pattern)) return std::nullopt;
    const auto deg = host.degrees();
    const int len = matching_mode ? 1 : 2;
    for (int a = 1; a <= host.n; a++) {
        std::vector<int> run;
        bool isolated = true;
        for (int t = 0; t < len; t++) {
            int v = (a - 1 + t) % host.n + 1;
            if (deg[v] != 0) isolated = false;
            run.push_back(v);
        }
        if (run.size() == 2 && run[0] == run[1]) continue;  // n == 1 degenerate
        if (!isolated) continue;
        if (run_serves(host, pattern, run))
            return CyclicCertificate{pattern, host, a, matching_mode};
    }
    return std::nullopt;
}

namespace {

template <typename G>
G blowup_impl(const WitnessCertificate<G>& cert, int n) {
    const G& w = cert.witness;
    if (n < w.n) throw std::invalid_argument("blowup: n smaller than the witness");
    const int delta = n - w.n;
    const int at = cert.isolated_anchor;
    std::vector<Edge> edges;
    edges.reserve(w.edges.size());
    for (const auto& e : w.edges)
        edges.push_back({e.u > at ? e.u + delta : e.u, e.v > at ? e.v + delta : e.v});
    return G(n, std::move(edges));
}

template <typename G>
G greedy_impl(const G& host, const G& pattern) {
    if (contains(host, pattern))
        throw std::invalid_argument("greedy_saturate: host already contains the pattern");
    G work = host;
    for (int u = 1; u <= host.n; u++) {
        for (int v = u + 1; v <= host.n; v++) {
            if (work.has_edge(u, v)) continue;
            auto edges = work.edges;
            edges.push_back({u, v});
            G plus(host.n, std::move(edges));
            if (!contains(plus, pattern)) work = std::move(plus);
        }
    }
    return work;
}

}  // namespace

OrderedGraph blowup(const OrderedCertificate& cert, int n) { return blowup_impl(cert, n); }
CyclicGraph blowup(const CyclicCertificate& cert, int n) { return blowup_impl(cert, n); }

OrderedGraph greedy_saturate(const OrderedGraph& host, const OrderedGraph& pattern) {
    return greedy_impl(host, pattern);
}
CyclicGraph greedy_saturate(const CyclicGraph& host, const CyclicGraph& pattern) {
    return greedy_impl(host, pattern);
}

OrderedGraph linear_host(const OrderedGraph& g, int n) {
    if (g.edges.empty()) throw std::invalid_argument("linear_host: pattern must be non-empty");
    if (n <= g.n) throw std::invalid_argument("linear_host: need n > |V(pattern)|");

    Edge chosen{0, 0};
    bool found = false;
    for (const auto& e : g.edges) {  // lexicographic order, first qualifying wins
        bool covers_other = false;
        for (const auto& f : g.edges)
            if (!(f == e) && e.u <= f.u && f.v <= e.v) {
                covers_other = true;
                break;
            }
        if (!covers_other) {
            chosen = e;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("linear_host: no admissible edge");

    const int a = chosen.u - 1;
    const int b = chosen.v - chosen.u - 1;
    const int c = g.n - chosen.v;

    std::vector<Edge> edges;
    for (int u = 1; u <= n; u++)
        for (int v = u + 1; v <= n; v++)
            if (u <= a || v >= n - c + 1 || v - u <= b) edges.push_back({u, v});
    return OrderedGraph(n, std::move(edges));
}

CyclicGraph cyclic_linear_host(const CyclicGraph& g, int n) {
    if (g.edges.empty()) throw std::invalid_argument("cyclic_linear_host: pattern must be non-empty");
    if (n <= g.n) throw std::invalid_argument("cyclic_linear_host: need n > |V(pattern)|");

    const int k = g.n;
    int s = k;
    for (int len = 1; len <= k && s == k; len++) {
        for (int start = 1; start <= k; start++) {
            auto inside = [&](int v) { return ((v - start) % k + k) % k < len; };
            bool hits_all = true;
            for (const auto& e : g.edges)
                if (!inside(e.u) && !inside(e.v)) {
                    hits_all = false;
                    break;
                }
            if (hits_all) {
                s = len;
                break;
            }
        }
    }

    std::vector<Edge> edges;
    for (int u = 1; u <= n; u++)
        for (int v = u + 1; v <= n; v++)
            if (u <= s - 1 || v <= s - 1) edges.push_back({u, v});
    CyclicGraph base(n, std::move(edges));
    return greedy_saturate(base, g);
}

OrderedGraph semisat_host(const OrderedGraph& g, int n) {
    const auto deg = g.degrees();
    const int k = g.n;

    const auto mins = minedges(g);
    if (mins.empty()) throw std::invalid_argument("semisat_host: pattern has no minedge");
    const int m1 = mins.front().u, m2 = mins.front().v;

    int u2 = 0;
    for (const auto& e : g.edges)
        if (e.u == 1 && deg[e.v] == 1) {
            u2 = e.v;
            break;
        }
    if (u2 == 0) throw std::invalid_argument("semisat_host: no edge from the first vertex to a degree-one vertex");

    int v1 = 0;
    for (const auto& e : g.edges)
        if (e.v == k && deg[e.u] == 1) v1 = std::max(v1, e.u);
    if (v1 == 0) throw std::invalid_argument("semisat_host: no edge from the last vertex to a degree-one vertex");

    const int b1 = std::max(u2 + m1 - 3, v1 - 1);
    const int b2 = std::max(2 * k - v1 - m2 - 1, k - u2);
    if (n < b1 + b2 + 1) throw std::invalid_argument("semisat_host: n too small for the two blocks and a gap");

    auto in_blocks = [&](int v) { return v <= b1 || v > n - b2; };
    std::vector<Edge> edges;
    for (int u = 1; u <= n; u++)
        for (int v = u + 1; v <= n; v++)
            if (in_blocks(u) && in_blocks(v)) edges.push_back({u, v});
    return OrderedGraph(n, std::move(edges));
}

CyclicGraph semisat_host_cyclic(const CyclicGraph& g, int n) {
    if (cyclic_minedges(g).empty()) throw std::invalid_argument("semisat_host_cyclic: pattern has no minedge");
    const int j = 2 * g.n - 4;
    if (n < j + 1) throw std::invalid_argument("semisat_host_cyclic: n too small for the clique and a gap");
    std::vector<Edge> edges;
    for (int u = 1; u <= j; u++)
        for (int v = u + 1; v <= j; v++) edges.push_back({u, v});
    return CyclicGraph(n, std::move(edges));
}

}  // namespace ogsat
