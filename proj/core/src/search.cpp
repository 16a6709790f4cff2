#include "ogsat/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>

#include "embed_detail.hpp"
#include "ogsat/families.hpp"

namespace ogsat {

namespace {

using detail::AdjMatrix;
using detail::PatternIndex;

constexpr std::uint64_t kNodeInf = ~std::uint64_t{0};

std::uint64_t binom_clamped(int m, int k) {
    if (k < 0 || k > m) return 0;
    k = std::min(k, m - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; i++) {
        r = r * static_cast<unsigned>(m - k + i) / static_cast<unsigned>(i);
        if (r > (static_cast<unsigned __int128>(1) << 62)) return kNodeInf;
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (int u = 1; u <= n; u++)
        for (int v = u + 1; v <= n; v++) pairs.push_back({u, v});
    return pairs;
}

// Pattern plus its rotations (cyclic case), shared read-only by workers.
struct PatternPack {
    int pn = 0;
    std::vector<std::vector<Edge>> rot_edges;
    std::vector<PatternIndex> rot_idx;

    static PatternPack of(const OrderedGraph& g) {
        PatternPack p;
        p.pn = g.n;
        p.rot_edges.push_back(g.edges);
        p.rot_idx.emplace_back(g.n, g.edges);
        return p;
    }
    static PatternPack of(const CyclicGraph& g) {
        PatternPack p;
        p.pn = g.n;
        for (int r = 0; r < g.n; r++) {
            std::vector<Edge> re;
            re.reserve(g.edges.size());
            for (const auto& e : g.edges)
                re.push_back(make_edge((e.u - 1 + r) % g.n + 1, (e.v - 1 + r) % g.n + 1));
            std::sort(re.begin(), re.end());
            p.rot_edges.push_back(re);
            p.rot_idx.emplace_back(g.n, p.rot_edges.back());
        }
        return p;
    }

    bool contained_in(const AdjMatrix& host) const {
        for (const auto& idx : rot_idx)
            if (!detail::embed_increasing(host, idx, {}).empty()) return true;
        return false;
    }

    // meaningful as "e creates a copy" only when host avoids the pattern
    bool addition_creates(AdjMatrix& host, Edge e) const {
        host.set(e.u, e.v);
        const bool ok = contained_in(host);
        host.clear(e.u, e.v);
        return ok;
    }

    // copy through e, regardless of whether host already contains the pattern
    bool addition_creates_through(AdjMatrix& host, Edge e) const {
        host.set(e.u, e.v);
        bool ok = false;
        std::vector<int> pins(pn + 1, 0);
        for (size_t r = 0; r < rot_idx.size() && !ok; r++) {
            for (const auto& pe : rot_edges[r]) {
                pins[pe.u] = e.u;
                pins[pe.v] = e.v;
                ok = !detail::embed_increasing(host, rot_idx[r], pins).empty();
                pins[pe.u] = 0;
                pins[pe.v] = 0;
                if (ok) break;
            }
        }
        host.clear(e.u, e.v);
        return ok;
    }
};

bool saturating_fast(AdjMatrix& host, const PatternPack& pat) {
    if (pat.contained_in(host)) return false;
    for (int u = 1; u <= host.n; u++)
        for (int v = u + 1; v <= host.n; v++) {
            if (host.has(u, v)) continue;
            if (!pat.addition_creates(host, {u, v})) return false;
        }
    return true;
}

bool semisaturating_fast(AdjMatrix& host, const PatternPack& pat) {
    for (int u = 1; u <= host.n; u++)
        for (int v = u + 1; v <= host.n; v++) {
            if (host.has(u, v)) continue;
            if (!pat.addition_creates_through(host, {u, v})) return false;
        }
    return true;
}

// Canonical-representative filters: the lexicographically first saturating
// host is always canonical, so skipping non-canonical candidates does not
// change results, only the amount of work.
std::function<bool(const std::vector<Edge>&)> canonical_filter(const OrderedGraph& g, int n) {
    const bool active = mirror(g) == g;
    return [active, n](const std::vector<Edge>& es) {
        if (!active) return true;
        std::vector<Edge> m;
        m.reserve(es.size());
        for (const auto& e : es) m.push_back({n + 1 - e.v, n + 1 - e.u});
        std::sort(m.begin(), m.end());
        return !std::lexicographical_compare(m.begin(), m.end(), es.begin(), es.end());
    };
}

std::function<bool(const std::vector<Edge>&)> canonical_filter(const CyclicGraph&, int n) {
    return [n](const std::vector<Edge>& es) {
        std::vector<Edge> m;
        for (int r = 1; r < n; r++) {
            m.clear();
            for (const auto& e : es) m.push_back(make_edge((e.u - 1 + r) % n + 1, (e.v - 1 + r) % n + 1));
            std::sort(m.begin(), m.end());
            if (std::lexicographical_compare(m.begin(), m.end(), es.begin(), es.end())) return false;
        }
        return true;
    };
}

// Scans the k-subsets of pairs in lexicographic order. First-hit mode
// returns the first accepted edge set; collect mode gathers all of them.
// Parallel chunks are indexed by the first chosen pair, so the result is
// independent of the thread count.
std::optional<std::vector<Edge>> scan_level(int n, const std::vector<Edge>& pairs, int k,
                                            const std::function<bool(AdjMatrix&)>& pred,
                                            const std::function<bool(const std::vector<Edge>&)>& canon,
                                            int threads,
                                            std::vector<std::vector<Edge>>* collect = nullptr) {
    const int M = static_cast<int>(pairs.size());
    if (k > M) return std::nullopt;

    if (k == 0) {
        AdjMatrix adj(n);
        std::vector<Edge> empty;
        if (canon(empty) && pred(adj)) {
            if (collect) collect->push_back(empty);
            return empty;
        }
        return std::nullopt;
    }

    const int chunk_count = M - k + 1;
    std::atomic<int> next_chunk{0};
    std::atomic<int> best_chunk{INT32_MAX};
    std::vector<std::optional<std::vector<Edge>>> hit(chunk_count);
    std::vector<std::vector<std::vector<Edge>>> per_chunk(collect ? chunk_count : 0);

    auto worker = [&]() {
        AdjMatrix adj(n);
        std::vector<int> c(k);
        std::vector<Edge> es(k);
        while (true) {
            const int f = next_chunk.fetch_add(1);
            if (f >= chunk_count) break;
            if (!collect && f > best_chunk.load(std::memory_order_relaxed)) continue;

            for (int i = 0; i < k; i++) c[i] = f + i;
            bool done = false;
            while (!done) {
                for (int i = 0; i < k; i++) es[i] = pairs[c[i]];
                if (canon(es)) {
                    for (const auto& e : es) adj.set(e.u, e.v);
                    const bool ok = pred(adj);
                    for (const auto& e : es) adj.clear(e.u, e.v);
                    if (ok) {
                        if (collect) {
                            per_chunk[f].push_back(es);
                        } else {
                            hit[f] = es;
                            int cur = best_chunk.load();
                            while (f < cur && !best_chunk.compare_exchange_weak(cur, f)) {
                            }
                            break;
                        }
                    }
                }
                // advance odometer, keeping c[0] == f
                int i = k - 1;
                while (i >= 1 && c[i] == M - k + i) i--;
                if (i == 0) {
                    done = true;
                } else {
                    c[i]++;
                    for (int j = i + 1; j < k; j++) c[j] = c[j - 1] + 1;
                }
            }
        }
    };

    const int nt = std::max(1, threads);
    if (nt == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nt);
        for (int t = 0; t < nt; t++) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (collect) {
        for (auto& chunk : per_chunk)
            for (auto& es : chunk) collect->push_back(std::move(es));
        return collect->empty() ? std::nullopt : std::make_optional(collect->front());
    }
    for (int f = 0; f < chunk_count; f++)
        if (hit[f]) return hit[f];
    return std::nullopt;
}

template <typename G>
ExactResult<G> exact_search(const G& g, int n, bool semisat, const ExactOptions& opts) {
    if (g.edges.empty()) throw std::invalid_argument("exact search: forbidden graph must be non-empty");
    const PatternPack pat = PatternPack::of(g);
    const auto pairs = all_pairs(n);
    const int M = static_cast<int>(pairs.size());
    const auto canon = canonical_filter(g, n);

    std::function<bool(AdjMatrix&)> pred;
    if (semisat)
        pred = [&pat](AdjMatrix& a) { return semisaturating_fast(a, pat); };
    else
        pred = [&pat](AdjMatrix& a) { return saturating_fast(a, pat); };

    ExactResult<G> res;
    for (int k = 0; k <= M; k++) {
        const std::uint64_t level = binom_clamped(M, k);
        if (level == kNodeInf || res.nodes + level > opts.max_nodes) {
            res.exhausted = true;
            return res;
        }
        auto hit = scan_level(n, pairs, k, pred, canon, opts.threads);
        res.nodes += level;
        if (hit) {
            res.found = true;
            res.k = k;
            res.host = G(n, std::move(*hit));
            return res;
        }
    }
    return res;  // unreachable for valid inputs: the complete graph terminates the loop
}

}  // namespace

ExactResult<OrderedGraph> exact_sat(const OrderedGraph& g, int n, const ExactOptions& opts) {
    return exact_search(g, n, false, opts);
}
ExactResult<CyclicGraph> exact_sat(const CyclicGraph& g, int n, const ExactOptions& opts) {
    return exact_search(g, n, false, opts);
}
ExactResult<OrderedGraph> exact_ssat(const OrderedGraph& g, int n, const ExactOptions& opts) {
    return exact_search(g, n, true, opts);
}
ExactResult<CyclicGraph> exact_ssat(const CyclicGraph& g, int n, const ExactOptions& opts) {
    return exact_search(g, n, true, opts);
}

namespace {

template <typename G>
HostEnumeration<G> enumerate_hosts(const G& g, int n, int k, const ExactOptions& opts) {
    if (g.edges.empty()) throw std::invalid_argument("host enumeration: forbidden graph must be non-empty");
    const PatternPack pat = PatternPack::of(g);
    const auto pairs = all_pairs(n);
    const auto canon = canonical_filter(g, n);
    std::function<bool(AdjMatrix&)> pred = [&pat](AdjMatrix& a) { return saturating_fast(a, pat); };

    HostEnumeration<G> out;
    const std::uint64_t level = binom_clamped(static_cast<int>(pairs.size()), k);
    if (level == kNodeInf || level > opts.max_nodes) {
        out.exhausted = true;
        return out;
    }
    std::vector<std::vector<Edge>> all;
    scan_level(n, pairs, k, pred, canon, opts.threads, &all);
    out.nodes = level;
    out.hosts.reserve(all.size());
    for (auto& es : all) out.hosts.emplace_back(n, std::move(es));
    return out;
}

}  // namespace

HostEnumeration<OrderedGraph> minimal_saturated_hosts(const OrderedGraph& g, int n, int k,
                                                      const ExactOptions& opts) {
    return enumerate_hosts(g, n, k, opts);
}
HostEnumeration<CyclicGraph> minimal_saturated_hosts(const CyclicGraph& g, int n, int k,
                                                     const ExactOptions& opts) {
    return enumerate_hosts(g, n, k, opts);
}

namespace {

struct WitnessUnit {
    int n = 0;
    std::vector<Edge> base;
    std::vector<int> run;
    int anchor = 0;
    int extra = 0;
};

struct UnitOutcome {
    std::optional<std::vector<Edge>> host_edges;
    std::uint64_t nodes = 0;
    bool exhausted = false;
};

bool pattern_is_matching(const OrderedGraph& g) {
    const auto deg = g.degrees();
    for (int v = 1; v <= g.n; v++)
        if (deg[v] != 1) return false;
    return true;
}

UnitOutcome run_unit(const WitnessUnit& u, const PatternPack& pat, std::uint64_t node_cap) {
    UnitOutcome out;
    AdjMatrix adj = AdjMatrix::of(u.n, u.base);

    auto in_run = [&](int v) { return std::find(u.run.begin(), u.run.end(), v) != u.run.end(); };

    std::vector<Edge> cands;
    for (int a = 1; a <= u.n; a++)
        for (int b = a + 1; b <= u.n; b++)
            if (!adj.has(a, b) && !in_run(a) && !in_run(b)) cands.push_back({a, b});

    // anchor additions, nearest first: the neighbours of the run are the
    // hardest to serve and fail fastest
    std::vector<Edge> run_adds;
    for (int rv : u.run)
        for (int w = 1; w <= u.n; w++) {
            if (w == rv || (in_run(w) && w < rv)) continue;
            run_adds.push_back(make_edge(rv, w));
        }
    std::stable_sort(run_adds.begin(), run_adds.end(),
                     [&](const Edge& a, const Edge& b) { return a.v - a.u < b.v - b.u; });

    auto optimistic_ok = [&](const AdjMatrix& cur, int suffix_from) {
        AdjMatrix opt = cur;
        for (size_t i = static_cast<size_t>(suffix_from); i < cands.size(); i++)
            if (!opt.has(cands[i].u, cands[i].v)) opt.set(cands[i].u, cands[i].v);
        for (const auto& e : run_adds)
            if (!pat.addition_creates_through(opt, e)) return false;
        return true;
    };

    auto witness_here = [&](AdjMatrix& cur) {
        for (const auto& e : run_adds)
            if (!pat.addition_creates(cur, e)) return false;  // cur avoids the pattern here
        return true;
    };

    bool stop = false;
    int depth = 0;
    std::function<void(int)> rec = [&](int from) {
        if (stop) return;
        if (++out.nodes > node_cap) {
            out.exhausted = true;
            stop = true;
            return;
        }
        if (pat.contained_in(adj)) return;
        const int remaining = u.extra - depth;
        if (remaining == 0) {
            if (witness_here(adj)) {
                out.host_edges = adj.edge_list();
                stop = true;
            }
            return;
        }
        if (depth == 0 || static_cast<int>(cands.size()) - from <= 24) {
            if (!optimistic_ok(adj, from)) return;
        }
        for (int i = from; i + remaining <= static_cast<int>(cands.size()) && !stop; i++) {
            adj.set(cands[i].u, cands[i].v);
            depth++;
            rec(i + 1);
            depth--;
            adj.clear(cands[i].u, cands[i].v);
        }
    };
    rec(0);
    return out;
}

std::vector<WitnessUnit> full_units(const OrderedGraph& g, const SearchBudget& b) {
    const int run_len = pattern_is_matching(g) ? 1 : 2;
    std::vector<WitnessUnit> units;
    for (int nv = 2; nv <= b.max_vertices; nv++) {
        const int pair_cap = std::min(b.max_edges, nv * (nv - 1) / 2);
        for (int x = 0; x <= pair_cap; x++)
            for (int a = 1; a + run_len - 1 <= nv; a++) {
                WitnessUnit u;
                u.n = nv;
                u.anchor = a;
                for (int t = 0; t < run_len; t++) u.run.push_back(a + t);
                u.extra = x;
                units.push_back(std::move(u));
            }
    }
    return units;
}

std::vector<WitnessUnit> template_units(const OrderedGraph& g, const SearchBudget& b,
                                        const PatternPack& pat) {
    if (g.n < 4) throw std::invalid_argument("xshape-template: pattern too small");
    const int run_len = pattern_is_matching(g) ? 1 : 2;
    const OrderedGraph first_drop = drop_first_link(g);
    const OrderedGraph last_drop = drop_last_link(g);

    struct Layout {
        std::vector<Edge> base;
        int n;
        int anchor;
        std::vector<int> run;
    };
    std::vector<Layout> layouts;

    const std::pair<const OrderedGraph*, const OrderedGraph*> orders[2] = {
        {&first_drop, &last_drop}, {&last_drop, &first_drop}};
    for (const auto& [left, right] : orders) {
        for (int overlap = 2; overlap >= 0; overlap--) {
            if (overlap > std::min(left->n, right->n)) continue;
            const int n0 = left->n + right->n - overlap;
            const int offset = left->n - overlap;
            std::vector<Edge> base = left->edges;
            for (const auto& e : right->edges) base.push_back({e.u + offset, e.v + offset});
            std::sort(base.begin(), base.end());
            base.erase(std::unique(base.begin(), base.end()), base.end());

            {  // overlays already containing the pattern can never avoid it
                AdjMatrix adj = AdjMatrix::of(n0, base);
                if (pat.contained_in(adj)) continue;
            }

            for (int t = 0; t <= n0; t++) {
                for (int sl = 0; sl <= 2; sl++) {
                    for (int sr = 0; sr <= 2; sr++) {
                        const int n = n0 + run_len + sl + sr;
                        if (n > b.max_vertices) continue;
                        const int shift = run_len + sl + sr;
                        Layout lay;
                        lay.n = n;
                        lay.anchor = t + sl + 1;
                        for (int q = 0; q < run_len; q++) lay.run.push_back(lay.anchor + q);
                        for (const auto& e : base)
                            lay.base.push_back({e.u > t ? e.u + shift : e.u, e.v > t ? e.v + shift : e.v});
                        layouts.push_back(std::move(lay));
                    }
                }
            }
        }
    }

    std::vector<WitnessUnit> units;
    for (int x = 0; x <= b.max_edges; x++)
        for (const auto& lay : layouts) {
            WitnessUnit u;
            u.n = lay.n;
            u.base = lay.base;
            u.run = lay.run;
            u.anchor = lay.anchor;
            u.extra = x;
            units.push_back(std::move(u));
        }
    return units;
}

}  // namespace

WitnessSearchResult<OrderedGraph> search_witness(const OrderedGraph& g, const SearchBudget& budget,
                                                 int threads) {
    if (g.edges.empty()) throw std::invalid_argument("search_witness: forbidden graph must be non-empty");
    const bool matching = pattern_is_matching(g);
    const PatternPack pat = PatternPack::of(g);

    std::vector<WitnessUnit> units = budget.strategy == SearchStrategy::Full
                                         ? full_units(g, budget)
                                         : template_units(g, budget, pat);

    std::vector<UnitOutcome> outcomes(units.size());
    std::atomic<size_t> next{0};
    std::atomic<size_t> best_found{SIZE_MAX};

    auto worker = [&]() {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= units.size()) break;
            if (i > best_found.load(std::memory_order_relaxed)) continue;
            outcomes[i] = run_unit(units[i], pat, budget.max_nodes);
            if (outcomes[i].host_edges) {
                size_t cur = best_found.load();
                while (i < cur && !best_found.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };

    const int nt = std::max(1, threads);
    if (nt == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nt; t++) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    WitnessSearchResult<OrderedGraph> res;
    for (size_t i = 0; i < units.size(); i++) {
        const auto& o = outcomes[i];
        res.nodes += o.nodes;
        if (o.exhausted) {
            res.exhausted = true;
            return res;
        }
        if (o.host_edges) {
            OrderedGraph host(units[i].n, *o.host_edges);
            auto cert = is_witness(host, g, matching);
            if (cert) {
                res.certificate = *cert;
                return res;
            }
            continue;  // defensive: revalidation failed, keep searching
        }
        if (res.nodes >= budget.max_nodes) {
            res.exhausted = true;
            return res;
        }
    }
    return res;
}

std::optional<CyclicCertificate> cyclic_certificate_from_ordered(const OrderedCertificate& cert) {
    return is_witness(cyclic_closure(cert.witness), cyclic_closure(cert.pattern), cert.matching_mode);
}

}  // namespace ogsat
