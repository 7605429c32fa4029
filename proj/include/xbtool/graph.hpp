#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xbtool/partition.hpp"

namespace xbtool {

struct Edge {
    int id;
    int u;
    int v;
    bool is_loop() const { return u == v; }
};

// Labeled vertex-weighted multigraph. Vertices are dense 0-based ids with a
// positive integer weight each; edges carry stable integer ids that survive
// deletion and contraction (surviving edges keep their ids, so an edge order
// chosen on a graph remains meaningful on its minors). Values are immutable
// after construction: every operation returns a fresh graph, so sharing
// across threads is safe.
class VWGraph {
public:
    VWGraph() = default;

    // Edge ids are assigned 0..m-1 after sorting the given endpoint pairs
    // lexicographically by (min,max); ties (parallel edges) keep input order.
    VWGraph(int n, std::vector<long long> weights,
            const std::vector<std::pair<int, int>>& edge_pairs)
        : n_(n), w_(std::move(weights)) {
        if (n < 0) throw std::invalid_argument("VWGraph: negative vertex count");
        if (static_cast<int>(w_.size()) != n)
            throw std::invalid_argument("VWGraph: weight count != vertex count");
        for (long long w : w_)
            if (w < 1) throw std::invalid_argument("VWGraph: weights must be >= 1");
        std::vector<std::pair<int, int>> sorted;
        sorted.reserve(edge_pairs.size());
        for (auto [u, v] : edge_pairs) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("VWGraph: edge endpoint out of range");
            sorted.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::stable_sort(sorted.begin(), sorted.end());
        edges_.reserve(sorted.size());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            edges_.push_back({static_cast<int>(i), sorted[i].first, sorted[i].second});
    }

    // All weights 1.
    static VWGraph unweighted(int n, const std::vector<std::pair<int, int>>& edge_pairs) {
        return VWGraph(n, std::vector<long long>(n, 1), edge_pairs);
    }

    // Internal constructor preserving explicit edge records (ids kept as
    // given; must be unique and ascending).
    static VWGraph with_edges(int n, std::vector<long long> weights, std::vector<Edge> edges) {
        VWGraph g;
        g.n_ = n;
        g.w_ = std::move(weights);
        g.edges_ = std::move(edges);
        for (std::size_t i = 1; i < g.edges_.size(); ++i)
            if (g.edges_[i - 1].id >= g.edges_[i].id)
                throw std::invalid_argument("VWGraph: edge ids must be ascending");
        return g;
    }

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<long long>& weights() const { return w_; }
    long long weight(int v) const { return w_.at(v); }
    const std::vector<Edge>& edges() const { return edges_; }

    long long total_weight() const {
        return std::accumulate(w_.begin(), w_.end(), 0LL);
    }

    const Edge& edge(int id) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                   [](const Edge& e, int x) { return e.id < x; });
        if (it == edges_.end() || it->id != id)
            throw std::invalid_argument("VWGraph: unknown edge id " + std::to_string(id));
        return *it;
    }

    bool has_edge_id(int id) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                   [](const Edge& e, int x) { return e.id < x; });
        return it != edges_.end() && it->id == id;
    }

    int multiplicity(int u, int v) const {
        int count = 0;
        for (const Edge& e : edges_)
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ++count;
        return count;
    }

    int loops_at(int v) const {
        int count = 0;
        for (const Edge& e : edges_)
            if (e.is_loop() && e.u == v) ++count;
        return count;
    }

    // Endpoint incidences at v, loops counted twice.
    int degree(int v) const {
        int d = 0;
        for (const Edge& e : edges_) {
            if (e.u == v) ++d;
            if (e.v == v) ++d;
        }
        return d;
    }

    bool is_simple() const {
        std::vector<std::pair<int, int>> seen;
        for (const Edge& e : edges_) {
            if (e.is_loop()) return false;
            seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        }
        std::sort(seen.begin(), seen.end());
        return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    }

    bool has_edge_between(int u, int v) const {
        for (const Edge& e : edges_)
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
        return false;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (const Edge& e : edges_) {
            if (e.is_loop()) continue;
            if (e.u == v) out.push_back(e.v);
            if (e.v == v) out.push_back(e.u);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    bool operator==(const VWGraph& o) const {
        if (n_ != o.n_ || w_ != o.w_ || edges_.size() != o.edges_.size()) return false;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Edge &a = edges_[i], &b = o.edges_[i];
            if (a.id != b.id || std::minmax(a.u, a.v) != std::minmax(b.u, b.v)) return false;
        }
        return true;
    }

private:
    int n_ = 0;
    std::vector<long long> w_;
    std::vector<Edge> edges_;
};

inline long long checked_weight_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("vertex weight overflow under contraction");
    return r;
}

inline VWGraph delete_edge(const VWGraph& g, int edge_id) {
    g.edge(edge_id);  // validates
    std::vector<Edge> edges;
    edges.reserve(g.num_edges() - 1);
    for (const Edge& e : g.edges())
        if (e.id != edge_id) edges.push_back(e);
    return VWGraph::with_edges(g.num_vertices(), g.weights(), std::move(edges));
}

inline VWGraph delete_edges(const VWGraph& g, const std::vector<int>& edge_ids) {
    std::vector<int> ids = edge_ids;
    std::sort(ids.begin(), ids.end());
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!std::binary_search(ids.begin(), ids.end(), e.id)) edges.push_back(e);
    return VWGraph::with_edges(g.num_vertices(), g.weights(), std::move(edges));
}

// Contraction of a non-loop edge merges its endpoints into one vertex whose
// weight is the sum of the endpoint weights; all other edges survive with
// their ids, so parallel edges and loops may appear. Contracting a loop is
// deletion (weights unchanged). The merged vertex takes the smaller endpoint
// slot and higher-numbered vertices shift down by one.
inline VWGraph contract_edge(const VWGraph& g, int edge_id) {
    const Edge e = g.edge(edge_id);
    if (e.is_loop()) return delete_edge(g, edge_id);
    int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    int n = g.num_vertices();
    std::vector<int> remap(n);
    for (int v = 0; v < n; ++v) remap[v] = (v == b) ? a : (v > b ? v - 1 : v);
    std::vector<long long> weights;
    weights.reserve(n - 1);
    for (int v = 0; v < n; ++v) {
        if (v == b) continue;
        weights.push_back(v == a ? checked_weight_add(g.weight(a), g.weight(b))
                                 : g.weight(v));
    }
    std::vector<Edge> edges;
    edges.reserve(g.num_edges() - 1);
    for (const Edge& f : g.edges()) {
        if (f.id == edge_id) continue;
        edges.push_back({f.id, remap[f.u], remap[f.v]});
    }
    return VWGraph::with_edges(n - 1, std::move(weights), std::move(edges));
}

// Contract a set of edges one by one (ids stay valid on the minors).
inline VWGraph contract_edges(const VWGraph& g, const std::vector<int>& edge_ids) {
    VWGraph cur = g;
    for (int id : edge_ids) cur = contract_edge(cur, id);
    return cur;
}

// Simple contraction: contract, then drop loops and collapse each parallel
// class to its smallest-id representative. Defined on simple graphs only.
inline VWGraph simple_contract(const VWGraph& g, int edge_id) {
    if (!g.is_simple())
        throw std::invalid_argument("simple_contract: input graph is not simple");
    VWGraph c = contract_edge(g, edge_id);
    std::vector<Edge> kept;
    std::vector<std::pair<int, int>> seen;
    for (const Edge& e : c.edges()) {  // ids ascending, so first wins
        if (e.is_loop()) continue;
        auto key = std::minmax(e.u, e.v);
        std::pair<int, int> k{key.first, key.second};
        if (std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
        seen.push_back(k);
        kept.push_back(e);
    }
    return VWGraph::with_edges(c.num_vertices(), c.weights(), std::move(kept));
}

// Drop loops and parallel duplicates (smallest id kept) without contracting.
inline VWGraph collapse_to_simple(const VWGraph& g) {
    std::vector<Edge> kept;
    std::vector<std::pair<int, int>> seen;
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        auto key = std::minmax(e.u, e.v);
        std::pair<int, int> k{key.first, key.second};
        if (std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
        seen.push_back(k);
        kept.push_back(e);
    }
    return VWGraph::with_edges(g.num_vertices(), g.weights(), std::move(kept));
}

inline VWGraph delete_vertex(const VWGraph& g, int v, std::vector<int>* old_to_new = nullptr) {
    int n = g.num_vertices();
    if (v < 0 || v >= n) throw std::invalid_argument("delete_vertex: vertex out of range");
    std::vector<int> remap(n, -1);
    for (int u = 0; u < n; ++u)
        if (u != v) remap[u] = u > v ? u - 1 : u;
    std::vector<long long> weights;
    for (int u = 0; u < n; ++u)
        if (u != v) weights.push_back(g.weight(u));
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (e.u == v || e.v == v) continue;
        edges.push_back({e.id, remap[e.u], remap[e.v]});
    }
    if (old_to_new) *old_to_new = remap;
    return VWGraph::with_edges(n - 1, std::move(weights), std::move(edges));
}

// Fresh graph with one more edge; edge ids are reassigned lexicographically.
inline VWGraph with_added_edge(const VWGraph& g, int u, int v) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(g.num_edges() + 1);
    for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
    pairs.emplace_back(u, v);
    return VWGraph(g.num_vertices(), g.weights(), pairs);
}

inline VWGraph disjoint_union(const VWGraph& a, const VWGraph& b) {
    std::vector<long long> weights = a.weights();
    weights.insert(weights.end(), b.weights().begin(), b.weights().end());
    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : a.edges()) pairs.emplace_back(e.u, e.v);
    for (const Edge& e : b.edges())
        pairs.emplace_back(e.u + a.num_vertices(), e.v + a.num_vertices());
    return VWGraph(a.num_vertices() + b.num_vertices(), std::move(weights), pairs);
}

namespace detail {
// Minimal union-find for component bookkeeping.
class DSU {
public:
    explicit DSU(int n) : parent_(n), rank_(n, 0), count_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        --count_;
        return true;
    }
    int components() const { return count_; }

private:
    std::vector<int> parent_, rank_;
    int count_;
};
}  // namespace detail

inline std::vector<std::vector<int>> components(const VWGraph& g) {
    detail::DSU dsu(g.num_vertices());
    for (const Edge& e : g.edges())
        if (!e.is_loop()) dsu.unite(e.u, e.v);
    std::vector<std::vector<int>> by_root(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) by_root[dsu.find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& grp : by_root)
        if (!grp.empty()) out.push_back(std::move(grp));
    return out;
}

inline int component_count(const VWGraph& g) {
    detail::DSU dsu(g.num_vertices());
    for (const Edge& e : g.edges())
        if (!e.is_loop()) dsu.unite(e.u, e.v);
    return dsu.components();
}

inline bool is_connected(const VWGraph& g) {
    return g.num_vertices() <= 1 || component_count(g) == 1;
}

// Partition of the total weight by connected components of (V(g), s),
// sorted weakly decreasing.
inline Partition component_partition(const VWGraph& g, const std::vector<int>& edge_ids) {
    detail::DSU dsu(g.num_vertices());
    for (int id : edge_ids) {
        const Edge& e = g.edge(id);
        if (!e.is_loop()) dsu.unite(e.u, e.v);
    }
    std::vector<long long> weight_by_root(g.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v)
        weight_by_root[dsu.find(v)] = checked_weight_add(weight_by_root[dsu.find(v)], g.weight(v));
    std::vector<long long> parts;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (weight_by_root[v] > 0) parts.push_back(weight_by_root[v]);
    return Partition(std::move(parts));
}

// Induced subgraph on a vertex subset (edge ids preserved).
inline VWGraph induced_subgraph(const VWGraph& g, const std::vector<int>& verts) {
    std::vector<int> remap(g.num_vertices(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) remap[verts[i]] = static_cast<int>(i);
    std::vector<long long> weights;
    for (int v : verts) weights.push_back(g.weight(v));
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (remap[e.u] >= 0 && remap[e.v] >= 0)
            edges.push_back({e.id, remap[e.u], remap[e.v]});
    return VWGraph::with_edges(static_cast<int>(verts.size()), std::move(weights),
                               std::move(edges));
}

// Clique on the original vertices plus one degree-2 "hat" vertex per edge,
// adjacent to that edge's endpoints. Defined for unweighted graphs; the
// result is simple and unweighted with n+m vertices.
inline VWGraph split_graph(const VWGraph& g) {
    for (long long w : g.weights())
        if (w != 1)
            throw std::invalid_argument("split_graph: defined for unweighted graphs only");
    int n = g.num_vertices(), m = g.num_edges();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    int hat = n;
    for (const Edge& e : g.edges()) {
        pairs.emplace_back(e.u, hat);
        if (e.v != e.u) pairs.emplace_back(e.v, hat);
        ++hat;
    }
    return VWGraph::unweighted(n + m, pairs);
}

inline VWGraph underlying_unweighted(const VWGraph& g) {
    std::vector<Edge> edges = g.edges();
    return VWGraph::with_edges(g.num_vertices(),
                               std::vector<long long>(g.num_vertices(), 1), std::move(edges));
}

inline bool has_triangle(const VWGraph& g) {
    int n = g.num_vertices();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const Edge& e : g.edges())
        if (!e.is_loop()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (adj[a][b])
                for (int c = b + 1; c < n; ++c)
                    if (adj[a][c] && adj[b][c]) return true;
    return false;
}

inline VWGraph relabel(const VWGraph& g, const std::vector<int>& perm) {
    // perm maps old vertex id -> new vertex id
    int n = g.num_vertices();
    std::vector<long long> weights(n);
    for (int v = 0; v < n; ++v) weights[perm[v]] = g.weight(v);
    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : g.edges()) pairs.emplace_back(perm[e.u], perm[e.v]);
    return VWGraph(n, std::move(weights), pairs);
}

}  // namespace xbtool
