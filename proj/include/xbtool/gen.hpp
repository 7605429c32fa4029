#pragma once

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_set>
#include <vector>

#include "xbtool/canonical.hpp"
#include "xbtool/graph.hpp"
#include "xbtool/spanning.hpp"

namespace xbtool {

// Every simple graph up to isomorphism with at most max_n vertices, built by
// vertex augmentation with canonical-key deduplication: each n-vertex graph
// arises from an (n-1)-vertex graph plus one new vertex with some
// neighborhood. Output is grouped by vertex count, deterministic order.
inline std::vector<VWGraph> all_graphs(int max_n, bool include_empty = true) {
    std::vector<VWGraph> out;
    std::vector<VWGraph> prev{VWGraph::unweighted(0, {})};
    if (include_empty) out.push_back(prev.front());
    for (int n = 1; n <= max_n; ++n) {
        std::unordered_set<std::string> seen;
        std::vector<VWGraph> cur;
        for (const VWGraph& h : prev) {
            std::vector<std::pair<int, int>> base;
            for (const Edge& e : h.edges()) base.emplace_back(e.u, e.v);
            for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
                auto pairs = base;
                for (int i = 0; i < n - 1; ++i)
                    if (mask & (1 << i)) pairs.emplace_back(i, n - 1);
                VWGraph g = VWGraph::unweighted(n, pairs);
                if (seen.insert(canonical_form(g, std::max(n, kDefaultCanonicalBound))).second)
                    cur.push_back(std::move(g));
            }
        }
        out.insert(out.end(), cur.begin(), cur.end());
        prev = std::move(cur);
    }
    return out;
}

inline std::vector<VWGraph> connected_graphs(int max_n) {
    std::vector<VWGraph> out;
    for (auto& g : all_graphs(max_n, false))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

// Every connected simple graph with at most max_edges edges, up to
// isomorphism (vertex counts up to max_edges+1 follow). Breadth-first
// closure from K1 under two connectivity-preserving moves: joining two
// existing vertices and attaching a pendant vertex. Reverse moves (deleting
// a cycle edge, deleting a leaf) reach every connected graph, so the closure
// is exhaustive.
inline std::vector<VWGraph> connected_graphs_max_edges(int max_edges) {
    std::vector<VWGraph> out;
    std::unordered_set<std::string> seen;
    std::deque<VWGraph> queue;
    int bound = std::max(max_edges + 2, kDefaultCanonicalBound);
    VWGraph k1 = VWGraph::unweighted(1, {});
    seen.insert(canonical_form(k1, bound));
    queue.push_back(k1);
    out.push_back(k1);
    while (!queue.empty()) {
        VWGraph g = std::move(queue.front());
        queue.pop_front();
        if (g.num_edges() >= max_edges) continue;
        int n = g.num_vertices();
        std::vector<std::pair<int, int>> base;
        for (const Edge& e : g.edges()) base.emplace_back(e.u, e.v);
        auto push = [&](std::vector<std::pair<int, int>> pairs, int nverts) {
            VWGraph h = VWGraph::unweighted(nverts, pairs);
            if (seen.insert(canonical_form(h, bound)).second) {
                out.push_back(h);
                queue.push_back(std::move(h));
            }
        };
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (g.has_edge_between(u, v)) continue;
                auto pairs = base;
                pairs.emplace_back(u, v);
                push(std::move(pairs), n);
            }
        for (int v = 0; v < n; ++v) {
            auto pairs = base;
            pairs.emplace_back(v, n);
            push(std::move(pairs), n + 1);
        }
    }
    return out;
}

// Random vertex-weighted multigraph; loops and parallel edges allowed.
inline VWGraph random_weighted_multigraph(std::mt19937_64& rng, int max_n = 5,
                                          int max_weight = 3, int max_m = 8) {
    std::uniform_int_distribution<int> nd(1, max_n);
    int n = nd(rng);
    std::uniform_int_distribution<int> wd(1, max_weight), vd(0, n - 1), md(0, max_m);
    std::vector<long long> w(n);
    for (auto& x : w) x = wd(rng);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0, m = md(rng); i < m; ++i) pairs.emplace_back(vd(rng), vd(rng));
    return VWGraph(n, std::move(w), pairs);
}

inline EdgeOrder random_edge_order(std::mt19937_64& rng, const VWGraph& g) {
    std::vector<int> ids;
    for (const Edge& e : g.edges()) ids.push_back(e.id);
    std::shuffle(ids.begin(), ids.end(), rng);
    return EdgeOrder(std::move(ids));
}

}  // namespace xbtool
