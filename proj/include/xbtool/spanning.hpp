#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "xbtool/graph.hpp"

namespace xbtool {

// Total order on the edge ids of a graph. The default order is ascending
// edge id; any permutation of the ids is accepted.
class EdgeOrder {
public:
    EdgeOrder() = default;

    explicit EdgeOrder(std::vector<int> ids_in_order) : order_(std::move(ids_in_order)) {
        for (std::size_t i = 0; i < order_.size(); ++i) rank_[order_[i]] = static_cast<int>(i);
        if (rank_.size() != order_.size())
            throw std::invalid_argument("EdgeOrder: duplicate edge id");
    }

    static EdgeOrder default_order(const VWGraph& g) {
        std::vector<int> ids;
        ids.reserve(g.num_edges());
        for (const Edge& e : g.edges()) ids.push_back(e.id);
        return EdgeOrder(std::move(ids));
    }

    int rank(int edge_id) const {
        auto it = rank_.find(edge_id);
        if (it == rank_.end())
            throw std::invalid_argument("EdgeOrder: edge id not covered by order");
        return it->second;
    }

    // Ids from least to greatest.
    const std::vector<int>& ids() const { return order_; }

    bool covers(const VWGraph& g) const {
        if (static_cast<int>(order_.size()) != g.num_edges()) return false;
        for (const Edge& e : g.edges())
            if (!rank_.count(e.id)) return false;
        return true;
    }

private:
    std::vector<int> order_;
    std::map<int, int> rank_;
};

namespace detail {
// Union-find with an undo stack, for subset DFS enumeration.
class RollbackDSU {
public:
    explicit RollbackDSU(int n) : parent_(n), size_(n, 1), count_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];  // no path compression (undoable)
        return x;
    }
    bool connected(int a, int b) const { return find(a) == find(b); }
    // Returns false (and records nothing) if already connected.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --count_;
        undo_.push_back(b);
        return true;
    }
    void undo() {
        int b = undo_.back();
        undo_.pop_back();
        int a = parent_[b];
        parent_[b] = b;
        size_[a] -= size_[b];
        ++count_;
    }
    int components() const { return count_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int count_;
    mutable std::vector<int> undo_;  // roots absorbed, in order
};
}  // namespace detail

// Enumerates every acyclic edge subset of g (the empty set included),
// invoking visit on each. Subsets are edge-id lists in ascending id order.
inline void spanning_forests(const VWGraph& g, const std::function<void(const std::vector<int>&)>& visit) {
    const auto& edges = g.edges();
    detail::RollbackDSU dsu(g.num_vertices());
    std::vector<int> current;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == edges.size()) {
            visit(current);
            return;
        }
        rec(i + 1);  // exclude
        const Edge& e = edges[i];
        if (!e.is_loop() && !dsu.connected(e.u, e.v)) {
            dsu.unite(e.u, e.v);
            current.push_back(e.id);
            rec(i + 1);
            current.pop_back();
            dsu.undo();
        }
    };
    rec(0);
}

inline std::vector<std::vector<int>> spanning_forests(const VWGraph& g) {
    std::vector<std::vector<int>> out;
    spanning_forests(g, [&](const std::vector<int>& f) {
        std::vector<int> sorted = f;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
    });
    return out;
}

// Spanning trees are the forests whose component count equals c(g).
inline void spanning_trees(const VWGraph& g, const std::function<void(const std::vector<int>&)>& visit) {
    int target = g.num_vertices() - component_count(g);
    spanning_forests(g, [&](const std::vector<int>& f) {
        if (static_cast<int>(f.size()) == target) visit(f);
    });
}

inline std::vector<std::vector<int>> spanning_trees(const VWGraph& g) {
    std::vector<std::vector<int>> out;
    spanning_trees(g, [&](const std::vector<int>& t) {
        std::vector<int> sorted = t;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
    });
    return out;
}

struct ActivityRecord {
    std::vector<int> subset;  // the tree or forest, ascending edge ids
    long long ii = 0, ia = 0, ei = 0, ea = 0;
    std::vector<int> II;  // internally inactive edge ids
    std::vector<int> EI;  // externally inactive edge ids
};

// Classifies every edge of g relative to an acyclic subset under ord.
// An edge f of the subset is internally active when it is the ord-smallest
// edge that can replace f (reconnect the two pieces of f's component); an
// edge f outside the subset is externally active when it is the ord-smallest
// edge of the cycle created by adding it. Adding an edge that creates no
// cycle (possible when the subset is a forest but not a spanning tree)
// makes that edge externally inactive.
inline ActivityRecord activities(const VWGraph& g, const std::vector<int>& subset,
                                 const EdgeOrder& ord) {
    ActivityRecord rec;
    rec.subset = subset;
    std::sort(rec.subset.begin(), rec.subset.end());

    // verify acyclic
    {
        detail::DSU check(g.num_vertices());
        for (int id : rec.subset) {
            const Edge& e = g.edge(id);
            if (e.is_loop() || !check.unite(e.u, e.v))
                throw std::invalid_argument("activities: subset is not acyclic");
        }
    }

    auto in_subset = [&](int id) {
        return std::binary_search(rec.subset.begin(), rec.subset.end(), id);
    };

    // adjacency within the subset, for path finding
    int n = g.num_vertices();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
    for (int id : rec.subset) {
        const Edge& e = g.edge(id);
        adj[e.u].emplace_back(e.v, id);
        adj[e.v].emplace_back(e.u, id);
    }

    // Unique path between two vertices of the same subset component.
    auto path_edges = [&](int from, int to) -> std::optional<std::vector<int>> {
        std::vector<int> parent_edge(n, -1), parent(n, -1);
        std::vector<char> seen(n, 0);
        std::vector<int> stack{from};
        seen[from] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == to) break;
            for (auto [w, id] : adj[v]) {
                if (seen[w]) continue;
                seen[w] = 1;
                parent[w] = v;
                parent_edge[w] = id;
                stack.push_back(w);
            }
        }
        if (!seen[to]) return std::nullopt;
        std::vector<int> path;
        for (int v = to; v != from; v = parent[v]) path.push_back(parent_edge[v]);
        return path;
    };

    for (const Edge& f : g.edges()) {
        if (in_subset(f.id)) {
            // components of subset \ f; which side each endpoint lands on
            detail::DSU dsu(n);
            for (int id : rec.subset) {
                if (id == f.id) continue;
                const Edge& e = g.edge(id);
                dsu.unite(e.u, e.v);
            }
            int side_u = dsu.find(f.u), side_v = dsu.find(f.v);
            bool active = true;
            for (const Edge& e : g.edges()) {
                if (e.is_loop()) continue;
                int a = dsu.find(e.u), b = dsu.find(e.v);
                bool reconnects = (a == side_u && b == side_v) || (a == side_v && b == side_u);
                if (reconnects && ord.rank(e.id) < ord.rank(f.id)) {
                    active = false;
                    break;
                }
            }
            if (active) {
                ++rec.ia;
            } else {
                ++rec.ii;
                rec.II.push_back(f.id);
            }
        } else {
            bool active;
            if (f.is_loop()) {
                active = true;  // the created cycle is the loop itself
            } else {
                auto path = path_edges(f.u, f.v);
                if (!path) {
                    active = false;  // subset + f stays acyclic
                } else {
                    active = true;
                    for (int id : *path) {
                        if (ord.rank(id) < ord.rank(f.id)) {
                            active = false;
                            break;
                        }
                    }
                }
            }
            if (active) {
                ++rec.ea;
            } else {
                ++rec.ei;
                rec.EI.push_back(f.id);
            }
        }
    }
    std::sort(rec.II.begin(), rec.II.end());
    std::sort(rec.EI.begin(), rec.EI.end());
    return rec;
}

// The subset-to-tree map: starting from T = S, sweep S in ascending order
// removing any edge lying on a cycle of the current T, then sweep E \ S in
// ascending order adding any edge that creates no cycle. For connected g
// the result is a spanning tree.
inline std::vector<int> subset_to_tree(const VWGraph& g, const std::vector<int>& subset,
                                       const EdgeOrder& ord) {
    if (!is_connected(g))
        throw std::invalid_argument("subset_to_tree: graph must be connected");
    std::vector<int> s = subset;
    std::sort(s.begin(), s.end(), [&](int a, int b) { return ord.rank(a) < ord.rank(b); });
    std::vector<char> in_tree(g.num_edges() + 1, 0);
    auto mark = [&](int id, char val) { in_tree[id] = val; };
    for (int id : s) mark(id, 1);

    auto on_cycle = [&](int target_id) {
        // target lies on a cycle of (V, T) iff T minus target still connects
        // its endpoints (or target is a loop)
        const Edge& e = g.edge(target_id);
        if (e.is_loop()) return true;
        detail::DSU dsu(g.num_vertices());
        for (const Edge& f : g.edges())
            if (in_tree[f.id] && f.id != target_id && !f.is_loop()) dsu.unite(f.u, f.v);
        return dsu.find(e.u) == dsu.find(e.v);
    };

    for (int id : s)
        if (on_cycle(id)) mark(id, 0);

    std::vector<int> rest;
    for (const Edge& e : g.edges())
        if (!std::count(s.begin(), s.end(), e.id)) rest.push_back(e.id);
    std::sort(rest.begin(), rest.end(), [&](int a, int b) { return ord.rank(a) < ord.rank(b); });
    for (int id : rest) {
        const Edge& e = g.edge(id);
        if (e.is_loop()) continue;
        detail::DSU dsu(g.num_vertices());
        for (const Edge& f : g.edges())
            if (in_tree[f.id] && !f.is_loop()) dsu.unite(f.u, f.v);
        if (dsu.find(e.u) != dsu.find(e.v)) mark(id, 1);
    }

    std::vector<int> tree;
    for (const Edge& e : g.edges())
        if (in_tree[e.id]) tree.push_back(e.id);
    return tree;
}

}  // namespace xbtool
