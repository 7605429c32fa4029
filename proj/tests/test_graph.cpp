#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "xbtool/graph.hpp"
#include "xbtool/spanning.hpp"

using namespace xbtool;

namespace {

VWGraph k3() { return VWGraph::unweighted(3, {{0, 1}, {0, 2}, {1, 2}}); }
VWGraph k2() { return VWGraph::unweighted(2, {{0, 1}}); }
VWGraph c4() { return VWGraph::unweighted(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

// independent connectivity oracle: plain DFS over an explicit adjacency list
int components_oracle(const VWGraph& g, const std::vector<int>& edge_ids) {
    int n = g.num_vertices();
    std::vector<std::vector<int>> adj(n);
    for (int id : edge_ids) {
        const Edge& e = g.edge(id);
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n, 0);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

bool subset_acyclic(const VWGraph& g, const std::vector<int>& ids) {
    // acyclic iff |S| (non-loop, no loops allowed) == n - c(V,S)
    for (int id : ids)
        if (g.edge(id).is_loop()) return false;
    return static_cast<int>(ids.size()) == g.num_vertices() - components_oracle(g, ids);
}

}  // namespace

TEST_CASE("construction assigns lexicographic edge ids") {
    VWGraph g = VWGraph::unweighted(3, {{1, 2}, {0, 2}, {0, 1}});
    CHECK(g.edge(0).u == 0);
    CHECK(g.edge(0).v == 1);
    CHECK(g.edge(1).v == 2);
    CHECK(g.edge(2).u == 1);
    CHECK_THROWS_AS(VWGraph(2, {1, 0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(VWGraph::unweighted(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("delete_edge") {
    VWGraph g = delete_edge(k2(), 0);
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 0);
    CHECK(g.weights() == std::vector<long long>{1, 1});

    VWGraph loop = VWGraph(1, {1}, {{0, 0}});
    CHECK(delete_edge(loop, 0).num_edges() == 0);

    VWGraph p3 = delete_edge(k3(), 0);
    CHECK(p3.num_edges() == 2);
    CHECK(is_connected(p3));
    CHECK_THROWS_AS(delete_edge(k3(), 7), std::invalid_argument);
}

TEST_CASE("contract_edge") {
    VWGraph g = contract_edge(k2(), 0);
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_edges() == 0);
    CHECK(g.weight(0) == 2);

    VWGraph t = contract_edge(k3(), 0);  // contract 0-1
    CHECK(t.num_vertices() == 2);
    CHECK(t.num_edges() == 2);
    CHECK(t.multiplicity(0, 1) == 2);
    CHECK(t.weight(0) == 2);
    CHECK(t.weight(1) == 1);

    // loop contraction = deletion, weight untouched
    VWGraph loop = VWGraph(1, {2}, {{0, 0}});
    VWGraph lc = contract_edge(loop, 0);
    CHECK(lc.num_vertices() == 1);
    CHECK(lc.num_edges() == 0);
    CHECK(lc.weight(0) == 2);

    // surviving edges keep their ids
    VWGraph sq = c4();
    VWGraph sc = contract_edge(sq, 1);
    std::vector<int> ids;
    for (const Edge& e : sc.edges()) ids.push_back(e.id);
    CHECK(ids == std::vector<int>{0, 2, 3});
}

TEST_CASE("contraction conserves total weight and drops one vertex") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> nd(2, 5), wd(1, 3);
        int n = nd(rng);
        std::vector<long long> w(n);
        for (auto& x : w) x = wd(rng);
        std::uniform_int_distribution<int> vd(0, n - 1), md(1, 7);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0, m = md(rng); i < m; ++i) pairs.emplace_back(vd(rng), vd(rng));
        VWGraph g(n, w, pairs);
        for (const Edge& e : g.edges()) {
            if (e.is_loop()) continue;
            VWGraph c = contract_edge(g, e.id);
            CHECK(c.num_vertices() == g.num_vertices() - 1);
            CHECK(c.total_weight() == g.total_weight());
            CHECK(c.num_edges() == g.num_edges() - 1);
        }
    }
}

TEST_CASE("simple_contract") {
    VWGraph t = simple_contract(k3(), 0);
    CHECK(t.num_vertices() == 2);
    CHECK(t.num_edges() == 1);
    CHECK(t.weight(0) == 2);

    VWGraph sq = simple_contract(c4(), 0);
    CHECK(sq.num_vertices() == 3);
    CHECK(sq.num_edges() == 3);
    CHECK(sq.is_simple());
    CHECK(*std::max_element(sq.weights().begin(), sq.weights().end()) == 2);

    CHECK(simple_contract(k2(), 0).num_vertices() == 1);

    VWGraph multi(2, {1, 1}, {{0, 1}, {0, 1}});
    CHECK_THROWS_AS(simple_contract(multi, 0), std::invalid_argument);
}

TEST_CASE("component_partition") {
    CHECK(component_partition(k3(), {}).parts() == std::vector<long long>{1, 1, 1});
    CHECK(component_partition(k3(), {0}).parts() == std::vector<long long>{2, 1});
    CHECK(component_partition(k3(), {0, 1}).parts() == std::vector<long long>{3});

    // matches an independent DFS component count on random subsets
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> nd(1, 6), md(0, 9);
        int n = nd(rng);
        std::uniform_int_distribution<int> vd(0, n - 1);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0, m = md(rng); i < m; ++i) pairs.emplace_back(vd(rng), vd(rng));
        VWGraph g = VWGraph::unweighted(n, pairs);
        std::uniform_int_distribution<int> coin(0, 1);
        std::vector<int> ids;
        for (const Edge& e : g.edges())
            if (coin(rng)) ids.push_back(e.id);
        Partition p = component_partition(g, ids);
        CHECK(static_cast<int>(p.length()) == components_oracle(g, ids));
        CHECK(p.weight() == g.total_weight());
    }
}

TEST_CASE("component_partition with empty subset lists vertex weights") {
    VWGraph g(3, {5, 2, 7}, {{0, 1}, {1, 2}});
    CHECK(component_partition(g, {}).parts() == std::vector<long long>{7, 5, 2});
}

TEST_CASE("split_graph") {
    // 4 vertices, edges 0-1, 0-2, 1-3: K4 plus three degree-2 hats
    VWGraph g = VWGraph::unweighted(4, {{0, 1}, {0, 2}, {1, 3}});
    VWGraph sp = split_graph(g);
    CHECK(sp.num_vertices() == 7);
    CHECK(sp.num_edges() == 6 + 6);
    CHECK(sp.is_simple());
    for (int hat = 4; hat < 7; ++hat) CHECK(sp.neighbors(hat).size() == 2);

    // single edge -> triangle
    VWGraph tri = split_graph(k2());
    CHECK(tri.num_vertices() == 3);
    CHECK(tri.num_edges() == 3);
    CHECK(has_triangle(tri));

    // edgeless on 3 vertices -> K3
    VWGraph e3 = split_graph(VWGraph::unweighted(3, {}));
    CHECK(e3.num_edges() == 3);

    CHECK_THROWS_AS(split_graph(VWGraph(1, {2}, {})), std::invalid_argument);
}

TEST_CASE("spanning_forests") {
    auto f3 = spanning_forests(k3());
    CHECK(f3.size() == 7);  // empty, 3 singletons, 3 pairs

    CHECK(spanning_forests(k2()).size() == 2);
    CHECK(spanning_forests(c4()).size() == 15);

    // brute-force oracle: every acyclic subset appears exactly once
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> nd(1, 5), md(0, 8);
        int n = nd(rng);
        std::uniform_int_distribution<int> vd(0, n - 1);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0, m = md(rng); i < m; ++i) pairs.emplace_back(vd(rng), vd(rng));
        VWGraph g = VWGraph::unweighted(n, pairs);
        std::set<std::vector<int>> found;
        for (auto& f : spanning_forests(g)) found.insert(f);
        CHECK(found.size() == spanning_forests(g).size());
        int m = g.num_edges();
        int oracle = 0;
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> ids;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) ids.push_back(g.edges()[i].id);
            if (subset_acyclic(g, ids)) {
                ++oracle;
                CHECK(found.count(ids) == 1);
            }
        }
        CHECK(oracle == static_cast<int>(found.size()));
    }
}

TEST_CASE("spanning_trees of a connected graph") {
    CHECK(spanning_trees(k3()).size() == 3);
    CHECK(spanning_trees(c4()).size() == 4);
    // disconnected: trees are maximal forests with c(g) components
    VWGraph two_k2 = disjoint_union(k2(), k2());
    CHECK(spanning_trees(two_k2).size() == 1);
}

TEST_CASE("activities on K3") {
    VWGraph g = k3();  // e0=01, e1=02, e2=12
    EdgeOrder ord = EdgeOrder::default_order(g);

    auto a01 = activities(g, {0, 1}, ord);
    CHECK(a01.ii == 0);
    CHECK(a01.ea == 0);
    CHECK(a01.ia == 2);
    CHECK(a01.ei == 1);

    auto a02 = activities(g, {0, 2}, ord);
    CHECK(a02.II == std::vector<int>{2});
    CHECK(a02.ea == 0);

    auto a12 = activities(g, {1, 2}, ord);
    CHECK(a12.II == std::vector<int>{1, 2});
    CHECK(a12.ea == 1);  // e0 externally active

    CHECK_THROWS_AS(activities(g, {0, 1, 2}, ord), std::invalid_argument);
}

TEST_CASE("activity record counts are consistent") {
    std::mt19937_64 rng(314);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> nd(2, 6), md(1, 9);
        int n = nd(rng);
        std::uniform_int_distribution<int> vd(0, n - 1);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0, m = md(rng); i < m; ++i) pairs.emplace_back(vd(rng), vd(rng));
        VWGraph g = VWGraph::unweighted(n, pairs);
        std::vector<int> ids;
        for (const Edge& e : g.edges()) ids.push_back(e.id);
        std::shuffle(ids.begin(), ids.end(), rng);
        EdgeOrder ord(ids);
        for (auto& f : spanning_forests(g)) {
            auto rec = activities(g, f, ord);
            CHECK(rec.ii + rec.ia == static_cast<long long>(f.size()));
            CHECK(rec.ei + rec.ea == g.num_edges() - static_cast<long long>(f.size()));
            CHECK(rec.ii == static_cast<long long>(rec.II.size()));
            CHECK(rec.ei == static_cast<long long>(rec.EI.size()));
        }
    }
}

TEST_CASE("subset_to_tree on K3") {
    VWGraph g = k3();
    EdgeOrder ord = EdgeOrder::default_order(g);
    CHECK(subset_to_tree(g, {2}, ord) == std::vector<int>{0, 2});
    CHECK(subset_to_tree(g, {}, ord) == std::vector<int>{0, 1});
    // a spanning tree maps to itself
    for (auto& t : spanning_trees(g)) CHECK(subset_to_tree(g, t, ord) == t);
    CHECK_THROWS_AS(subset_to_tree(disjoint_union(k2(), k2()), {}, ord),
                    std::invalid_argument);
}

TEST_CASE("subset_to_tree fibers partition the power set") {
    // fiber of T: II(T) included, no externally inactive edge included
    std::mt19937_64 rng(2718);
    std::vector<std::pair<int, int>> k5_edges, oct_edges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5_edges.emplace_back(i, j);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (j != i + 3) oct_edges.emplace_back(i, j);  // three disjoint nonedges
    std::vector<VWGraph> graphs{k3(), c4(),
                                VWGraph::unweighted(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}),
                                VWGraph(3, {1, 2, 1}, {{0, 1}, {0, 1}, {1, 2}, {0, 2}}),
                                VWGraph::unweighted(5, k5_edges),    // 10 edges
                                VWGraph::unweighted(6, oct_edges)};  // 12 edges
    for (const auto& g : graphs) {
        std::vector<int> ids;
        for (const Edge& e : g.edges()) ids.push_back(e.id);
        for (int reorder = 0; reorder < 3; ++reorder) {
            EdgeOrder ord(ids);
            int m = g.num_edges();
            std::map<std::vector<int>, long long> fiber_sizes;
            for (int mask = 0; mask < (1 << m); ++mask) {
                std::vector<int> s;
                for (int i = 0; i < m; ++i)
                    if (mask & (1 << i)) s.push_back(g.edges()[i].id);
                auto t = subset_to_tree(g, s, ord);
                ++fiber_sizes[t];

                // interval characterization of the fiber
                auto rec = activities(g, t, ord);
                for (int id : rec.II)
                    CHECK(std::binary_search(s.begin(), s.end(), id));
                for (int id : rec.EI)
                    CHECK_FALSE(std::binary_search(s.begin(), s.end(), id));
            }
            long long total = 0;
            for (auto& [t, cnt] : fiber_sizes) {
                auto rec = activities(g, t, ord);
                // the fiber is the boolean interval [II(T), T + externally active]
                CHECK(cnt == (1LL << (rec.ia + rec.ea)));
                total += cnt;
            }
            CHECK(total == (1LL << m));
            std::shuffle(ids.begin(), ids.end(), rng);
        }
    }
}

TEST_CASE("misc graph helpers") {
    CHECK(has_triangle(k3()));
    CHECK_FALSE(has_triangle(c4()));
    CHECK(is_connected(k3()));
    CHECK_FALSE(is_connected(disjoint_union(k2(), k2())));
    CHECK(component_count(disjoint_union(k3(), k2())) == 2);
    VWGraph g(2, {3, 4}, {{0, 1}});
    CHECK(underlying_unweighted(g).weights() == std::vector<long long>{1, 1});
    CHECK(delete_vertex(k3(), 1).num_edges() == 1);
}
