#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "xbtool/canonical.hpp"
#include "xbtool/graph.hpp"

using namespace xbtool;

namespace {

VWGraph random_graph(std::mt19937_64& rng, int max_n = 7, bool weighted = false,
                     bool multi = false) {
    std::uniform_int_distribution<int> nd(1, max_n);
    int n = nd(rng);
    std::vector<long long> w(n, 1);
    if (weighted) {
        std::uniform_int_distribution<int> wd(1, 3);
        for (auto& x : w) x = wd(rng);
    }
    std::uniform_int_distribution<int> vd(0, n - 1), md(0, 2 * n);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0, m = md(rng); i < m; ++i) {
        int u = vd(rng), v = vd(rng);
        if (!multi && u == v) continue;
        if (!multi) {
            bool dup = false;
            for (auto [a, b] : pairs)
                if (std::minmax(a, b) == std::minmax(u, v)) dup = true;
            if (dup) continue;
        }
        pairs.emplace_back(u, v);
    }
    return VWGraph(n, std::move(w), pairs);
}

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("canonical_form identifies relabelings") {
    VWGraph k3 = VWGraph::unweighted(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(canonical_form(k3) == canonical_form(relabel(k3, {2, 0, 1})));

    VWGraph p3 = VWGraph::unweighted(3, {{0, 1}, {1, 2}});
    VWGraph e_plus = VWGraph::unweighted(3, {{0, 1}});
    CHECK(canonical_form(p3) != canonical_form(e_plus));
    CHECK(canonical_form(p3) != canonical_form(k3));
}

TEST_CASE("canonical_form is invariant under random relabeling") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        VWGraph g = random_graph(rng, 7, trial % 2 == 1, trial % 3 == 0);
        std::string key = canonical_form(g);
        for (int rep = 0; rep < 100; ++rep) {
            auto perm = random_perm(rng, g.num_vertices());
            CHECK(canonical_form(relabel(g, perm)) == key);
        }
    }
}

TEST_CASE("canonical_form separates weight and multiplicity variants") {
    VWGraph a(2, {1, 2}, {{0, 1}});
    VWGraph b(2, {1, 1}, {{0, 1}});
    CHECK(canonical_form(a) != canonical_form(b));

    VWGraph single(2, {1, 1}, {{0, 1}});
    VWGraph dbl(2, {1, 1}, {{0, 1}, {0, 1}});
    CHECK(canonical_form(single) != canonical_form(dbl));

    VWGraph loop1(1, {1}, {{0, 0}});
    VWGraph loop2(1, {1}, {{0, 0}, {0, 0}});
    CHECK(canonical_form(loop1) != canonical_form(loop2));

    // weight swap across an asymmetric graph matters
    VWGraph path_a(3, {2, 1, 1}, {{0, 1}, {1, 2}});
    VWGraph path_b(3, {1, 2, 1}, {{0, 1}, {1, 2}});
    CHECK(canonical_form(path_a) != canonical_form(path_b));
    VWGraph path_c(3, {1, 1, 2}, {{0, 1}, {1, 2}});
    CHECK(canonical_form(path_a) == canonical_form(path_c));
}

TEST_CASE("canonical_form size bound") {
    VWGraph big = VWGraph::unweighted(13, {});
    CHECK_THROWS_AS(canonical_form(big), std::invalid_argument);
    CHECK_NOTHROW(canonical_form(big, 13));
}

TEST_CASE("pairwise separation on brute-force distinct graphs") {
    // all 4-vertex simple graphs by mask; equal canonical keys must mean
    // isomorphic (checked by exhaustive permutation comparison)
    std::vector<std::pair<int, int>> all_pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<VWGraph> graphs;
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 6; ++i)
            if (mask & (1 << i)) pairs.push_back(all_pairs[i]);
        graphs.push_back(VWGraph::unweighted(4, pairs));
    }
    std::vector<int> perm{0, 1, 2, 3};
    auto iso = [&](const VWGraph& a, const VWGraph& b) {
        if (a.num_edges() != b.num_edges()) return false;
        std::vector<int> p{0, 1, 2, 3};
        do {
            bool ok = true;
            for (const Edge& e : a.edges())
                if (!b.has_edge_between(p[e.u], p[e.v])) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        } while (std::next_permutation(p.begin(), p.end()));
        return false;
    };
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            CHECK((canonical_form(graphs[i]) == canonical_form(graphs[j])) ==
                  iso(graphs[i], graphs[j]));
}

TEST_CASE("automorphism_exists with constraints") {
    VWGraph k3 = VWGraph::unweighted(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(automorphism_exists(k3, {{0, {1}}}));

    VWGraph p3 = VWGraph::unweighted(3, {{0, 1}, {1, 2}});  // path 0-1-2
    CHECK_FALSE(automorphism_exists(p3, {{0, {1}}}));       // degree mismatch
    CHECK(automorphism_exists(p3, {{0, {2}}}));

    // set-valued targets
    VWGraph c4 = VWGraph::unweighted(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(automorphism_exists(c4, {{0, {1, 3}}, {2, {1, 3}}}));
    CHECK_FALSE(automorphism_exists(c4, {{0, {2}}, {1, {2}}}));  // not injective-compatible

    // weights restrict the group
    VWGraph wpath(3, {2, 1, 1}, {{0, 1}, {1, 2}});
    CHECK_FALSE(automorphism_exists(wpath, {{0, {2}}}));
    CHECK(automorphism_exists(wpath, {{0, {0}}}));
}

TEST_CASE("find_automorphism returns a valid permutation") {
    std::mt19937_64 rng(515);
    for (int trial = 0; trial < 20; ++trial) {
        VWGraph g = random_graph(rng, 6, true, true);
        auto perm = find_automorphism(g, {});
        REQUIRE(perm.has_value());
        CHECK(canonical_form(relabel(g, *perm)) == canonical_form(g));
        for (int v = 0; v < g.num_vertices(); ++v) CHECK(g.weight(v) == g.weight((*perm)[v]));
    }
}

namespace {

// brute-force w-isomorphism: all n! maps, checking weights, loops and
// multiplicities; no shared code with canonical_form
bool brute_w_iso(const VWGraph& a, const VWGraph& b) {
    int n = a.num_vertices();
    if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (a.weight(v) != b.weight(p[v]) || a.loops_at(v) != b.loops_at(p[v])) ok = false;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.multiplicity(u, v) != b.multiplicity(p[u], p[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace

TEST_CASE("canonical keys agree with brute-force w-isomorphism on multigraphs") {
    std::mt19937_64 rng(8822);
    std::vector<VWGraph> pool;
    for (int i = 0; i < 60; ++i) pool.push_back(random_graph(rng, 5, true, true));
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            bool keys_equal = canonical_form(pool[i]) == canonical_form(pool[j]);
            CHECK(keys_equal == brute_w_iso(pool[i], pool[j]));
        }
    }
}

TEST_CASE("w_isomorphic") {
    VWGraph a(3, {1, 2, 1}, {{0, 1}, {1, 2}});
    VWGraph b(3, {1, 1, 2}, {{0, 2}, {1, 2}});  // same weighted path relabeled
    CHECK(w_isomorphic(a, b));
    VWGraph c(3, {1, 2, 1}, {{0, 1}, {0, 2}});  // weight-2 at an endpoint
    CHECK(w_isomorphic(a, a));
    CHECK_FALSE(w_isomorphic(a, c));
}
