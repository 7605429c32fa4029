#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "xbtool/canonical.hpp"
#include "xbtool/graph.hpp"
#include "xbtool/invariants.hpp"

namespace xbtool {

// A generator was invoked on input violating its stated hypotheses.
struct hypothesis_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class PairMethod { split, orellana_scott, neighborhood, double_graph, fixture };

inline const char* pair_method_name(PairMethod m) {
    switch (m) {
        case PairMethod::split: return "split";
        case PairMethod::orellana_scott: return "orellana_scott";
        case PairMethod::neighborhood: return "neighborhood";
        case PairMethod::double_graph: return "double_graph";
        case PairMethod::fixture: return "fixture";
    }
    return "?";
}

struct PairWitness {
    std::vector<int> seed_vertices;
    std::vector<std::vector<int>> automorphisms;  // witnesses found during checks
    std::string note;
};

// Candidate pair of graphs with provably equal chromatic symmetric function.
// Every generator verifies the equality before returning; the graphs may or
// may not be isomorphic (callers test via canonical_form).
struct PairCandidate {
    VWGraph g1, g2;
    PairMethod method;
    PairWitness witness;
};

namespace detail {

// Equality gate run on every emitted pair. The hypotheses guarantee equal
// chromatic symmetric functions, so a mismatch means a generator bug, not
// bad input.
inline void assert_equal_x(const VWGraph& g1, const VWGraph& g2, XDelconEngine& xeng,
                           const char* who) {
    if (x_csf_fast(g1, xeng) != x_csf_fast(g2, xeng))
        throw std::logic_error(std::string("internal error: ") + who +
                               " emitted a pair with unequal chromatic symmetric functions");
}

inline std::optional<int> edge_id_between(const VWGraph& g, int u, int v) {
    for (const Edge& e : g.edges())
        if (std::minmax(e.u, e.v) == std::minmax(u, v)) return e.id;
    return std::nullopt;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Split construction: for an unweighted simple graph with nonedges uv and
// u'v' such that some automorphism maps u to u' and some automorphism maps v
// to v', the split graphs of G+uv and G+u'v' have equal chromatic symmetric
// function.

// Returns the empty string if the hypotheses hold (filling witnesses),
// otherwise a description of the first failed condition.
inline std::string check_split_hypotheses(const VWGraph& g, int u, int u2, int v, int v2,
                                          PairWitness* witness = nullptr) {
    int n = g.num_vertices();
    for (int x : {u, u2, v, v2})
        if (x < 0 || x >= n) return "vertex id out of range";
    if (!g.is_simple()) return "seed graph must be simple";
    for (long long w : g.weights())
        if (w != 1) return "seed graph must be unweighted";
    if (u == v) return "u and v must be distinct";
    if (u2 == v2) return "u' and v' must be distinct";
    if (g.has_edge_between(u, v)) return "uv must be a nonedge";
    if (g.has_edge_between(u2, v2)) return "u'v' must be a nonedge";
    int bound = std::max(n, kDefaultCanonicalBound);
    auto map_u = find_automorphism(g, {{u, {u2}}}, bound);
    if (!map_u) return "no automorphism maps u to u'";
    auto map_v = find_automorphism(g, {{v, {v2}}}, bound);
    if (!map_v) return "no automorphism maps v to v'";
    if (witness) {
        witness->seed_vertices = {u, u2, v, v2};
        witness->automorphisms = {*map_u, *map_v};
    }
    return {};
}

inline PairCandidate split_pair(const VWGraph& g, int u, int u2, int v, int v2,
                                XDelconEngine& xeng) {
    PairWitness witness;
    if (std::string err = check_split_hypotheses(g, u, u2, v, v2, &witness); !err.empty())
        throw hypothesis_error("split_pair: " + err);
    PairCandidate out{split_graph(with_added_edge(g, u, v)),
                      split_graph(with_added_edge(g, u2, v2)), PairMethod::split,
                      std::move(witness)};
    detail::assert_equal_x(out.g1, out.g2, xeng, "split_pair");
    return out;
}

inline PairCandidate split_pair(const VWGraph& g, int u, int u2, int v, int v2) {
    XDelconEngine xeng;
    return split_pair(g, u, u2, v, v2, xeng);
}

// Disjoint-copy special case: u = u' = a in the first copy, v = b in the
// first copy, v' the image of b in the second copy. For noncomplete
// connected G the two outputs are nonisomorphic (one connected, one not).
inline PairCandidate double_graph_pair(const VWGraph& g, int a, int b, XDelconEngine& xeng) {
    if (g.has_edge_between(a, b))
        throw hypothesis_error("double_graph_pair: ab must be a nonedge");
    VWGraph doubled = disjoint_union(g, g);
    PairCandidate out = split_pair(doubled, a, a, b, b + g.num_vertices(), xeng);
    out.method = PairMethod::double_graph;
    out.witness.note = "second copy offset " + std::to_string(g.num_vertices());
    return out;
}

// ---------------------------------------------------------------------------
// Triangle-swap construction on a path v1-v2-v3-v4: adding the chord v1v3 or
// the chord v2v4 yields equal chromatic symmetric functions whenever some
// w-automorphism of G minus the middle edge swaps the pairs {v1,v3} and
// {v2,v4}.

inline std::string check_orellana_scott_hypotheses(const VWGraph& g, int v1, int v2, int v3,
                                                   int v4, PairWitness* witness = nullptr) {
    int n = g.num_vertices();
    for (int x : {v1, v2, v3, v4})
        if (x < 0 || x >= n) return "vertex id out of range";
    if (!g.is_simple()) return "seed graph must be simple";
    std::array<int, 4> vs{v1, v2, v3, v4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (vs[i] == vs[j]) return "v1..v4 must be distinct";
    if (!g.has_edge_between(v1, v2)) return "v1v2 must be an edge";
    if (!g.has_edge_between(v2, v3)) return "v2v3 must be an edge";
    if (!g.has_edge_between(v3, v4)) return "v3v4 must be an edge";
    if (g.has_edge_between(v1, v3)) return "v1v3 must be a nonedge";
    if (g.has_edge_between(v1, v4)) return "v1v4 must be a nonedge";
    if (g.has_edge_between(v2, v4)) return "v2v4 must be a nonedge";
    VWGraph cut = delete_edge(g, *detail::edge_id_between(g, v2, v3));
    int bound = std::max(n, kDefaultCanonicalBound);
    auto f = find_automorphism(cut,
                               {{v1, {v2, v4}}, {v3, {v2, v4}}, {v2, {v1, v3}}, {v4, {v1, v3}}},
                               bound);
    if (!f) return "no w-automorphism of G minus v2v3 swaps {v1,v3} with {v2,v4}";
    if (witness) {
        witness->seed_vertices = {v1, v2, v3, v4};
        witness->automorphisms = {*f};
    }
    return {};
}

inline PairCandidate orellana_scott_pair(const VWGraph& g, int v1, int v2, int v3, int v4,
                                         XDelconEngine& xeng) {
    PairWitness witness;
    if (std::string err = check_orellana_scott_hypotheses(g, v1, v2, v3, v4, &witness);
        !err.empty())
        throw hypothesis_error("orellana_scott_pair: " + err);
    PairCandidate out{with_added_edge(g, v1, v3), with_added_edge(g, v2, v4),
                      PairMethod::orellana_scott, std::move(witness)};
    detail::assert_equal_x(out.g1, out.g2, xeng, "orellana_scott_pair");
    return out;
}

inline PairCandidate orellana_scott_pair(const VWGraph& g, int v1, int v2, int v3, int v4) {
    XDelconEngine xeng;
    return orellana_scott_pair(g, v1, v2, v3, v4, xeng);
}

// ---------------------------------------------------------------------------
// Neighborhood construction: when N(v3) is contained in N(v1) and N(v2),
// v1v2 is an edge, v1v3 and v2v3 are nonedges, and a w-automorphism of
// G - v3 swaps v1 and v2, adding v1v3 or v2v3 gives equal chromatic
// symmetric functions.

inline std::string check_neighborhood_hypotheses(const VWGraph& g, int v1, int v2, int v3,
                                                 PairWitness* witness = nullptr) {
    int n = g.num_vertices();
    for (int x : {v1, v2, v3})
        if (x < 0 || x >= n) return "vertex id out of range";
    if (!g.is_simple()) return "seed graph must be simple";
    if (v1 == v2 || v1 == v3 || v2 == v3) return "v1, v2, v3 must be distinct";
    if (!g.has_edge_between(v1, v2)) return "v1v2 must be an edge";
    if (g.has_edge_between(v1, v3)) return "v1v3 must be a nonedge";
    if (g.has_edge_between(v2, v3)) return "v2v3 must be a nonedge";
    auto n1 = g.neighbors(v1), n2 = g.neighbors(v2);
    for (int x : g.neighbors(v3)) {
        if (!std::binary_search(n1.begin(), n1.end(), x))
            return "N(v3) is not contained in N(v1)";
        if (!std::binary_search(n2.begin(), n2.end(), x))
            return "N(v3) is not contained in N(v2)";
    }
    std::vector<int> remap;
    VWGraph cut = delete_vertex(g, v3, &remap);
    int bound = std::max(n, kDefaultCanonicalBound);
    auto f = find_automorphism(cut, {{remap[v1], {remap[v2]}}, {remap[v2], {remap[v1]}}},
                               bound);
    if (!f) return "no w-automorphism of G minus v3 swaps v1 and v2";
    if (witness) {
        witness->seed_vertices = {v1, v2, v3};
        witness->automorphisms = {*f};
        witness->note = "automorphism indices refer to G with v3 removed";
    }
    return {};
}

inline PairCandidate neighborhood_pair(const VWGraph& g, int v1, int v2, int v3,
                                       XDelconEngine& xeng) {
    PairWitness witness;
    if (std::string err = check_neighborhood_hypotheses(g, v1, v2, v3, &witness); !err.empty())
        throw hypothesis_error("neighborhood_pair: " + err);
    PairCandidate out{with_added_edge(g, v1, v3), with_added_edge(g, v2, v3),
                      PairMethod::neighborhood, std::move(witness)};
    detail::assert_equal_x(out.g1, out.g2, xeng, "neighborhood_pair");
    return out;
}

inline PairCandidate neighborhood_pair(const VWGraph& g, int v1, int v2, int v3) {
    XDelconEngine xeng;
    return neighborhood_pair(g, v1, v2, v3, xeng);
}

// ---------------------------------------------------------------------------
// Seed scanners: every vertex tuple of g satisfying a generator's
// hypotheses, in lexicographic order.

inline std::vector<std::array<int, 4>> find_split_tuples(const VWGraph& g,
                                                         std::size_t max_results = SIZE_MAX) {
    std::vector<std::array<int, 4>> out;
    int n = g.num_vertices();
    if (!g.is_simple()) return out;
    for (long long w : g.weights())
        if (w != 1) return out;
    // orbit matrix: can some automorphism send a to b
    int bound = std::max(n, kDefaultCanonicalBound);
    std::vector<std::vector<char>> orbit(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            orbit[a][b] = a == b || automorphism_exists(g, {{a, {b}}}, bound);
    for (int u = 0; u < n && out.size() < max_results; ++u)
        for (int v = 0; v < n && out.size() < max_results; ++v) {
            if (u == v || g.has_edge_between(u, v)) continue;
            for (int u2 = 0; u2 < n && out.size() < max_results; ++u2) {
                if (!orbit[u][u2]) continue;
                for (int v2 = 0; v2 < n && out.size() < max_results; ++v2) {
                    if (u2 == v2 || !orbit[v][v2] || g.has_edge_between(u2, v2)) continue;
                    out.push_back({u, u2, v, v2});
                }
            }
        }
    return out;
}

inline std::vector<std::array<int, 4>> find_orellana_scott_tuples(
    const VWGraph& g, std::size_t max_results = SIZE_MAX) {
    std::vector<std::array<int, 4>> out;
    int n = g.num_vertices();
    if (!g.is_simple()) return out;
    for (int v1 = 0; v1 < n && out.size() < max_results; ++v1)
        for (int v2 = 0; v2 < n; ++v2)
            for (int v3 = 0; v3 < n; ++v3)
                for (int v4 = 0; v4 < n && out.size() < max_results; ++v4) {
                    if (v1 == v2 || v1 == v3 || v1 == v4 || v2 == v3 || v2 == v4 || v3 == v4)
                        continue;
                    if (check_orellana_scott_hypotheses(g, v1, v2, v3, v4).empty())
                        out.push_back({v1, v2, v3, v4});
                }
    return out;
}

inline std::vector<std::array<int, 3>> find_neighborhood_tuples(
    const VWGraph& g, std::size_t max_results = SIZE_MAX) {
    std::vector<std::array<int, 3>> out;
    int n = g.num_vertices();
    if (!g.is_simple()) return out;
    for (int v1 = 0; v1 < n && out.size() < max_results; ++v1)
        for (int v2 = 0; v2 < n; ++v2)
            for (int v3 = 0; v3 < n && out.size() < max_results; ++v3) {
                if (v1 == v2 || v1 == v3 || v2 == v3) continue;
                if (check_neighborhood_hypotheses(g, v1, v2, v3).empty())
                    out.push_back({v1, v2, v3});
            }
    return out;
}

// ---------------------------------------------------------------------------
// Explicit 8-vertex pairs with equal Tutte symmetric function, a pair of
// weighted trees with equal chromatic symmetric function, and a connected
// split-construction pair. Vertex numbering follows 0-based ids.

inline VWGraph fixture_g1() {
    return VWGraph::unweighted(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 7}, {4, 7}, {5, 1},
                                   {5, 2}, {6, 0}, {6, 2}, {6, 3}, {6, 4}, {6, 5}});
}

inline VWGraph fixture_g2() {
    return VWGraph::unweighted(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 7}, {4, 7}, {5, 0},
                                   {5, 1}, {5, 2}, {5, 3}, {6, 2}, {6, 4}, {6, 5}});
}

inline VWGraph fixture_h1() {
    return VWGraph::unweighted(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {7, 1}, {7, 2}, {7, 0},
                                   {7, 4}, {5, 1}, {5, 2}, {5, 0}, {5, 3}, {6, 5}, {6, 2}});
}

inline VWGraph fixture_h2() {
    return VWGraph::unweighted(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {7, 1}, {7, 2}, {7, 0},
                                   {7, 4}, {5, 1}, {5, 2}, {5, 3}, {6, 5}, {6, 2}, {6, 7}});
}

inline VWGraph fixture_tree_left() {
    return VWGraph(8, {1, 2, 1, 3, 2, 1, 1, 1},
                   {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {2, 6}, {3, 7}});
}

inline VWGraph fixture_tree_right() {
    return VWGraph(8, {1, 3, 2, 1, 2, 1, 1, 1},
                   {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {1, 6}, {3, 7}});
}

// Connected 6-vertex seed whose split pair (u=u'=0, v=4, v'=5) gives two
// connected nonisomorphic split graphs with equal X.
inline VWGraph fixture_split_seed() {
    return VWGraph::unweighted(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
}

inline std::vector<PairCandidate> fixtures(XDelconEngine& xeng, DelconEngine& xbeng) {
    std::vector<PairCandidate> out;

    auto xb_pair = [&](VWGraph a, VWGraph b, const char* name) {
        if (xbeng.xb(a) != xbeng.xb(b))
            throw std::logic_error(std::string("internal error: fixture ") + name +
                                   " has unequal Tutte symmetric functions");
        detail::assert_equal_x(a, b, xeng, name);
        PairCandidate c{std::move(a), std::move(b), PairMethod::fixture, {}};
        c.witness.note = name;
        out.push_back(std::move(c));
    };
    xb_pair(fixture_g1(), fixture_g2(), "equal-xb pair 1");
    xb_pair(fixture_h1(), fixture_h2(), "equal-xb pair 2");

    {
        VWGraph a = fixture_tree_left(), b = fixture_tree_right();
        detail::assert_equal_x(a, b, xeng, "weighted tree pair");
        PairCandidate c{std::move(a), std::move(b), PairMethod::fixture, {}};
        c.witness.note = "weighted tree pair";
        out.push_back(std::move(c));
    }

    {
        PairCandidate c = split_pair(fixture_split_seed(), 0, 0, 4, 5, xeng);
        c.witness.note = "connected split pair";
        out.push_back(std::move(c));
    }
    return out;
}

inline std::vector<PairCandidate> fixtures() {
    XDelconEngine xeng;
    DelconEngine xbeng;
    return fixtures(xeng, xbeng);
}

}  // namespace xbtool
