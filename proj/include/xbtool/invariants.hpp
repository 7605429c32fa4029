#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "xbtool/bigint.hpp"
#include "xbtool/bivar.hpp"
#include "xbtool/canonical.hpp"
#include "xbtool/graph.hpp"
#include "xbtool/ppoly.hpp"
#include "xbtool/spanning.hpp"

namespace xbtool {

inline constexpr int kDefaultSubsetEdgeBound = 28;

namespace detail {

// Rollback union-find that also tracks total weight per component.
struct WeightedRollbackDSU {
    std::vector<int> parent, size;
    std::vector<long long> weight;
    std::vector<std::pair<int, int>> undo_stack;  // (absorbed root, old parent of it)

    explicit WeightedRollbackDSU(const VWGraph& g)
        : parent(g.num_vertices()), size(g.num_vertices(), 1), weight(g.weights()) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        weight[a] = checked_weight_add(weight[a], weight[b]);
        undo_stack.emplace_back(b, a);
        return true;
    }
    void undo() {
        auto [b, a] = undo_stack.back();
        undo_stack.pop_back();
        parent[b] = b;
        size[a] -= size[b];
        weight[a] -= weight[b];
    }
    Partition partition() const {
        std::vector<long long> parts;
        for (std::size_t v = 0; v < parent.size(); ++v)
            if (parent[v] == static_cast<int>(v)) parts.push_back(weight[v]);
        return Partition(std::move(parts));
    }
};

// Visits every edge subset S of g, reporting |S| and the component-weight
// partition of (V, S). Loops count toward |S| but never join components.
template <typename Fn>
void for_each_subset_partition(const VWGraph& g, int max_edges, const char* who, Fn&& fn) {
    if (g.num_edges() > max_edges)
        throw std::invalid_argument(std::string(who) + ": edge count " +
                                    std::to_string(g.num_edges()) + " exceeds bound " +
                                    std::to_string(max_edges));
    const auto& edges = g.edges();
    WeightedRollbackDSU dsu(g);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int count) {
        if (i == edges.size()) {
            fn(count, dsu);
            return;
        }
        rec(i + 1, count);  // exclude edges[i]
        const Edge& e = edges[i];
        bool united = !e.is_loop() && dsu.unite(e.u, e.v);
        rec(i + 1, count + 1);
        if (united) dsu.undo();
    };
    rec(0, 0);
}

}  // namespace detail

// Tutte symmetric function by direct enumeration of edge subsets:
// XB = sum over S of t^|S| p_{lambda(G,w,S)}.
inline PPoly xb_subset(const VWGraph& g, int max_edges = kDefaultSubsetEdgeBound) {
    std::map<Partition, std::vector<long long>, PartitionRevlexLess> counts;
    detail::for_each_subset_partition(
        g, max_edges, "xb_subset", [&](int size, const detail::WeightedRollbackDSU& dsu) {
            auto& vec = counts[dsu.partition()];
            if (static_cast<int>(vec.size()) <= size) vec.resize(size + 1, 0);
            ++vec[size];
        });
    PPoly out;
    for (auto& [key, vec] : counts) {
        std::vector<Int> coeffs(vec.begin(), vec.end());
        out.add_term(key, TPoly::from_coeffs(std::move(coeffs)));
    }
    return out;
}

// Deletion-contraction with memoization on canonical keys. Loops factor out
// as (1+t) each, components multiply, and parallel classes collapse in one
// step: XB(G) = XB(G minus all copies of uv) + ((1+t)^m - 1) XB(G with uv
// merged), m the multiplicity. The cache is per-engine; share one engine
// across calls to amortize isomorphic minors, or keep one per worker.
class DelconEngine {
public:
    explicit DelconEngine(std::size_t max_entries = 1'000'000, int max_vertices = 20)
        : max_entries_(max_entries), max_vertices_(max_vertices) {}

    PPoly xb(const VWGraph& g) {
        long long loops = 0;
        std::vector<Edge> kept;
        for (const Edge& e : g.edges()) {
            if (e.is_loop())
                ++loops;
            else
                kept.push_back(e);
        }
        VWGraph base = VWGraph::with_edges(g.num_vertices(), g.weights(), std::move(kept));
        PPoly result = product_over_components(base);
        if (loops > 0) result = result.scaled(TPoly::one_plus_t_pow(loops));
        return result;
    }

    std::size_t cache_size() const { return memo_.size(); }
    std::size_t cache_hits() const { return hits_; }

private:
    PPoly product_over_components(const VWGraph& g) {
        PPoly result = PPoly::one();
        for (const auto& comp : components(g)) {
            if (comp.size() == 1 && g.degree(comp[0]) == 0) {
                result *= PPoly::p(Partition::single(g.weight(comp[0])));
            } else {
                result *= connected_xb(induced_subgraph(g, comp));
            }
        }
        return result;
    }

    // g connected, loop-free, at least one edge
    PPoly connected_xb(const VWGraph& g) {
        if (g.num_vertices() == 2) {
            long long a = g.weight(0), b = g.weight(1);
            int m = g.num_edges();
            PPoly out = PPoly::p(Partition({a, b}));
            TPoly factor = TPoly::one_plus_t_pow(m) - TPoly::one();
            out.add_term(Partition::single(checked_weight_add(a, b)), factor);
            return out;
        }
        std::string key = canonical_form(g, max_vertices_);
        if (auto it = memo_.find(key); it != memo_.end()) {
            ++hits_;
            return it->second;
        }

        // densest parallel class between the highest-degree endpoints
        int bu = -1, bv = -1, bm = 0;
        long long bscore = -1;
        int n = g.num_vertices();
        std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
        std::vector<long long> deg(n, 0);
        for (const Edge& e : g.edges()) {
            ++mult[e.u][e.v];
            ++mult[e.v][e.u];
            ++deg[e.u];
            ++deg[e.v];
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (mult[u][v] == 0) continue;
                long long score = static_cast<long long>(mult[u][v]) * 1000 + deg[u] + deg[v];
                if (score > bscore) {
                    bscore = score;
                    bu = u;
                    bv = v;
                    bm = mult[u][v];
                }
            }

        // delete the whole parallel class
        std::vector<Edge> del_edges;
        for (const Edge& e : g.edges())
            if (!((e.u == bu && e.v == bv) || (e.u == bv && e.v == bu))) del_edges.push_back(e);
        VWGraph deleted = VWGraph::with_edges(n, g.weights(), std::move(del_edges));

        // merge endpoints, dropping the class (its extra copies would be loops)
        int a = std::min(bu, bv), b = std::max(bu, bv);
        std::vector<int> remap(n);
        for (int v = 0; v < n; ++v) remap[v] = (v == b) ? a : (v > b ? v - 1 : v);
        std::vector<long long> weights;
        for (int v = 0; v < n; ++v) {
            if (v == b) continue;
            weights.push_back(v == a ? checked_weight_add(g.weight(a), g.weight(b))
                                     : g.weight(v));
        }
        std::vector<Edge> con_edges;
        for (const Edge& e : g.edges()) {
            if ((e.u == bu && e.v == bv) || (e.u == bv && e.v == bu)) continue;
            con_edges.push_back({e.id, remap[e.u], remap[e.v]});
        }
        VWGraph contracted = VWGraph::with_edges(n - 1, std::move(weights), std::move(con_edges));

        PPoly result = product_over_components(deleted);
        TPoly factor = TPoly::one_plus_t_pow(bm) - TPoly::one();
        result += product_over_components(contracted).scaled(factor);

        if (memo_.size() < max_entries_) memo_.emplace(std::move(key), result);
        return result;
    }

    std::size_t max_entries_;
    int max_vertices_;
    std::size_t hits_ = 0;
    std::unordered_map<std::string, PPoly> memo_;
};

inline PPoly xb_delcon(const VWGraph& g, DelconEngine& engine) { return engine.xb(g); }

inline PPoly xb_delcon(const VWGraph& g) {
    DelconEngine engine;
    return engine.xb(g);
}

// Chromatic symmetric function: XB at t = -1. Graphs with loops give 0.
inline PPoly x_csf(const VWGraph& g, DelconEngine& engine) {
    return engine.xb(g).substitute_t(Int(-1));
}

inline PPoly x_csf(const VWGraph& g) {
    DelconEngine engine;
    return x_csf(g, engine);
}

// Chromatic symmetric function by the simple-contraction recursion
// X(G) = X(G\e) - X(G|e), memoized; multi-edges collapse first and loops
// give 0. Coefficients stay integers throughout, which makes this the cheap
// route for larger simple graphs (construction verification); it always
// equals x_csf.
class XDelconEngine {
public:
    explicit XDelconEngine(std::size_t max_entries = 1'000'000, int max_vertices = 32)
        : max_entries_(max_entries), max_vertices_(max_vertices) {}

    PPoly x(const VWGraph& g) {
        for (const Edge& e : g.edges())
            if (e.is_loop()) return PPoly::zero();
        return product_over_components(collapse_to_simple(g));
    }

    std::size_t cache_size() const { return memo_.size(); }

private:
    PPoly product_over_components(const VWGraph& g) {
        PPoly result = PPoly::one();
        for (const auto& comp : components(g)) {
            if (comp.size() == 1) {
                result *= PPoly::p(Partition::single(g.weight(comp[0])));
            } else {
                result *= connected_x(induced_subgraph(g, comp));
            }
        }
        return result;
    }

    PPoly connected_x(const VWGraph& g) {
        if (g.num_vertices() == 2) {
            PPoly out = PPoly::p(Partition({g.weight(0), g.weight(1)}));
            out.add_term(Partition::single(checked_weight_add(g.weight(0), g.weight(1))),
                         TPoly(Int(-1)));
            return out;
        }
        std::string key = canonical_form(g, max_vertices_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        // contract the edge with the largest common neighborhood: the merge
        // then sheds the most parallel duplicates
        int n = g.num_vertices();
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
        int best_id = -1;
        long long best_score = -1;
        for (const Edge& e : g.edges()) {
            long long common = 0;
            for (int x = 0; x < n; ++x)
                if (adj[e.u][x] && adj[e.v][x]) ++common;
            if (common > best_score) {
                best_score = common;
                best_id = e.id;
            }
        }
        PPoly result = product_over_components(delete_edge(g, best_id));
        result -= product_over_components(simple_contract(g, best_id));

        if (memo_.size() < max_entries_) memo_.emplace(std::move(key), result);
        return result;
    }

    std::size_t max_entries_;
    int max_vertices_;
    std::unordered_map<std::string, PPoly> memo_;
};

inline PPoly x_csf_fast(const VWGraph& g, XDelconEngine& engine) { return engine.x(g); }

inline PPoly x_csf_fast(const VWGraph& g) {
    XDelconEngine engine;
    return engine.x(g);
}

// Spanning tree expansion: XB = sum over spanning trees T of
// t^ii(T) (t+1)^ea(T) XB_{(T,w)/II(T)}, the inner XB by subset enumeration.
inline PPoly xb_spanning_tree(const VWGraph& g, const EdgeOrder& ord) {
    if (!is_connected(g))
        throw std::invalid_argument("xb_spanning_tree: graph must be connected");
    PPoly total;
    spanning_trees(g, [&](const std::vector<int>& tree) {
        ActivityRecord act = activities(g, tree, ord);
        std::vector<Edge> tree_edges;
        for (int id : tree) tree_edges.push_back(g.edge(id));
        std::sort(tree_edges.begin(), tree_edges.end(),
                  [](const Edge& a, const Edge& b) { return a.id < b.id; });
        VWGraph tree_graph = VWGraph::with_edges(g.num_vertices(), g.weights(), tree_edges);
        VWGraph reduced = contract_edges(tree_graph, act.II);
        PPoly inner = xb_subset(reduced);
        TPoly factor = TPoly::monomial(act.ii) * TPoly::one_plus_t_pow(act.ea);
        total += inner.scaled(factor);
    });
    return total;
}

// Spanning forest expansion: XB = sum over forests F of
// t^|F| (t+1)^ea(F) p_{lambda(F)}. Valid on disconnected graphs.
inline PPoly xb_spanning_forest(const VWGraph& g, const EdgeOrder& ord) {
    PPoly total;
    spanning_forests(g, [&](const std::vector<int>& forest) {
        ActivityRecord act = activities(g, forest, ord);
        TPoly factor = TPoly::monomial(forest.size()) * TPoly::one_plus_t_pow(act.ea);
        total.add_term(component_partition(g, forest), factor);
    });
    return total;
}

// Spanning tree expansion of X: only trees without externally active edges
// contribute, with sign (-1)^ii(T).
inline PPoly x_spanning_tree(const VWGraph& g, const EdgeOrder& ord) {
    if (!is_connected(g))
        throw std::invalid_argument("x_spanning_tree: graph must be connected");
    PPoly total;
    spanning_trees(g, [&](const std::vector<int>& tree) {
        ActivityRecord act = activities(g, tree, ord);
        if (act.ea != 0) return;
        std::vector<Edge> tree_edges;
        for (int id : tree) tree_edges.push_back(g.edge(id));
        std::sort(tree_edges.begin(), tree_edges.end(),
                  [](const Edge& a, const Edge& b) { return a.id < b.id; });
        VWGraph tree_graph = VWGraph::with_edges(g.num_vertices(), g.weights(), tree_edges);
        VWGraph reduced = contract_edges(tree_graph, act.II);
        PPoly inner = xb_subset(reduced).substitute_t(Int(-1));
        if (act.ii % 2) inner = -inner;
        total += inner;
    });
    return total;
}

// Tutte polynomial by standard deletion-contraction (bridge -> x factor,
// loop -> y factor), memoized on unweighted canonical keys; multiplicative
// over components.
inline BivarPoly tutte(const VWGraph& g) {
    std::unordered_map<std::string, BivarPoly> memo;
    std::function<BivarPoly(const VWGraph&)> go = [&](const VWGraph& h) -> BivarPoly {
        if (h.num_edges() == 0) return BivarPoly::one();
        auto comps = components(h);
        if (comps.size() > 1) {
            BivarPoly prod = BivarPoly::one();
            for (const auto& comp : comps) prod *= go(induced_subgraph(h, comp));
            return prod;
        }
        std::string key = canonical_form(underlying_unweighted(h), 20);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const Edge& e = h.edges().front();
        BivarPoly result;
        if (e.is_loop()) {
            result = BivarPoly::y() * go(delete_edge(h, e.id));
        } else {
            VWGraph del = delete_edge(h, e.id);
            bool bridge = component_count(del) > component_count(h);
            if (bridge)
                result = BivarPoly::x() * go(contract_edge(h, e.id));
            else
                result = go(del) + go(contract_edge(h, e.id));
        }
        memo.emplace(std::move(key), result);
        return result;
    };
    return go(g);
}

// Principal specialization identity linking XB to the Tutte polynomial:
// XB(t, 1^n) = n^c(G) t^(|V|-c) T_G((t+n)/t, t+1). Returns (lhs, rhs); both
// sides are computed so the identity is re-tested on every call.
inline std::pair<Rat, Rat> check_tutte_specialization(const VWGraph& g, int n,
                                                      const Rat& t_val) {
    for (long long w : g.weights())
        if (w != 1)
            throw std::invalid_argument("check_tutte_specialization: weights must all be 1");
    if (n < 1) throw std::invalid_argument("check_tutte_specialization: n must be positive");
    if (t_val == 0)
        throw std::invalid_argument("check_tutte_specialization: t = 0 leaves rhs undefined");
    DelconEngine engine;
    std::vector<Rat> ones(n, Rat(1));
    Rat lhs = engine.xb(g).evaluate(t_val, ones);
    long long c = component_count(g);
    Rat rhs = rat_pow(Rat(n), c) * rat_pow(t_val, g.num_vertices() - c) *
              tutte(g).eval((t_val + n) / t_val, t_val + 1);
    return {lhs, rhs};
}

// W-polynomial expansion: map from component-weight partition to a
// polynomial in u = y-1, via W = sum over S of x_{c_1}...x_{c_k}
// (y-1)^(|S|+k-|V|). The exponent is nonnegative, zero exactly on forests.
using WExpansion = std::map<Partition, TPoly, PartitionRevlexLess>;

inline WExpansion w_polynomial(const VWGraph& g, int max_edges = kDefaultSubsetEdgeBound) {
    std::map<Partition, std::vector<long long>, PartitionRevlexLess> counts;
    int nverts = g.num_vertices();
    detail::for_each_subset_partition(
        g, max_edges, "w_polynomial", [&](int size, const detail::WeightedRollbackDSU& dsu) {
            Partition key = dsu.partition();
            long long expo = size + static_cast<long long>(key.length()) - nverts;
            if (expo < 0) throw std::logic_error("w_polynomial: negative (y-1) exponent");
            auto& vec = counts[std::move(key)];
            if (static_cast<long long>(vec.size()) <= expo) vec.resize(expo + 1, 0);
            ++vec[expo];
        });
    WExpansion out;
    for (auto& [key, vec] : counts) {
        std::vector<Int> coeffs(vec.begin(), vec.end());
        out.emplace(key, TPoly::from_coeffs(std::move(coeffs)));
    }
    return out;
}

// Change of variables recovering XB from W: substitute y = t+1, x_k = p_k/t
// and multiply by t^|V|; the monomial x_lambda u^d maps to
// t^(|V|+d-l(lambda)) p_lambda.
inline PPoly xb_from_w(const WExpansion& w, int nverts) {
    PPoly out;
    for (const auto& [key, upoly] : w) {
        for (int d = 0; d <= upoly.degree(); ++d) {
            Int c = upoly.coeff(d);
            if (c == 0) continue;
            long long texp = nverts + d - static_cast<long long>(key.length());
            if (texp < 0)
                throw std::invalid_argument("xb_from_w: not a W-expansion of an " +
                                            std::to_string(nverts) + "-vertex graph");
            out.add_term(key, TPoly::monomial(static_cast<std::size_t>(texp), c));
        }
    }
    return out;
}

// Inverse direction: divide by t^|V|, set t = y-1, replace p_k by t x_k.
inline WExpansion w_from_xb(const PPoly& xb, int nverts) {
    WExpansion out;
    for (const auto& [key, tpoly] : xb.terms()) {
        for (int j = 0; j <= tpoly.degree(); ++j) {
            Int c = tpoly.coeff(j);
            if (c == 0) continue;
            long long uexp = j + static_cast<long long>(key.length()) - nverts;
            if (uexp < 0)
                throw std::invalid_argument("w_from_xb: not the XB of an " +
                                            std::to_string(nverts) + "-vertex graph");
            auto [it, inserted] =
                out.try_emplace(key, TPoly::monomial(static_cast<std::size_t>(uexp), c));
            if (!inserted) it->second += TPoly::monomial(static_cast<std::size_t>(uexp), c);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

inline std::string render_w(const WExpansion& w) {
    if (w.empty()) return "0";
    std::vector<const std::pair<const Partition, TPoly>*> order;
    for (const auto& kv : w) order.push_back(&kv);
    PartitionLexLess less;
    std::sort(order.begin(), order.end(),
              [&](auto* a, auto* b) { return less(a->first, b->first); });
    std::string s;
    bool first = true;
    for (const auto* kv : order) {
        const auto& [key, c] = *kv;
        if (!first) s += " + ";
        first = false;
        std::string cs = c.to_string();
        // u = y-1
        for (std::size_t i = 0; i + 1 <= cs.size(); ++i)
            if (cs[i] == 't') cs[i] = 'u';
        std::string xname = "x[" + key.to_string() + "]";
        if (cs == "1")
            s += xname;
        else if (c.is_monomial())
            s += cs + " " + xname;
        else
            s += "(" + cs + ") " + xname;
    }
    return s;
}

// Weighted (r,q)-chromatic function with the extra t parameter:
// B = sum over S of t^|S| prod_{c in C(S)} sum_{i=0}^{n-1} r^(w(c) q^i),
// n the vertex count, by direct enumeration.
inline Int b_function(const VWGraph& g, long long r, long long q, long long t_val,
                      int max_edges = kDefaultSubsetEdgeBound) {
    if (r < 1) throw std::invalid_argument("b_function: r must be >= 1");
    if (q < 0) throw std::invalid_argument("b_function: q must be nonnegative");
    long long n = g.num_vertices();

    std::map<long long, Int> value_by_weight;
    auto component_value = [&](long long w) -> const Int& {
        auto it = value_by_weight.find(w);
        if (it != value_by_weight.end()) return it->second;
        Int sum = 0;
        Int qpow = 1;  // q^i, with q^0 = 1 even for q = 0
        for (long long i = 0; i < n; ++i) {
            Int expo = qpow * w;
            if (expo > 4'000'000)
                throw std::overflow_error("b_function: exponent too large");
            sum += int_pow(Int(r), expo.convert_to<unsigned long long>());
            qpow *= q;
        }
        return value_by_weight.emplace(w, std::move(sum)).first->second;
    };

    std::map<Partition, std::vector<long long>, PartitionRevlexLess> counts;
    detail::for_each_subset_partition(
        g, max_edges, "b_function", [&](int size, const detail::WeightedRollbackDSU& dsu) {
            auto& vec = counts[dsu.partition()];
            if (static_cast<int>(vec.size()) <= size) vec.resize(size + 1, 0);
            ++vec[size];
        });

    Int total = 0;
    for (const auto& [key, vec] : counts) {
        Int prod = 1;
        for (long long part : key.parts()) prod *= component_value(part);
        Int tsum = 0;
        Int tpow = 1;
        for (std::size_t k = 0; k < vec.size(); ++k) {
            tsum += tpow * vec[k];
            tpow *= t_val;
        }
        total += prod * tsum;
    }
    return total;
}

// Brute-force evaluation over all ncolors^|V| colorings of
// sum (1+t)^{monochromatic edges} prod x_{color(v)}^{w(v)}; equals
// evaluate(xb, t, xs). Loops always count as monochromatic.
inline Rat coloring_oracle_xb(const VWGraph& g, int ncolors, const Rat& t_val,
                              const std::vector<Rat>& xs) {
    if (static_cast<int>(xs.size()) != ncolors)
        throw std::invalid_argument("coloring_oracle_xb: xs length must equal ncolors");
    int n = g.num_vertices();
    double log_states = n * std::log2(std::max(ncolors, 1));
    if (ncolors > 1 && log_states > std::log2(1e7))
        throw std::invalid_argument("coloring_oracle_xb: enumeration guard exceeded");
    if (ncolors == 0) return n == 0 ? Rat(1) : Rat(0);

    std::vector<std::vector<Rat>> xw(n, std::vector<Rat>(ncolors));
    for (int v = 0; v < n; ++v)
        for (int c = 0; c < ncolors; ++c) xw[v][c] = rat_pow(xs[c], g.weight(v));
    std::vector<Rat> mono_pow(g.num_edges() + 1);
    mono_pow[0] = 1;
    for (int k = 1; k <= g.num_edges(); ++k) mono_pow[k] = mono_pow[k - 1] * (1 + t_val);

    std::vector<int> color(n, 0);
    Rat total = 0;
    while (true) {
        int mono = 0;
        for (const Edge& e : g.edges())
            if (color[e.u] == color[e.v]) ++mono;
        Rat term = mono_pow[mono];
        for (int v = 0; v < n && term != 0; ++v) term *= xw[v][color[v]];
        total += term;
        int pos = 0;
        while (pos < n && ++color[pos] == ncolors) color[pos++] = 0;
        if (pos == n) break;
    }
    return total;
}

}  // namespace xbtool
