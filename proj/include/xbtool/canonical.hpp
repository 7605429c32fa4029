#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "xbtool/graph.hpp"

namespace xbtool {

inline constexpr int kDefaultCanonicalBound = 12;

namespace detail {

struct CanonicalScratch {
    int n = 0;
    std::vector<int> mult;        // n*n multiplicity matrix (loops excluded)
    std::vector<int> loops;
    std::vector<long long> weight;
    std::vector<int> color;       // final refined color per vertex
    std::vector<std::vector<int>> classes;  // vertices per color, color-ordered
};

// Iterated degree refinement. Colors are ranks of sorted structural
// signatures, so they are identical across isomorphic graphs. Refinement
// only splits classes; vertices in one final class share weight, loop count
// and degree.
inline CanonicalScratch refine_classes(const VWGraph& g) {
    CanonicalScratch s;
    int n = s.n = g.num_vertices();
    s.mult.assign(static_cast<std::size_t>(n) * n, 0);
    s.loops.assign(n, 0);
    s.weight = g.weights();
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) {
            ++s.loops[e.u];
        } else {
            ++s.mult[static_cast<std::size_t>(e.u) * n + e.v];
            ++s.mult[static_cast<std::size_t>(e.v) * n + e.u];
        }
    }

    using Sig = std::vector<long long>;
    std::vector<int> color(n, 0);
    {
        std::vector<Sig> sigs(n);
        for (int v = 0; v < n; ++v) {
            long long deg = 0;
            for (int u = 0; u < n; ++u) deg += s.mult[static_cast<std::size_t>(v) * n + u];
            sigs[v] = {s.weight[v], s.loops[v], deg};
        }
        std::vector<Sig> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) -
                                        sorted.begin());
    }

    int num_colors = n == 0 ? 0 : 1 + *std::max_element(color.begin(), color.end());
    while (true) {
        std::vector<Sig> sigs(n);
        for (int v = 0; v < n; ++v) {
            Sig sig{color[v]};
            std::vector<std::pair<long long, long long>> nb;
            for (int u = 0; u < n; ++u) {
                int m = s.mult[static_cast<std::size_t>(v) * n + u];
                if (m > 0) nb.emplace_back(color[u], m);
            }
            std::sort(nb.begin(), nb.end());
            for (auto [c, m] : nb) {
                sig.push_back(c);
                sig.push_back(m);
            }
            sigs[v] = std::move(sig);
        }
        std::vector<Sig> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        int next_colors = static_cast<int>(sorted.size());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) -
                                        sorted.begin());
        if (next_colors == num_colors) break;
        num_colors = next_colors;
    }

    s.color = color;
    s.classes.assign(num_colors, {});
    for (int v = 0; v < n; ++v) s.classes[color[v]].push_back(v);
    return s;
}

// DFS over class-respecting vertex placements minimizing the flattened
// adjacency-multiplicity rows; prefix pruning keeps the search shallow.
// Twin vertices (same class, identical rows toward every other vertex) are
// interchangeable by an automorphism, so only one per twin class is tried
// at each position; without this, edgeless and complete graphs explode
// factorially.
inline std::vector<int> minimize_placement(const CanonicalScratch& s) {
    int n = s.n;
    std::vector<int> slot_class;  // class owning each position
    slot_class.reserve(n);
    for (std::size_t c = 0; c < s.classes.size(); ++c)
        for (std::size_t k = 0; k < s.classes[c].size(); ++k)
            slot_class.push_back(static_cast<int>(c));

    std::vector<int> twin(n, -1);
    {
        int next = 0;
        for (int v = 0; v < n; ++v) {
            if (twin[v] >= 0) continue;
            twin[v] = next;
            for (int u = v + 1; u < n; ++u) {
                if (twin[u] >= 0 || s.color[u] != s.color[v]) continue;
                bool same = true;
                for (int x = 0; x < n && same; ++x) {
                    if (x == u || x == v) continue;
                    if (s.mult[static_cast<std::size_t>(v) * n + x] !=
                        s.mult[static_cast<std::size_t>(u) * n + x])
                        same = false;
                }
                if (same) twin[u] = next;
            }
            ++next;
        }
    }

    std::vector<int> best_key, cur_key;
    std::vector<int> best_perm, placed;  // placed[i] = vertex at position i
    std::vector<char> used(n, 0);
    cur_key.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);

    // tight == true while cur_key equals best_key on the shared prefix; the
    // leaf always re-compares in full because best_key may have shrunk since
    // tight went false
    std::function<void(int, bool)> rec = [&](int pos, bool tight) {
        if (pos == n) {
            if (best_key.empty() || cur_key < best_key) {
                best_key = cur_key;
                best_perm = placed;
            }
            return;
        }
        std::vector<int> tried_twins;
        for (int v : s.classes[slot_class[pos]]) {
            if (used[v]) continue;
            if (std::find(tried_twins.begin(), tried_twins.end(), twin[v]) !=
                tried_twins.end())
                continue;
            tried_twins.push_back(twin[v]);
            std::size_t mark = cur_key.size();
            bool ok = true;
            bool now_tight = tight;
            for (int j = 0; j < pos && ok; ++j) {
                int m = s.mult[static_cast<std::size_t>(placed[j]) * n + v];
                cur_key.push_back(m);
                if (now_tight && !best_key.empty()) {
                    int b = best_key[cur_key.size() - 1];
                    if (m > b) ok = false;
                    else if (m < b) now_tight = false;
                }
            }
            if (ok) {
                used[v] = 1;
                placed.push_back(v);
                rec(pos + 1, now_tight);
                placed.pop_back();
                used[v] = 0;
            }
            cur_key.resize(mark);
        }
    };
    placed.reserve(n);
    rec(0, true);
    return best_perm;
}

}  // namespace detail

// Canonical key: two graphs receive equal keys iff they are w-isomorphic
// (weights and edge multiplicities respected). Brute-force minimization over
// class-respecting placements; intended for small graphs, guarded by the
// vertex bound.
inline std::string canonical_form(const VWGraph& g, int max_vertices = kDefaultCanonicalBound) {
    if (g.num_vertices() > max_vertices)
        throw std::invalid_argument("canonical_form: vertex count " +
                                    std::to_string(g.num_vertices()) + " exceeds bound " +
                                    std::to_string(max_vertices));
    auto s = detail::refine_classes(g);
    auto perm = detail::minimize_placement(s);
    int n = s.n;
    std::string key = std::to_string(n);
    key += '|';
    for (int i = 0; i < n; ++i) {
        if (i) key += ',';
        key += std::to_string(s.weight[perm[i]]);
    }
    key += '|';
    for (int i = 0; i < n; ++i) {
        if (i) key += ',';
        key += std::to_string(s.loops[perm[i]]);
    }
    key += '|';
    bool first = true;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!first) key += ',';
            first = false;
            key += std::to_string(s.mult[static_cast<std::size_t>(perm[i]) * n + perm[j]]);
        }
    }
    return key;
}

// One constraint per line: the image of vertex v must lie in `allowed`.
struct AutoConstraint {
    int v;
    std::vector<int> allowed;
};

// Searches for a w-automorphism satisfying all constraints; returns the
// permutation (old id -> image) if one exists. Exact search over
// class-respecting assignments.
inline std::optional<std::vector<int>> find_automorphism(
    const VWGraph& g, const std::vector<AutoConstraint>& constraints,
    int max_vertices = kDefaultCanonicalBound) {
    int n = g.num_vertices();
    if (n > max_vertices)
        throw std::invalid_argument("find_automorphism: vertex count exceeds bound");
    auto s = detail::refine_classes(g);

    std::vector<std::vector<char>> allowed(n, std::vector<char>(n, 1));
    for (const auto& c : constraints) {
        if (c.v < 0 || c.v >= n)
            throw std::invalid_argument("find_automorphism: constraint vertex out of range");
        std::vector<char> mask(n, 0);
        for (int t : c.allowed) {
            if (t < 0 || t >= n)
                throw std::invalid_argument("find_automorphism: constraint target out of range");
            mask[t] = 1;
        }
        for (int t = 0; t < n; ++t) allowed[c.v][t] = allowed[c.v][t] && mask[t];
    }

    // most constrained vertices first, then larger ids to keep it stable
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> freedom(n, 0);
    for (int v = 0; v < n; ++v)
        for (int t = 0; t < n; ++t)
            if (allowed[v][t] && s.color[t] == s.color[v]) ++freedom[v];
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return freedom[a] < freedom[b]; });

    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        for (int t = 0; t < n; ++t) {
            if (used[t] || !allowed[v][t] || s.color[t] != s.color[v]) continue;
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j) {
                int u = order[j];
                if (s.mult[static_cast<std::size_t>(v) * n + u] !=
                    s.mult[static_cast<std::size_t>(t) * n + image[u]])
                    ok = false;
            }
            if (!ok) continue;
            image[v] = t;
            used[t] = 1;
            if (rec(idx + 1)) return true;
            used[t] = 0;
            image[v] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return image;
}

inline bool automorphism_exists(const VWGraph& g, const std::vector<AutoConstraint>& constraints,
                                int max_vertices = kDefaultCanonicalBound) {
    return find_automorphism(g, constraints, max_vertices).has_value();
}

inline bool w_isomorphic(const VWGraph& a, const VWGraph& b,
                         int max_vertices = kDefaultCanonicalBound) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    return canonical_form(a, max_vertices) == canonical_form(b, max_vertices);
}

}  // namespace xbtool
