#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xbtool/graph.hpp"

namespace xbtool {

// graph6: one-byte size field N(n) = 63+n for n <= 62, then the upper
// triangle in column-major order x(0,1), x(0,2), x(1,2), x(0,3), ... packed
// big-endian six bits per byte, each byte offset by 63, zero-padded.
// Weights of a parsed graph are all 1.
inline VWGraph parse_graph6(std::string_view line) {
    if (line.empty()) throw std::invalid_argument("graph6: empty line");
    for (char ch : line)
        if (ch < 63 || ch > 126)
            throw std::invalid_argument("graph6: byte out of range 63..126");
    if (line[0] == 126)
        throw std::invalid_argument("graph6: multi-byte size fields (n > 62) unsupported");
    int n = line[0] - 63;
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t expect = 1 + (nbits + 5) / 6;
    if (line.size() < expect) throw std::invalid_argument("graph6: truncated bit payload");
    if (line.size() > expect) throw std::invalid_argument("graph6: trailing bytes");
    std::vector<std::pair<int, int>> pairs;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = line[1 + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) pairs.emplace_back(i, j);
        }
    }
    // padding bits must be zero for the encoding to round-trip
    for (std::size_t b = nbits; b < (expect - 1) * 6; ++b) {
        int byte = line[1 + b / 6] - 63;
        if ((byte >> (5 - b % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return VWGraph::unweighted(n, pairs);
}

inline std::string write_graph6(const VWGraph& g) {
    int n = g.num_vertices();
    if (n > 62) throw std::invalid_argument("graph6: more than 62 vertices unsupported");
    if (!g.is_simple()) throw std::invalid_argument("graph6: graph must be simple");
    for (long long w : g.weights())
        if (w != 1) throw std::invalid_argument("graph6: format carries no vertex weights");
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | adj[i][j];
            if (++filled == 6) {
                out += static_cast<char>(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out += static_cast<char>(63 + (acc << (6 - filled)));
    return out;
}

// Weighted edge-list text format: first line "n m", second line n
// space-separated weights, then m lines "u v" with 0-based endpoints.
inline VWGraph parse_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative counts");
    std::vector<long long> weights(n);
    for (auto& w : weights)
        if (!(in >> w)) throw std::invalid_argument("edge list: missing weight");
    std::vector<std::pair<int, int>> pairs(m);
    for (auto& [u, v] : pairs)
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: missing edge");
    return VWGraph(n, std::move(weights), pairs);
}

inline VWGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline std::string write_edge_list(const VWGraph& g) {
    std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (v) out += ' ';
        out += std::to_string(g.weight(v));
    }
    out += '\n';
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

// A pair file is two edge-list blocks separated by a blank line.
inline std::pair<VWGraph, VWGraph> parse_pair_file(std::istream& in) {
    VWGraph a = parse_edge_list(in);
    VWGraph b = parse_edge_list(in);
    return {a, b};
}

}  // namespace xbtool
