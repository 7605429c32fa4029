#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "xbtool/canonical.hpp"
#include "xbtool/graph6.hpp"
#include "xbtool/invariants.hpp"

namespace xbtool {

struct CensusRecord {
    std::string graph6;
    std::string canonical_key;
    std::string xb_fingerprint;  // canonical serialization of XB
    std::string x_fingerprint;   // XB at t = -1, never computed independently
    bool has_triangle = false;
    bool connected = false;
    int nvertices = 0;
    int nedges = 0;
};

struct CensusSkip {
    std::size_t line_number;
    std::string reason;
};

struct CensusPair {
    std::string g6_a, g6_b;  // the side with the smaller canonical key first
    std::string canon_a, canon_b;
    bool equal_xb = false;
    bool triangle_a = false, triangle_b = false;
    bool connected_a = false, connected_b = false;
};

struct CensusCounts {
    long long input_lines = 0;
    long long parsed = 0;
    long long skipped_lines = 0;
    long long graph_classes = 0;
    long long connected_classes = 0;
    long long equal_x_pairs_all = 0;
    long long equal_x_pairs_connected = 0;  // both sides connected
    long long equal_xb_pairs_all = 0;
    long long equal_xb_pairs_connected = 0;
    long long triangle_free_flags = 0;
    long long verification_failures = 0;
    long long cache_hits = 0;
};

struct CensusReport {
    std::vector<CensusPair> pairs;
    std::vector<CensusSkip> skips;
    std::vector<std::string> flags;  // equal-X pairs involving a triangle-free graph
    CensusCounts counts;
    double elapsed_seconds = 0;  // reporting only, never serialized
};

struct CensusOptions {
    int jobs = 1;
    std::string cache_path;  // empty disables the persistent cache
    bool verify = true;      // re-check reported pairs with the subset expansion
};

// On-disk cache: one line per entry, "hex(canonical_key) TAB xb-serialization".
using XbCache = std::unordered_map<std::string, std::string>;

namespace detail {

inline std::string to_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out += digits[c >> 4];
        out += digits[c & 15];
    }
    return out;
}

inline bool from_hex(const std::string& hex, std::string& out) {
    if (hex.size() % 2) return false;
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        return -1;
    };
    out.clear();
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) return false;
        out += static_cast<char>((hi << 4) | lo);
    }
    return true;
}

}  // namespace detail

// Loads a cache file. Duplicate keys keep the first entry; a corrupt or
// truncated trailing line is dropped silently (interrupted-write recovery);
// an unreadable file yields an empty cache with warning set.
inline XbCache cache_load(const std::string& path, std::string* warning = nullptr) {
    XbCache cache;
    std::error_code ec;
    bool exists = std::filesystem::exists(path, ec);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        // a missing file is the normal cold start; only an existing but
        // unopenable file warrants a warning
        if (exists && warning) *warning = "cache file unreadable, starting empty: " + path;
        return cache;
    }
    std::string line;
    while (std::getline(in, line)) {
        auto tab = line.find('\t');
        std::string key;
        bool ok = tab != std::string::npos && detail::from_hex(line.substr(0, tab), key);
        if (ok) {
            try {
                PPoly::parse(line.substr(tab + 1));
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok) {
            if (in.peek() != EOF && warning)
                *warning = "cache file has a corrupt non-trailing line: " + path;
            break;
        }
        cache.try_emplace(std::move(key), line.substr(tab + 1));
    }
    return cache;
}

// Appends entries not already present in `existing`, one writer only.
inline void cache_store(const std::string& path, const XbCache& existing,
                        const std::vector<std::pair<std::string, std::string>>& fresh) {
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw std::runtime_error("cache_store: cannot open " + path);
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [key, val] : fresh)
        if (!existing.count(key)) rows.emplace_back(key, val);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    for (const auto& [key, val] : rows) out << detail::to_hex(key) << '\t' << val << '\n';
}

// XB computed once per graph (deletion-contraction through the engine, or a
// cache hit); the X fingerprint is always the t = -1 substitution of that
// value.
inline CensusRecord fingerprint(const VWGraph& g, DelconEngine& engine,
                                const XbCache* cache = nullptr, bool* cache_hit = nullptr) {
    CensusRecord rec;
    rec.canonical_key = canonical_form(g, std::max(g.num_vertices(), kDefaultCanonicalBound));
    rec.nvertices = g.num_vertices();
    rec.nedges = g.num_edges();
    rec.has_triangle = has_triangle(g);
    rec.connected = is_connected(g);
    PPoly xb;
    if (cache) {
        if (auto it = cache->find(rec.canonical_key); it != cache->end()) {
            xb = PPoly::parse(it->second);
            if (cache_hit) *cache_hit = true;
        } else {
            xb = engine.xb(g);
        }
    } else {
        xb = engine.xb(g);
    }
    rec.xb_fingerprint = xb.serialize();
    rec.x_fingerprint = xb.substitute_t(Int(-1)).serialize();
    return rec;
}

// Full census over graph6 lines: fingerprint every graph, group equal-X
// classes, list nonisomorphic pairs, and flag any equal-X pair touching a
// triangle-free graph. The report is deterministic: it depends only on the
// multiset of parseable lines, not their order or the worker count.
inline CensusReport census(const std::vector<std::string>& lines, const CensusOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    CensusReport report;
    report.counts.input_lines = static_cast<long long>(lines.size());

    XbCache cache;
    if (!opts.cache_path.empty()) {
        std::string warning;
        cache = cache_load(opts.cache_path, &warning);
        if (!warning.empty()) report.flags.push_back(warning);
    }

    struct Slot {
        bool ok = false;
        VWGraph graph;
        CensusRecord rec;
        std::string error;
        bool hit = false;
    };
    std::vector<Slot> slots(lines.size());

    for (std::size_t i = 0; i < lines.size(); ++i) {
        try {
            slots[i].graph = parse_graph6(lines[i]);
            slots[i].ok = true;
        } catch (const std::exception& e) {
            slots[i].error = e.what();
        }
    }

    int jobs = std::max(1, opts.jobs);
    {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            DelconEngine engine;
            for (std::size_t i = next.fetch_add(1); i < slots.size(); i = next.fetch_add(1)) {
                if (!slots[i].ok) continue;
                slots[i].rec = fingerprint(slots[i].graph, engine,
                                           cache.empty() ? nullptr : &cache, &slots[i].hit);
                slots[i].rec.graph6 = lines[i];
            }
        };
        std::vector<std::thread> pool;
        for (int w = 1; w < jobs; ++w) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
    }

    // dedupe isomorphic duplicates: smallest graph6 string represents a class
    std::map<std::string, CensusRecord> classes;  // canonical key -> representative
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i].ok) {
            report.skips.push_back({i + 1, slots[i].error});
            ++report.counts.skipped_lines;
            continue;
        }
        ++report.counts.parsed;
        if (slots[i].hit) ++report.counts.cache_hits;
        const CensusRecord& rec = slots[i].rec;
        auto [it, inserted] = classes.try_emplace(rec.canonical_key, rec);
        if (!inserted && rec.graph6 < it->second.graph6) it->second = rec;
    }
    report.counts.graph_classes = static_cast<long long>(classes.size());
    for (const auto& [key, rec] : classes)
        if (rec.connected) ++report.counts.connected_classes;

    // group by X fingerprint: 64-bit hash buckets with exact byte-equality
    // inside each bucket (unordered_map semantics)
    std::unordered_map<std::string, std::vector<const CensusRecord*>> groups;
    for (const auto& [key, rec] : classes) groups[rec.x_fingerprint].push_back(&rec);

    for (auto& [fp, members] : groups) {
        if (members.size() < 2) continue;
        std::sort(members.begin(), members.end(),
                  [](const CensusRecord* a, const CensusRecord* b) {
                      return a->canonical_key < b->canonical_key;
                  });
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const CensusRecord *a = members[i], *b = members[j];
                CensusPair pair;
                pair.g6_a = a->graph6;
                pair.g6_b = b->graph6;
                pair.canon_a = a->canonical_key;
                pair.canon_b = b->canonical_key;
                pair.equal_xb = a->xb_fingerprint == b->xb_fingerprint;
                pair.triangle_a = a->has_triangle;
                pair.triangle_b = b->has_triangle;
                pair.connected_a = a->connected;
                pair.connected_b = b->connected;
                report.pairs.push_back(std::move(pair));
            }
        }
    }
    std::sort(report.pairs.begin(), report.pairs.end(),
              [](const CensusPair& a, const CensusPair& b) {
                  return std::tie(a.canon_a, a.canon_b) < std::tie(b.canon_a, b.canon_b);
              });

    for (const auto& pair : report.pairs) {
        ++report.counts.equal_x_pairs_all;
        if (pair.connected_a && pair.connected_b) ++report.counts.equal_x_pairs_connected;
        if (pair.equal_xb) {
            ++report.counts.equal_xb_pairs_all;
            if (pair.connected_a && pair.connected_b) ++report.counts.equal_xb_pairs_connected;
        }
        if (!pair.triangle_a || !pair.triangle_b) {
            ++report.counts.triangle_free_flags;
            report.flags.push_back("triangle-free graph in equal-X pair: " + pair.g6_a +
                                   " / " + pair.g6_b);
        }
    }

    // verification pass: recompute X for every paired graph by the subset
    // expansion, an algorithm independent of the deletion-contraction used
    // for the fingerprints
    if (opts.verify && !report.pairs.empty()) {
        std::map<std::string, std::string> paired;  // g6 -> expected x fingerprint
        for (const auto& pair : report.pairs) {
            paired.emplace(pair.g6_a, std::string());
            paired.emplace(pair.g6_b, std::string());
        }
        for (const auto& [key, rec] : classes) {
            auto it = paired.find(rec.graph6);
            if (it != paired.end()) it->second = rec.x_fingerprint;
        }
        std::vector<std::pair<std::string, std::string>> work(paired.begin(), paired.end());
        std::atomic<std::size_t> next{0};
        std::atomic<long long> failures{0};
        auto verifier = [&]() {
            for (std::size_t i = next.fetch_add(1); i < work.size(); i = next.fetch_add(1)) {
                PPoly x = xb_subset(parse_graph6(work[i].first)).substitute_t(Int(-1));
                if (x.serialize() != work[i].second) ++failures;
            }
        };
        std::vector<std::thread> pool;
        for (int w = 1; w < jobs; ++w) pool.emplace_back(verifier);
        verifier();
        for (auto& th : pool) th.join();
        report.counts.verification_failures = failures;
    }

    if (!opts.cache_path.empty()) {
        std::vector<std::pair<std::string, std::string>> fresh;
        for (const auto& [key, rec] : classes) fresh.emplace_back(key, rec.xb_fingerprint);
        cache_store(opts.cache_path, cache, fresh);
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline nlohmann::ordered_json census_report_json(const CensusReport& report) {
    nlohmann::ordered_json j;
    j["pairs"] = nlohmann::ordered_json::array();
    for (const auto& pair : report.pairs) {
        j["pairs"].push_back({{"g6_a", pair.g6_a},
                              {"g6_b", pair.g6_b},
                              {"equal_xb", pair.equal_xb},
                              {"triangles", {pair.triangle_a, pair.triangle_b}},
                              {"connected", {pair.connected_a, pair.connected_b}}});
    }
    const CensusCounts& c = report.counts;
    j["counts"] = {{"input_lines", c.input_lines},
                   {"parsed", c.parsed},
                   {"skipped_lines", c.skipped_lines},
                   {"graph_classes", c.graph_classes},
                   {"connected_classes", c.connected_classes},
                   {"equal_x_pairs_all", c.equal_x_pairs_all},
                   {"equal_x_pairs_connected", c.equal_x_pairs_connected},
                   {"equal_xb_pairs_all", c.equal_xb_pairs_all},
                   {"equal_xb_pairs_connected", c.equal_xb_pairs_connected},
                   {"triangle_free_flags", c.triangle_free_flags},
                   {"verification_failures", c.verification_failures}};
    j["flags"] = report.flags;
    j["skips"] = nlohmann::ordered_json::array();
    for (const auto& skip : report.skips)
        j["skips"].push_back({{"line", skip.line_number}, {"reason", skip.reason}});
    return j;
}

inline std::string census_summary(const CensusReport& report) {
    const CensusCounts& c = report.counts;
    std::ostringstream out;
    out << "census: " << c.parsed << "/" << c.input_lines << " lines parsed, "
        << c.graph_classes << " graph classes (" << c.connected_classes << " connected)\n";
    out << "equal-X nonisomorphic pairs: " << c.equal_x_pairs_all << " over all graphs, "
        << c.equal_x_pairs_connected << " with both sides connected\n";
    out << "equal-XB pairs: " << c.equal_xb_pairs_all << " over all graphs, "
        << c.equal_xb_pairs_connected << " with both sides connected\n";
    out << "triangle-free flags: " << c.triangle_free_flags << "\n";
    if (c.skipped_lines) {
        out << "skipped lines:";
        for (const auto& skip : report.skips) out << " " << skip.line_number;
        out << "\n";
    }
    if (c.verification_failures) out << "VERIFICATION FAILURES: " << c.verification_failures << "\n";
    out << "elapsed: " << report.elapsed_seconds << "s\n";
    return out.str();
}

}  // namespace xbtool
