#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xbtool/bigint.hpp"
#include "xbtool/partition.hpp"
#include "xbtool/tpoly.hpp"

namespace xbtool {

// Element of the power-sum basis module: a finite sum of terms c_lambda(t) *
// p_lambda with c_lambda in Z[t]. Entries with zero coefficient are never
// stored. Invariants of a vertex-weighted graph are homogeneous: every key
// has |lambda| equal to the graph's total weight.
class PPoly {
public:
    using TermMap = std::map<Partition, TPoly, PartitionRevlexLess>;

    PPoly() = default;

    static PPoly zero() { return PPoly(); }

    static PPoly one() { return monomial(Partition(), TPoly::one()); }

    static PPoly monomial(Partition key, TPoly coeff) {
        PPoly p;
        if (!coeff.is_zero()) p.terms_.emplace(std::move(key), std::move(coeff));
        return p;
    }

    static PPoly p(Partition key) { return monomial(std::move(key), TPoly::one()); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    TPoly coeff(const Partition& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? TPoly() : it->second;
    }

    void add_term(const Partition& key, const TPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    PPoly& operator+=(const PPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }

    PPoly& operator-=(const PPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }

    friend PPoly operator+(PPoly a, const PPoly& b) { return a += b; }
    friend PPoly operator-(PPoly a, const PPoly& b) { return a -= b; }

    // p_lambda * p_mu = p_{sort(lambda ++ mu)}
    friend PPoly operator*(const PPoly& a, const PPoly& b) {
        PPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(Partition::concat(ka, kb), ca * cb);
        return r;
    }

    PPoly& operator*=(const PPoly& o) { return *this = *this * o; }

    PPoly scaled(const TPoly& c) const {
        PPoly r;
        if (c.is_zero()) return r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
        return r;
    }

    PPoly operator-() const {
        PPoly r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
        return r;
    }

    bool operator==(const PPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const PPoly& o) const { return terms_ != o.terms_; }

    // omega(p_lambda) = (-1)^(|lambda| - l(lambda)) p_lambda; an involution.
    PPoly omega() const {
        PPoly r;
        for (const auto& [k, v] : terms_) {
            bool flip = ((k.weight() - static_cast<long long>(k.length())) % 2) != 0;
            r.terms_.emplace(k, flip ? -v : v);
        }
        return r;
    }

    // Substitute a fixed integer for t; coefficients collapse to constants.
    PPoly substitute_t(const Int& t_val) const {
        PPoly r;
        for (const auto& [k, v] : terms_) {
            Int c = v.eval_int(t_val);
            if (c != 0) r.terms_.emplace(k, TPoly(c));
        }
        return r;
    }

    // Exact evaluation with p_k(xs) = sum_i xs[i]^k; variables beyond the
    // list are zero.
    Rat evaluate(const Rat& t_val, std::span<const Rat> xs) const {
        std::map<long long, Rat> psum;
        auto power_sum = [&](long long k) -> const Rat& {
            auto it = psum.find(k);
            if (it != psum.end()) return it->second;
            Rat s = 0;
            for (const auto& x : xs) s += rat_pow(x, k);
            return psum.emplace(k, std::move(s)).first->second;
        };
        Rat total = 0;
        for (const auto& [key, c] : terms_) {
            Rat term = c.eval(t_val);
            if (term == 0) continue;
            for (long long part : key.parts()) {
                term *= power_sum(part);
                if (term == 0) break;
            }
            total += term;
        }
        return total;
    }

    // Canonical byte serialization: keys in graded reverse-lexicographic
    // order ((3) before (2,1) before (1,1,1) within a grade), each term as
    // "[parts]=coeffs". The zero polynomial is the sentinel "0". Equal
    // values serialize to equal bytes; census fingerprints and the on-disk
    // cache depend on this form staying stable.
    std::string serialize() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [k, v] : terms_) {
            if (!first) s += ';';
            first = false;
            s += '[';
            s += k.to_string();
            s += "]=";
            s += v.serialize();
        }
        return s;
    }

    static PPoly parse(const std::string& s) {
        PPoly r;
        if (s == "0") return r;
        std::size_t pos = 0;
        while (pos < s.size()) {
            if (s[pos] != '[') throw std::invalid_argument("PPoly::parse: expected '['");
            auto close = s.find("]=", pos);
            if (close == std::string::npos)
                throw std::invalid_argument("PPoly::parse: missing ']='");
            std::string parts_str = s.substr(pos + 1, close - pos - 1);
            auto semi = s.find(';', close);
            std::string coeff_str =
                s.substr(close + 2, semi == std::string::npos ? std::string::npos
                                                              : semi - close - 2);
            std::vector<long long> parts;
            std::size_t start = 0;
            while (start < parts_str.size()) {
                auto comma = parts_str.find(',', start);
                std::string tok = parts_str.substr(
                    start, comma == std::string::npos ? std::string::npos : comma - start);
                parts.push_back(std::stoll(tok));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            TPoly c = TPoly::parse(coeff_str);
            if (c.is_zero()) throw std::invalid_argument("PPoly::parse: zero term");
            auto [it, inserted] = r.terms_.emplace(Partition(std::move(parts)), std::move(c));
            if (!inserted) throw std::invalid_argument("PPoly::parse: duplicate key");
            if (semi == std::string::npos) break;
            pos = semi + 1;
        }
        return r;
    }

    // Human-readable form, keys in reading order:
    // "p[1,1,1] + 3t p[2,1] + (3t^2+t^3) p[3]".
    std::string render() const {
        if (terms_.empty()) return "0";
        std::vector<const std::pair<const Partition, TPoly>*> order;
        order.reserve(terms_.size());
        for (const auto& kv : terms_) order.push_back(&kv);
        PartitionLexLess less;
        std::sort(order.begin(), order.end(),
                  [&](auto* a, auto* b) { return less(a->first, b->first); });
        std::string s;
        bool first = true;
        for (const auto* kv : order) {
            const auto& [key, c] = *kv;
            std::string cs = c.to_string();
            bool negated = false;
            if (c.is_monomial() && cs[0] == '-') {
                negated = true;
                cs = cs.substr(1);
            }
            if (first) {
                if (negated) s += "-";
            } else {
                s += negated ? " - " : " + ";
            }
            first = false;
            std::string pname =
                key.empty() ? std::string() : "p[" + key.to_string() + "]";
            if (pname.empty()) {
                s += c.is_monomial() ? cs : "(" + cs + ")";
            } else if (cs == "1") {
                s += pname;
            } else if (c.is_monomial()) {
                s += cs + " " + pname;
            } else {
                s += "(" + cs + ") " + pname;
            }
        }
        return s;
    }

    // True when every key weight equals w (homogeneity check).
    bool homogeneous_of_weight(long long w) const {
        for (const auto& [k, v] : terms_) {
            (void)v;
            if (k.weight() != w) return false;
        }
        return true;
    }

private:
    TermMap terms_;
};

}  // namespace xbtool
