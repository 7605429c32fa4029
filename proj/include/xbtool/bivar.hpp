#pragma once

#include <map>
#include <string>
#include <utility>

#include "xbtool/bigint.hpp"

namespace xbtool {

// Exact bivariate integer polynomial, used for the Tutte polynomial
// T_G(x,y). Sparse map from exponent pair (i,j) to coefficient; zero
// entries are never stored.
class BivarPoly {
public:
    using Key = std::pair<int, int>;

    BivarPoly() = default;

    static BivarPoly constant(Int c) { return monomial(0, 0, std::move(c)); }
    static BivarPoly one() { return constant(Int(1)); }
    static BivarPoly x() { return monomial(1, 0, Int(1)); }
    static BivarPoly y() { return monomial(0, 1, Int(1)); }

    static BivarPoly monomial(int i, int j, Int c) {
        BivarPoly p;
        if (c != 0) p.terms_.emplace(Key{i, j}, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Int>& terms() const { return terms_; }

    Int coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(int i, int j, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(Key{i, j}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BivarPoly& operator+=(const BivarPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }

    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }

    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }

    BivarPoly& operator*=(const BivarPoly& o) { return *this = *this * o; }

    bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BivarPoly& o) const { return terms_ != o.terms_; }

    Rat eval(const Rat& xv, const Rat& yv) const {
        Rat total = 0;
        for (const auto& [k, c] : terms_)
            total += Rat(c) * rat_pow(xv, k.first) * rat_pow(yv, k.second);
        return total;
    }

    // "x^2 + x + y": total degree descending, then x-power descending.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Key, Int>> order(terms_.begin(), terms_.end());
        std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
            int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
            if (da != db) return da > db;
            return a.first.first > b.first.first;
        });
        std::string s;
        bool first = true;
        for (const auto& [k, c] : order) {
            Int a = c;
            if (first) {
                if (a < 0) {
                    s += "-";
                    a = -a;
                }
            } else {
                s += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            std::string mono;
            if (k.first > 0) mono += "x" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
            if (k.second > 0) {
                if (!mono.empty()) mono += " ";
                mono += "y" + (k.second > 1 ? "^" + std::to_string(k.second) : "");
            }
            if (mono.empty()) {
                s += a.str();
            } else {
                if (a != 1) s += a.str() + " ";
                s += mono;
            }
        }
        return s;
    }

private:
    std::map<Key, Int> terms_;
};

}  // namespace xbtool
