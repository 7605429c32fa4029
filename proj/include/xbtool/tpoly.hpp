#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "xbtool/bigint.hpp"

namespace xbtool {

// Dense univariate polynomial in t with arbitrary-precision integer
// coefficients. Normalized: no trailing zero coefficient; the zero
// polynomial has an empty coefficient list.
class TPoly {
public:
    TPoly() = default;

    explicit TPoly(Int constant) {
        if (constant != 0) c_.push_back(std::move(constant));
    }

    explicit TPoly(long long constant) : TPoly(Int(constant)) {}

    static TPoly from_coeffs(std::vector<Int> coeffs) {
        TPoly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    // coeff * t^k
    static TPoly monomial(std::size_t k, Int coeff = Int(1)) {
        TPoly p;
        if (coeff != 0) {
            p.c_.assign(k + 1, Int(0));
            p.c_[k] = std::move(coeff);
        }
        return p;
    }

    static TPoly t() { return monomial(1); }
    static TPoly one() { return TPoly(Int(1)); }

    // (1+t)^k
    static TPoly one_plus_t_pow(std::size_t k) {
        TPoly base = from_coeffs({Int(1), Int(1)});
        return base.pow(k);
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const std::vector<Int>& coeffs() const { return c_; }

    TPoly& operator+=(const TPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    TPoly& operator-=(const TPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }

    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        if (a.is_zero() || b.is_zero()) return TPoly();
        TPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        r.trim();
        return r;
    }

    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

    TPoly operator-() const {
        TPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    TPoly pow(std::size_t k) const {
        TPoly result = one();
        TPoly base = *this;
        while (k > 0) {
            if (k & 1) result *= base;
            if (k >>= 1) base *= base;
        }
        return result;
    }

    bool operator==(const TPoly& o) const { return c_ == o.c_; }
    bool operator!=(const TPoly& o) const { return c_ != o.c_; }

    Rat eval(const Rat& t_val) const {
        Rat acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t_val + Rat(c_[i]);
        return acc;
    }

    Int eval_int(const Int& t_val) const {
        Int acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t_val + c_[i];
        return acc;
    }

    // Comma-separated coefficients from t^0 upward; zero polynomial is "0".
    std::string serialize() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ',';
            s += c_[i].str();
        }
        return s;
    }

    static TPoly parse(const std::string& s) {
        if (s == "0") return TPoly();
        std::vector<Int> coeffs;
        std::size_t start = 0;
        while (start <= s.size()) {
            auto comma = s.find(',', start);
            std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
            if (tok.empty()) throw std::invalid_argument("TPoly::parse: empty coefficient");
            coeffs.emplace_back(tok);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return from_coeffs(std::move(coeffs));
    }

    // "3t^2+t^3" style: terms by ascending degree, no spaces.
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Int a = c_[i];
            if (!first) {
                s += (a < 0) ? "-" : "+";
                if (a < 0) a = -a;
            } else if (a < 0) {
                s += "-";
                a = -a;
            }
            first = false;
            if (i == 0) {
                s += a.str();
            } else {
                if (a != 1) s += a.str();
                s += "t";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

    // True when the polynomial is c*t^k for a single k.
    bool is_monomial() const {
        int nz = 0;
        for (const auto& c : c_)
            if (c != 0) ++nz;
        return nz == 1;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

}  // namespace xbtool
