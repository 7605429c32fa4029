#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace xbtool {

// Integer partition: weakly decreasing tuple of positive integers.
// The empty partition (no parts) is allowed and indexes the constant 1.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
        for (long long p : parts_) {
            if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
        }
        std::sort(parts_.rbegin(), parts_.rend());
    }

    static Partition single(long long part) { return Partition(std::vector<long long>{part}); }

    const std::vector<long long>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    long long weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    // Merge of two sorted part lists; corresponds to p_a * p_b.
    static Partition concat(const Partition& a, const Partition& b) {
        Partition r;
        r.parts_.resize(a.parts_.size() + b.parts_.size());
        std::merge(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
                   r.parts_.begin(), std::greater<long long>());
        return r;
    }

    Partition with_part(long long part) const {
        Partition r = *this;
        auto pos = std::lower_bound(r.parts_.begin(), r.parts_.end(), part,
                                    std::greater<long long>());
        r.parts_.insert(pos, part);
        return r;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

private:
    std::vector<long long> parts_;
};

// Serialization order for p-basis keys: grade by |lambda| ascending, and
// within a grade list the lexicographically larger part sequence first,
// i.e. (3) before (2,1) before (1,1,1).
struct PartitionRevlexLess {
    bool operator()(const Partition& a, const Partition& b) const {
        long long wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                            a.parts().begin(), a.parts().end());
    }
};

// Reading order for rendered output: same grading, smaller sequences first,
// so a graph invariant prints as p[1,1,1] + ... + p[3].
struct PartitionLexLess {
    bool operator()(const Partition& a, const Partition& b) const {
        long long wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                            b.parts().begin(), b.parts().end());
    }
};

}  // namespace xbtool
