#ifndef INTERTWINE_PARTITIONS_HPP
#define INTERTWINE_PARTITIONS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "intertwine/error.hpp"

namespace intertwine {

/// Weakly decreasing positive parts; zero parts are dropped on construction.
class Partition {
public:
    Partition() = default;
    /// Throws Parse if the parts are not weakly decreasing or are negative.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw Error(Errc::Parse, "partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw Error(Errc::Parse, "partition parts must be weakly decreasing");
        }
    }
    /// Sorts arbitrary positive parts into a partition.
    static Partition from_unsorted(std::vector<int> parts) {
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }
    /// (1, 1, ..., 1) with n ones.
    static Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    /// i-th part, 1-based; 0 past the end.
    int part(std::size_t i) const noexcept { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    friend bool operator==(const Partition&, const Partition&) = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

/// lambda'_i = #{j : lambda_j >= i}.
inline Partition conjugate(const Partition& lambda) {
    std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
    for (int part : lambda.parts())
        for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
    return Partition(std::move(out));
}

/// sum_{i=1}^{m} prod_j (p_j)'_i with m the smallest first part.
inline std::int64_t conjprod(std::span<const Partition> ps) {
    if (ps.empty()) throw Error(Errc::EmptyList, "conjprod of no partitions");
    int m = ps.front().largest();
    for (const auto& p : ps) m = std::min(m, p.largest());
    std::vector<Partition> conj;
    conj.reserve(ps.size());
    for (const auto& p : ps) conj.push_back(conjugate(p));
    std::int64_t total = 0;
    for (int i = 1; i <= m; ++i) {
        std::int64_t prod = 1;
        for (const auto& c : conj) prod *= c.part(static_cast<std::size_t>(i));
        total += prod;
    }
    return total;
}

/// Sum over every choice of one part from each partition of the smallest
/// chosen part. Evaluated through the conjugate single sum, which equals it.
inline std::int64_t minsum(std::span<const Partition> ps) {
    if (ps.empty()) throw Error(Errc::EmptyList, "minsum of no partitions");
    return conjprod(ps);
}

/// dim C(N_lambda, N_mu).
inline std::int64_t nilpotent_pair_dim(const Partition& lambda, const Partition& mu) {
    const Partition pair[] = {lambda, mu};
    return minsum(pair);
}

}  // namespace intertwine

#endif  // INTERTWINE_PARTITIONS_HPP
