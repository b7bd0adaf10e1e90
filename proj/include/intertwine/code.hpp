#ifndef INTERTWINE_CODE_HPP
#define INTERTWINE_CODE_HPP

/// Intertwining codes C(As, Bs) = { X : A_i X = X B_i for all i } viewed as
/// linear codes of length r*s under the row-major vectorization of X.

#include <algorithm>
#include <cstdint>
#include <future>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "intertwine/canonical.hpp"
#include "intertwine/error.hpp"
#include "intertwine/matrix.hpp"
#include "intertwine/partitions.hpp"
#include "intertwine/poly.hpp"

namespace intertwine {

inline constexpr std::uint64_t kDefaultDistanceBudget = std::uint64_t{1} << 24;

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational reduced(std::int64_t n, std::int64_t d) {
        const std::int64_t g = std::gcd(n, d);
        return g == 0 ? Rational{0, 1} : Rational{n / g, d / g};
    }
    friend bool operator==(const Rational&, const Rational&) = default;
};

struct CodeParams {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t d = 0;
    Rational rate;
};

/// A subspace of F^{r x s} held in canonical form: the basis vectorizes to a
/// matrix in reduced row echelon form, so equal codes have equal bases.
class IntertwiningCode {
public:
    IntertwiningCode(Field f, std::size_t r, std::size_t s) : f_(std::move(f)), r_(r), s_(s) {}

    /// Canonical code spanned by `generators` (any spanning set of r x s matrices).
    static IntertwiningCode span_of(const Field& f, std::size_t r, std::size_t s, const std::vector<Matrix>& generators) {
        IntertwiningCode c(f, r, s);
        const std::size_t n = r * s;
        if (generators.empty() || n == 0) return c;
        Matrix stacked(f, generators.size(), n);
        for (std::size_t g = 0; g < generators.size(); ++g) {
            const Matrix& x = generators[g];
            if (x.field() != f) throw Error(Errc::FieldMismatch, x.field().name() + " vs " + f.name());
            if (x.rows() != r || x.cols() != s) throw Error(Errc::SizeMismatch, "generator is " + x.shape());
            for (std::size_t i = 0; i < n; ++i) stacked.set(g, i, x.entries()[i]);
        }
        const RrefResult rr = mat_rref(std::move(stacked));
        for (std::size_t i = 0; i < rr.rank; ++i) c.basis_.emplace_back(f, r, s, rr.rref.row_vec(i));
        return c;
    }

    const Field& field() const noexcept { return f_; }
    std::size_t r() const noexcept { return r_; }
    std::size_t s() const noexcept { return s_; }
    std::size_t n() const noexcept { return r_ * s_; }
    std::size_t k() const noexcept { return basis_.size(); }
    const std::vector<Matrix>& basis() const noexcept { return basis_; }

    const std::optional<std::uint64_t>& distance() const noexcept { return d_; }
    const std::optional<std::uint64_t>& distance_budget() const noexcept { return d_budget_; }
    void set_distance(std::uint64_t d, std::uint64_t budget) {
        d_ = d;
        d_budget_ = budget;
    }

    /// Requires a computed distance.
    CodeParams params() const {
        if (!d_) throw Error(Errc::ZeroCode, "minimum distance has not been computed");
        return {n(), k(), *d_, Rational::reduced(static_cast<std::int64_t>(k()), static_cast<std::int64_t>(n()))};
    }

    bool contains(const Matrix& x) const {
        std::vector<Matrix> gens = basis_;
        gens.push_back(x);
        return span_of(f_, r_, s_, gens).k() == k();
    }

    /// { X^T : X in C }, a code in F^{s x r}.
    IntertwiningCode transpose() const {
        std::vector<Matrix> t;
        for (const auto& x : basis_) t.push_back(x.transpose());
        return span_of(f_, s_, r_, t);
    }

    /// Same subspace; cached distances are not compared.
    friend bool operator==(const IntertwiningCode& a, const IntertwiningCode& b) {
        return a.f_ == b.f_ && a.r_ == b.r_ && a.s_ == b.s_ && a.basis_ == b.basis_;
    }

private:
    Field f_;
    std::size_t r_ = 0;
    std::size_t s_ = 0;
    std::vector<Matrix> basis_;
    std::optional<std::uint64_t> d_;
    std::optional<std::uint64_t> d_budget_;
};

namespace detail {

inline void check_pairs(std::span<const Matrix> as, std::span<const Matrix> bs) {
    if (as.size() != bs.size() || as.empty())
        throw Error(Errc::LengthMismatch, "need equally many A and B matrices, at least one");
    const Field& f = as.front().field();
    const std::size_t r = as.front().rows(), s = bs.front().rows();
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (as[i].field() != f || bs[i].field() != f) throw Error(Errc::FieldMismatch, "matrices over different fields");
        if (as[i].rows() != r || as[i].cols() != r) throw Error(Errc::SizeMismatch, "A_" + std::to_string(i) + " is " + as[i].shape());
        if (bs[i].rows() != s || bs[i].cols() != s) throw Error(Errc::SizeMismatch, "B_" + std::to_string(i) + " is " + bs[i].shape());
    }
}

inline void check_pair(const Matrix& a, const Matrix& b) {
    require_square(a, "A");
    require_square(b, "B");
    check_field(a, b);
}

}  // namespace detail

/// Kernel oracle: solves A_i X - X B_i = 0 for the r*s entries of X by
/// elimination and returns the canonical basis.
inline IntertwiningCode intertwiner_basis(std::span<const Matrix> as, std::span<const Matrix> bs) {
    detail::check_pairs(as, bs);
    const Field& f = as.front().field();
    const std::size_t r = as.front().rows(), s = bs.front().rows(), n = r * s;
    Matrix system(f, as.size() * n, n);
    for (std::size_t p = 0; p < as.size(); ++p) {
        const Matrix& a = as[p];
        const Matrix& b = bs[p];
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < s; ++j) {
                const std::size_t eq = p * n + i * s + j;
                // (A X)_{ij} = sum_l A_{il} x_{lj}
                for (std::size_t l = 0; l < r; ++l) system.set(eq, l * s + j, f.add(system.at(eq, l * s + j), a.at(i, l)));
                // (X B)_{ij} = sum_l x_{il} B_{lj}
                for (std::size_t l = 0; l < s; ++l) system.set(eq, i * s + l, f.sub(system.at(eq, i * s + l), b.at(l, j)));
            }
        }
    }
    std::vector<Matrix> gens;
    for (const Matrix& v : mat_nullspace(system)) gens.emplace_back(f, r, s, v.entries());
    return IntertwiningCode::span_of(f, r, s, gens);
}

inline IntertwiningCode intertwiner_basis(const Matrix& a, const Matrix& b) {
    return intertwiner_basis(std::span<const Matrix>(&a, 1), std::span<const Matrix>(&b, 1));
}

struct FactorContribution {
    Polynomial irr;
    unsigned deg = 0;
    Partition lambda;
    Partition mu;
    std::int64_t contribution = 0;
};

struct FormulaDimension {
    std::int64_t dim = 0;
    std::vector<FactorContribution> factors;
};

/// dim C(A, B) = sum over irreducibles p shared by c_A and c_B of
/// deg(p) * sum_i lambda'_i mu'_i.
inline FormulaDimension dim_via_formula(const Matrix& a, const Matrix& b, std::uint64_t rng_seed = 0) {
    detail::check_pair(a, b);
    const PrimaryDecomposition da = primary_decomposition(a, rng_seed);
    const PrimaryDecomposition db = primary_decomposition(b, rng_seed);
    FormulaDimension out;
    for (const auto& ca : da.components) {
        for (const auto& cb : db.components) {
            if (ca.irr != cb.irr) continue;
            const Partition pair[] = {ca.partition, cb.partition};
            const std::int64_t c = static_cast<std::int64_t>(ca.deg) * conjprod(pair);
            out.factors.push_back({ca.irr, ca.deg, ca.partition, cb.partition, c});
            out.dim += c;
        }
    }
    return out;
}

/// True iff gcd(c_A, c_B) = 1, which holds exactly when C(A, B) = 0.
inline bool is_zero_code_fast(const Matrix& a, const Matrix& b) {
    detail::check_pair(a, b);
    return poly_gcd(mat_charpoly(a), mat_charpoly(b)).is_one();
}

namespace detail {

/// Minimum weight over codewords with rank in [lo, hi), where the rank of
/// coefficient vector c is sum_j c_j q^j and c_j multiplies basis j.
inline std::size_t min_weight_range(const Field& f, const std::vector<Matrix>& basis, std::uint64_t lo, std::uint64_t hi) {
    const std::size_t k = basis.size();
    const std::size_t n = basis.front().entries().size();
    const std::uint64_t q = f.q();
    std::vector<elem_t> digits(k, 0);
    std::vector<elem_t> word(n, 0);
    std::uint64_t v = lo;
    for (std::size_t j = 0; j < k; ++j) {
        digits[j] = static_cast<elem_t>(v % q);
        v /= q;
        if (digits[j] == 0) continue;
        const auto& b = basis[j].entries();
        for (std::size_t i = 0; i < n; ++i) word[i] = f.add(word[i], f.mul(digits[j], b[i]));
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        std::size_t w = 0;
        for (elem_t x : word) w += x != 0;
        best = std::min(best, w);
        if (best <= 1) break;
        for (std::size_t j = 0; j < k; ++j) {
            const elem_t old = digits[j];
            const elem_t next = static_cast<elem_t>(old + 1 == q ? 0 : old + 1);
            const elem_t delta = f.sub(next, old);
            const auto& b = basis[j].entries();
            for (std::size_t i = 0; i < n; ++i)
                if (b[i] != 0) word[i] = f.add(word[i], f.mul(delta, b[i]));
            digits[j] = next;
            if (next != 0) break;
        }
    }
    return best;
}

/// q^k, or nullopt once it exceeds `cap`.
inline std::optional<std::uint64_t> bounded_power(std::uint64_t q, std::size_t k, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (v > cap / q) return std::nullopt;
        v *= q;
    }
    return v;
}

}  // namespace detail

/// Number of nonzero codewords, q^k - 1; BudgetExceeded if above `budget`.
inline std::uint64_t codeword_count(const IntertwiningCode& code, std::uint64_t budget) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    const auto total = detail::bounded_power(code.field().q(), code.k(), kMax);
    const std::uint64_t count = total ? *total - 1 : kMax;
    if (count > budget)
        throw Error(Errc::BudgetExceeded,
                    std::to_string(count) + " nonzero codewords exceed the budget of " + std::to_string(budget), count,
                    budget);
    return count;
}

/// Exhaustive minimum distance. Index ranges are searched concurrently and
/// min-reduced, so the result does not depend on scheduling.
inline std::uint64_t min_distance(const IntertwiningCode& code, std::uint64_t budget = kDefaultDistanceBudget) {
    if (code.k() == 0) throw Error(Errc::ZeroCode, "the zero code has no minimum distance");
    const std::uint64_t count = codeword_count(code, budget);
    const std::uint64_t end = count + 1;
    constexpr std::uint64_t kParallelThreshold = 1 << 15;
    const unsigned hw = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    if (count < kParallelThreshold || hw == 1)
        return detail::min_weight_range(code.field(), code.basis(), 1, end);
    std::vector<std::future<std::size_t>> parts;
    const std::uint64_t step = (count + hw - 1) / hw;
    for (std::uint64_t lo = 1; lo < end; lo += step) {
        const std::uint64_t hi = std::min(end, lo + step);
        parts.push_back(std::async(std::launch::async, [&code, lo, hi] {
            return detail::min_weight_range(code.field(), code.basis(), lo, hi);
        }));
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (auto& p : parts) best = std::min(best, p.get());
    return best;
}

struct DimensionBounds {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

/// (r - rk A)(s - rk B) <= dim <= (r - rk A)(s - rk B) + rk A * rk B.
inline DimensionBounds bounds_rank(const Matrix& a, const Matrix& b) {
    detail::check_pair(a, b);
    const auto r = static_cast<std::int64_t>(a.rows()), s = static_cast<std::int64_t>(b.rows());
    const auto ra = static_cast<std::int64_t>(mat_rank(a)), rb = static_cast<std::int64_t>(mat_rank(b));
    const std::int64_t lo = (r - ra) * (s - rb);
    return {lo, lo + ra * rb};
}

/// Eigenspace / generalized eigenspace bounds, with each irreducible p
/// standing for its deg(p) conjugate roots over the algebraic closure.
inline DimensionBounds bounds_spectral(const Matrix& a, const Matrix& b, std::uint64_t rng_seed = 0) {
    detail::check_pair(a, b);
    const auto sa = spectral_summary(a, rng_seed);
    const auto sb = spectral_summary(b, rng_seed);
    DimensionBounds out;
    for (const auto& x : sa) {
        for (const auto& y : sb) {
            if (x.irr != y.irr) continue;
            out.lo += static_cast<std::int64_t>(x.deg) * x.eigendim_per_root * y.eigendim_per_root;
            out.hi += static_cast<std::int64_t>(x.deg) * x.gendim_per_root * y.gendim_per_root;
        }
    }
    return out;
}

/// R^{-1} C S, re-canonicalized. Equals C(R^{-1} A R, S^{-1} B S) for C = C(A, B).
inline IntertwiningCode code_conjugate(const IntertwiningCode& code, const Matrix& r, const Matrix& s) {
    if (r.rows() != code.r() || r.cols() != code.r() || s.rows() != code.s() || s.cols() != code.s())
        throw Error(Errc::SizeMismatch, "conjugating matrices do not match the code shape");
    check_field(r, s);
    if (r.field() != code.field()) throw Error(Errc::FieldMismatch, "conjugators over a different field");
    const Matrix r_inv = mat_inverse(r);
    if (!mat_is_invertible(s)) throw Error(Errc::Singular, "S is singular");
    std::vector<Matrix> gens;
    for (const auto& x : code.basis()) gens.push_back(r_inv * x * s);
    return IntertwiningCode::span_of(code.field(), code.r(), code.s(), gens);
}

/// A_i X - X B_i for each pair; all zero iff X is a codeword.
inline std::vector<Matrix> syndrome(std::span<const Matrix> as, std::span<const Matrix> bs, const Matrix& x) {
    detail::check_pairs(as, bs);
    if (x.rows() != as.front().rows() || x.cols() != bs.front().rows())
        throw Error(Errc::SizeMismatch, "X is " + x.shape());
    check_field(x, as.front());
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < as.size(); ++i) out.push_back(as[i] * x - x * bs[i]);
    return out;
}

}  // namespace intertwine

#endif  // INTERTWINE_CODE_HPP
