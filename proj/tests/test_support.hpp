#ifndef INTERTWINE_TESTS_TEST_SUPPORT_HPP
#define INTERTWINE_TESTS_TEST_SUPPORT_HPP

// Random generators and independent brute-force oracles shared by the test
// binaries. Nothing here calls the routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <span>
#include <vector>

#include "intertwine/intertwine.hpp"

namespace intertwine::test_support {

using Rng = std::mt19937_64;

inline elem_t random_elem(const Field& f, Rng& rng) { return static_cast<elem_t>(rng() % f.q()); }

inline Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, Rng& rng) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, random_elem(f, rng));
    return m;
}

inline Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
    for (;;) {
        Matrix m = random_matrix(f, n, n, rng);
        if (mat_is_invertible(m)) return m;
    }
}

inline Polynomial random_poly(const Field& f, int max_deg, Rng& rng) {
    std::vector<elem_t> c(static_cast<std::size_t>(max_deg) + 1);
    for (auto& v : c) v = random_elem(f, rng);
    return Polynomial(f, std::move(c));
}

/// Random partition of n (n >= 0) by repeated random part sizes.
inline Partition random_partition(int n, Rng& rng) {
    std::vector<int> parts;
    while (n > 0) {
        const int part = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        parts.push_back(part);
        n -= part;
    }
    return Partition::from_unsorted(std::move(parts));
}

/// Monic irreducibles of degree d, found by brute-force root/trial division
/// over every monic polynomial of smaller degree.
inline bool irreducible_by_trial_division(const Polynomial& f) {
    const Field& F = f.field();
    const int n = f.degree();
    for (int d = 1; 2 * d <= n; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= F.q();
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<elem_t> c(static_cast<std::size_t>(d) + 1);
            std::uint64_t v = idx;
            for (int i = 0; i < d; ++i) {
                c[static_cast<std::size_t>(i)] = static_cast<elem_t>(v % F.q());
                v /= F.q();
            }
            c[static_cast<std::size_t>(d)] = 1;
            if ((f % Polynomial(F, c)).is_zero()) return false;
        }
    }
    return true;
}

inline std::vector<Polynomial> monic_irreducibles(const Field& f, int d) {
    std::vector<Polynomial> out;
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= f.q();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<elem_t> c(static_cast<std::size_t>(d) + 1);
        std::uint64_t v = idx;
        for (int i = 0; i < d; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<elem_t>(v % f.q());
            v /= f.q();
        }
        c[static_cast<std::size_t>(d)] = 1;
        Polynomial p(f, c);
        if (irreducible_by_trial_division(p)) out.push_back(p);
    }
    return out;
}

/// Random square matrix with nontrivial structure: a conjugated direct sum
/// of generalized Jordan blocks for small irreducibles drawn from `pool`,
/// padded with a uniformly random block. Sizes sum to n.
inline Matrix random_structured(const Field& f, std::size_t n, const std::vector<Polynomial>& pool, Rng& rng) {
    std::vector<Matrix> blocks;
    std::size_t used = 0;
    while (used < n) {
        const std::size_t left = n - used;
        if (rng() % 5 == 0) {
            const std::size_t sz = 1 + rng() % left;
            blocks.push_back(random_matrix(f, sz, sz, rng));
            used += sz;
            continue;
        }
        std::vector<Polynomial> fits;
        for (const auto& p : pool)
            if (static_cast<std::size_t>(p.degree()) <= left) fits.push_back(p);
        const Polynomial& p = fits[rng() % fits.size()];
        const int max_weight = static_cast<int>(left / static_cast<std::size_t>(p.degree()));
        const int weight = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_weight));
        blocks.push_back(generalized_jordan_matrix(p, random_partition(weight, rng)));
        used += static_cast<std::size_t>(p.degree()) * static_cast<std::size_t>(weight);
    }
    std::shuffle(blocks.begin(), blocks.end(), rng);
    const Matrix m = mat_direct_sum(f, blocks);
    const Matrix p = random_invertible(f, n, rng);
    return mat_inverse(p) * m * p;
}

/// A mix of uniform, structured, scalar and nilpotent matrices of size n.
inline Matrix random_test_matrix(const Field& f, std::size_t n, const std::vector<Polynomial>& pool, Rng& rng) {
    switch (rng() % 6) {
        case 0: return random_matrix(f, n, n, rng);
        case 1: return Matrix::scalar(f, n, random_elem(f, rng));
        case 2: {
            const Matrix p = random_invertible(f, n, rng);
            return mat_inverse(p) * nilpotent_matrix(f, random_partition(static_cast<int>(n), rng)) * p;
        }
        default: return random_structured(f, n, pool, rng);
    }
}

/// Literal multi-sum: sum over one part index per partition of the minimum
/// chosen part.
inline std::int64_t minsum_literal(std::span<const Partition> ps) {
    for (const auto& p : ps)
        if (p.empty()) return 0;
    std::int64_t total = 0;
    std::vector<std::size_t> idx(ps.size(), 0);
    for (;;) {
        int m = ps[0].parts()[idx[0]];
        for (std::size_t j = 1; j < ps.size(); ++j) m = std::min(m, ps[j].parts()[idx[j]]);
        total += m;
        std::size_t j = 0;
        while (j < ps.size() && ++idx[j] == ps[j].length()) idx[j++] = 0;
        if (j == ps.size()) return total;
    }
}

/// Counts X in F^{r x s} with A_i X = X B_i by enumerating all q^{rs}
/// matrices; only for tiny shapes.
inline std::uint64_t count_intertwiners_bruteforce(std::span<const Matrix> as, std::span<const Matrix> bs) {
    const Field& f = as.front().field();
    const std::size_t r = as.front().rows(), s = bs.front().rows(), n = r * s;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= f.q();
    std::uint64_t count = 0;
    std::vector<elem_t> e(n, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (auto& x : e) {
            x = static_cast<elem_t>(v % f.q());
            v /= f.q();
        }
        const Matrix x(f, r, s, e);
        bool ok = true;
        for (std::size_t i = 0; i < as.size() && ok; ++i) ok = as[i] * x == x * bs[i];
        count += ok;
    }
    return count;
}

/// dim of {X : A_i X = X B_i} from the rank of the stacked coefficient
/// matrix, assembled entry by entry with x_{ij} at column i*s + j.
inline std::size_t intertwiner_dim_linear_system(std::span<const Matrix> as, std::span<const Matrix> bs) {
    const Field& f = as.front().field();
    const std::size_t r = as.front().rows(), s = bs.front().rows(), n = r * s;
    std::vector<std::vector<elem_t>> rows;
    for (std::size_t t = 0; t < as.size(); ++t) {
        // (AX - XB)_{ij} = sum_l A_il x_lj - sum_l x_il B_lj
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < s; ++j) {
                std::vector<elem_t> row(n, 0);
                for (std::size_t l = 0; l < r; ++l) row[l * s + j] = f.add(row[l * s + j], as[t].at(i, l));
                for (std::size_t l = 0; l < s; ++l) row[i * s + l] = f.sub(row[i * s + l], bs[t].at(l, j));
                rows.push_back(std::move(row));
            }
    }
    if (rows.empty()) return n;
    return n - mat_rank(Matrix::from_rows(f, rows));
}

inline std::size_t intertwiner_dim_linear_system(const Matrix& a, const Matrix& b) {
    const Matrix as[] = {a};
    const Matrix bs[] = {b};
    return intertwiner_dim_linear_system(as, bs);
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < e; ++i) v *= b;
    return v;
}

/// Minimum weight by decoding every coefficient index from scratch.
inline std::uint64_t min_distance_bruteforce(const IntertwiningCode& code) {
    const Field& f = code.field();
    const std::uint64_t total = ipow(f.q(), code.k());
    std::uint64_t best = code.n() + 1;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        Matrix w(f, code.r(), code.s());
        std::uint64_t v = idx;
        for (const auto& b : code.basis()) {
            w = w + b.scaled(static_cast<elem_t>(v % f.q()));
            v /= f.q();
        }
        best = std::min<std::uint64_t>(best, w.weight());
    }
    return best;
}

/// det(tI - M) by cofactor expansion with polynomial entries.
inline Polynomial charpoly_cofactor(const Matrix& m) {
    const Field& f = m.field();
    const std::size_t n = m.rows();
    std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n, Polynomial(f)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = Polynomial::constant(f, f.neg(m.at(i, j)));
            if (i == j) a[i][j] = a[i][j] + Polynomial::t(f);
        }
    std::function<Polynomial(const std::vector<std::vector<Polynomial>>&)> det =
        [&](const std::vector<std::vector<Polynomial>>& x) -> Polynomial {
        const std::size_t k = x.size();
        if (k == 0) return Polynomial::constant(f, 1);
        if (k == 1) return x[0][0];
        Polynomial total(f);
        for (std::size_t c = 0; c < k; ++c) {
            std::vector<std::vector<Polynomial>> minor;
            for (std::size_t i = 1; i < k; ++i) {
                std::vector<Polynomial> row;
                for (std::size_t j = 0; j < k; ++j)
                    if (j != c) row.push_back(x[i][j]);
                minor.push_back(std::move(row));
            }
            const Polynomial term = x[0][c] * det(minor);
            total = (c % 2 == 0) ? total + term : total - term;
        }
        return total;
    };
    return det(a);
}

}  // namespace intertwine::test_support

namespace intertwine {

// Readable gtest failure output.
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const Partition& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const Matrix& m, std::ostream* os) {
    *os << m.shape() << " [";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        *os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) *os << (j ? " " : "") << m.at(i, j);
    }
    *os << "]";
}

}  // namespace intertwine

#endif  // INTERTWINE_TESTS_TEST_SUPPORT_HPP
