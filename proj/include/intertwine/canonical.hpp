#ifndef INTERTWINE_CANONICAL_HPP
#define INTERTWINE_CANONICAL_HPP

/// Primary decomposition of a square matrix into (irreducible, partition)
/// components, and the model matrices N_lambda and N_{lambda,p}.
///
/// Block structure is read off nullities: with n_j = dim ker p(A)^j, the
/// number of generalized Jordan blocks of size >= j for p is
/// (n_j - n_{j-1}) / deg p, i.e. the conjugate of the component partition.

#include <cstdint>
#include <string>
#include <vector>

#include "intertwine/error.hpp"
#include "intertwine/matrix.hpp"
#include "intertwine/partitions.hpp"
#include "intertwine/poly.hpp"

namespace intertwine {

struct PrimaryComponent {
    Polynomial irr;
    unsigned deg = 0;
    unsigned mult = 0;
    Partition partition;
};

struct PrimaryDecomposition {
    std::size_t dim = 0;
    std::vector<PrimaryComponent> components;  // sorted canonically by irr
};

/// Companion matrix with ones on the superdiagonal and -p_0..-p_{d-1} in
/// the last row.
inline Matrix companion_matrix(const Polynomial& p) {
    if (!p.is_monic() || p.degree() < 1) throw Error(Errc::NotMonic, "companion matrix needs a monic non-constant polynomial");
    const Field& f = p.field();
    const auto d = static_cast<std::size_t>(p.degree());
    Matrix c(f, d, d);
    for (std::size_t i = 0; i + 1 < d; ++i) c.set(i, i + 1, 1);
    for (std::size_t j = 0; j < d; ++j) c.set(d - 1, j, f.neg(p.coeff(j)));
    return c;
}

/// N_lambda: Jordan blocks of sizes lambda_i with ones at (i, i+1).
inline Matrix nilpotent_matrix(const Field& f, const Partition& lambda) {
    const auto n = static_cast<std::size_t>(lambda.weight());
    Matrix m(f, n, n);
    std::size_t off = 0;
    for (int part : lambda.parts()) {
        for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(part); ++i) m.set(off + i, off + i + 1, 1);
        off += static_cast<std::size_t>(part);
    }
    return m;
}

/// N_{lambda,p}: per part m, C(p) repeated m times on the block diagonal
/// with d x d identities on the block superdiagonal.
inline Matrix generalized_jordan_matrix(const Polynomial& p, const Partition& lambda) {
    if (!p.is_monic() || p.degree() < 1 || !poly_is_irreducible(p))
        throw Error(Errc::NotIrreducible, p.to_string() + " is not a monic irreducible");
    const Field& f = p.field();
    const Matrix c = companion_matrix(p);
    const auto d = static_cast<std::size_t>(p.degree());
    const std::size_t n = d * static_cast<std::size_t>(lambda.weight());
    Matrix m(f, n, n);
    std::size_t off = 0;
    for (int part : lambda.parts()) {
        for (std::size_t b = 0; b < static_cast<std::size_t>(part); ++b) {
            const std::size_t base = off + b * d;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) m.set(base + i, base + j, c.at(i, j));
            if (b + 1 < static_cast<std::size_t>(part))
                for (std::size_t i = 0; i < d; ++i) m.set(base + i, base + d + i, 1);
        }
        off += d * static_cast<std::size_t>(part);
    }
    return m;
}

inline PrimaryDecomposition primary_decomposition(const Matrix& a, std::uint64_t rng_seed = 0) {
    require_square(a, "matrix to decompose");
    PrimaryDecomposition out;
    out.dim = a.rows();
    if (a.rows() == 0) return out;
    const std::size_t r = a.rows();
    const FactoredPolynomial fac = poly_factor(mat_charpoly(a), rng_seed);
    for (const auto& [p, m] : fac.factors) {
        const auto d = static_cast<std::size_t>(p.degree());
        const Matrix pa = mat_poly_eval(p, a);
        Matrix power = pa;
        std::size_t prev = 0;
        std::vector<int> blocks;
        for (unsigned j = 1; j <= m + 1; ++j) {
            const std::size_t nullity = r - mat_rank(power);
            if (nullity < prev) throw Error(Errc::InternalInconsistency, "nullities of p(A)^j decreased");
            const std::size_t diff = nullity - prev;
            if (diff == 0) break;
            if (diff % d != 0) throw Error(Errc::InternalInconsistency, "nullity step not divisible by deg p");
            blocks.push_back(static_cast<int>(diff / d));
            prev = nullity;
            if (prev == d * m) break;
            power = power * pa;
        }
        if (prev != d * m) throw Error(Errc::InternalInconsistency, "generalized eigenspace dimension mismatch");
        for (std::size_t i = 1; i < blocks.size(); ++i)
            if (blocks[i] > blocks[i - 1]) throw Error(Errc::InternalInconsistency, "block counts not decreasing");
        Partition lambda = conjugate(Partition(blocks));
        out.components.push_back({p, static_cast<unsigned>(d), m, std::move(lambda)});
    }
    return out;
}

struct SpectralEntry {
    Polynomial irr;
    unsigned deg = 0;
    /// dim ker p(A) / deg p: eigenspace dimension for each root of p.
    unsigned eigendim_per_root = 0;
    /// multiplicity of p in c_A: generalized eigenspace dimension per root.
    unsigned gendim_per_root = 0;
};

inline std::vector<SpectralEntry> spectral_summary(const Matrix& a, std::uint64_t rng_seed = 0) {
    require_square(a, "matrix to summarize");
    std::vector<SpectralEntry> out;
    if (a.rows() == 0) return out;
    const FactoredPolynomial fac = poly_factor(mat_charpoly(a), rng_seed);
    for (const auto& [p, m] : fac.factors) {
        const auto d = static_cast<unsigned>(p.degree());
        const std::size_t nullity = a.rows() - mat_rank(mat_poly_eval(p, a));
        if (nullity % d != 0) throw Error(Errc::InternalInconsistency, "eigenspace dimension not divisible by deg p");
        out.push_back({p, d, static_cast<unsigned>(nullity / d), m});
    }
    return out;
}

}  // namespace intertwine

#endif  // INTERTWINE_CANONICAL_HPP
