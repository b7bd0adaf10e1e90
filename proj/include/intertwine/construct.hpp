#ifndef INTERTWINE_CONSTRUCT_HPP
#define INTERTWINE_CONSTRUCT_HPP

/// Intertwining codes of dimension k and minimum distance floor(r/k)*s.
///
/// Start from diagonal A0 = diag(z_1..z_k, a, ..., a), B0 = diag(z_1..z_k,
/// b, ..., b) whose code is <E_11, ..., E_kk>, then conjugate by (R, S). With
/// T = R^{-1}, the image of E_ll is the rank-one matrix T_{*l} S_{l*}. Taking
/// column l of T to be the indicator of the row block I_l and row l of S to
/// be u_l = (1, ..., gamma, ..., 1) makes every nonzero codeword a union of
/// full rows over some blocks.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intertwine/code.hpp"
#include "intertwine/error.hpp"
#include "intertwine/matrix.hpp"

namespace intertwine {

struct DiagonalSeed {
    Matrix a0;
    Matrix b0;
    std::vector<elem_t> zetas;
    std::optional<elem_t> alpha;  // present iff r > k
    std::optional<elem_t> beta;   // present iff s > k
};

struct ConstructionCertificate {
    Field field;
    std::size_t r = 0, s = 0, k = 0;
    /// Built for (s, r) and transposed; row_blocks then index columns of X.
    bool transposed = false;
    Matrix a0{field}, b0{field};
    std::vector<elem_t> zetas;
    std::optional<elem_t> alpha, beta;
    elem_t gamma = 0;
    Matrix r_mat{field}, r_inv{field}, s_mat{field};
    Matrix a{field}, b{field};
    std::vector<Matrix> x;
    std::vector<std::vector<std::size_t>> row_blocks;  // 0-based
    std::uint64_t claimed_d = 0;
};

namespace detail {

inline void check_k(std::size_t r, std::size_t s, std::size_t k) {
    if (k < 1 || k > std::min(r, s))
        throw Error(Errc::BadK, "need 1 <= k <= min(r, s), got k=" + std::to_string(k) + " for r=" + std::to_string(r) +
                                    ", s=" + std::to_string(s));
}

}  // namespace detail

/// Needs q >= k + min(1, r-k) + min(1, s-k). Scalars are taken in canonical
/// field order: z_i = i-1, then alpha, then beta.
inline DiagonalSeed construct_diagonal_seed(std::size_t r, std::size_t s, std::size_t k, const Field& f) {
    detail::check_k(r, s, k);
    const std::uint64_t need = k + (r > k ? 1 : 0) + (s > k ? 1 : 0);
    if (f.q() < need)
        throw Error(Errc::FieldTooSmall,
                    "diagonal seed needs " + std::to_string(need) + " distinct scalars, " + f.name() + " has " +
                        std::to_string(f.q()),
                    need, f.q());
    DiagonalSeed seed{Matrix(f, r, r), Matrix(f, s, s), {}, {}, {}};
    elem_t next = 0;
    for (std::size_t i = 0; i < k; ++i) seed.zetas.push_back(next++);
    if (r > k) seed.alpha = next++;
    if (s > k) seed.beta = next++;
    for (std::size_t i = 0; i < r; ++i) seed.a0.set(i, i, i < k ? seed.zetas[i] : *seed.alpha);
    for (std::size_t i = 0; i < s; ++i) seed.b0.set(i, i, i < k ? seed.zetas[i] : *seed.beta);
    return seed;
}

/// Least gamma outside {0, 1, 1 - s}. When k = 1 and no such element exists
/// (only GF(3) with s = 2 mod 3) gamma = 1, i.e. u_1 is all-ones.
inline elem_t choose_gamma(const Field& f, std::size_t s, std::size_t k) {
    const elem_t one_minus_s = f.sub(1, f.from_int(static_cast<std::int64_t>(s % f.p())));
    for (std::uint64_t g = 2; g < f.q(); ++g)
        if (g != one_minus_s) return static_cast<elem_t>(g);
    if (k == 1) return 1;
    throw Error(Errc::FieldTooSmall, "no admissible gamma in " + f.name(), k + 2, f.q());
}

/// Code with dim k and minimum distance floor(r/k)*s; needs q >= k + 2.
inline ConstructionCertificate construct_code(std::size_t r, std::size_t s, std::size_t k, const Field& f) {
    detail::check_k(r, s, k);
    if (f.q() < k + 2)
        throw Error(Errc::FieldTooSmall,
                    "construction needs q >= k + 2 = " + std::to_string(k + 2) + ", got " + f.name() +
                        " (the diagonal seed alone needs only k + min(1, r-k) + min(1, s-k))",
                    k + 2, f.q());
    const DiagonalSeed seed = construct_diagonal_seed(r, s, k, f);

    ConstructionCertificate c;
    c.field = f;
    c.r = r;
    c.s = s;
    c.k = k;
    c.a0 = seed.a0;
    c.b0 = seed.b0;
    c.zetas = seed.zetas;
    c.alpha = seed.alpha;
    c.beta = seed.beta;

    const std::size_t base = r / k;
    for (std::size_t l = 0; l < k; ++l) {
        std::vector<std::size_t> block;
        const std::size_t end = l + 1 == k ? r : (l + 1) * base;
        for (std::size_t i = l * base; i < end; ++i) block.push_back(i);
        c.row_blocks.push_back(std::move(block));
    }

    c.gamma = choose_gamma(f, s, k);
    // S' = (gamma - 1) I + J
    Matrix s_prime(f, s, s, std::vector<elem_t>(s * s, 1));
    for (std::size_t i = 0; i < s; ++i) s_prime.set(i, i, c.gamma);
    if (mat_is_invertible(s_prime)) {
        c.s_mat = s_prime;
    } else {
        std::vector<std::vector<elem_t>> u;
        for (std::size_t l = 0; l < k; ++l) u.push_back(s_prime.row_vec(l));
        c.s_mat = mat_complete_invertible(f, u, s, Orientation::Rows);
    }

    std::vector<std::vector<elem_t>> v;
    for (const auto& block : c.row_blocks) {
        std::vector<elem_t> ind(r, 0);
        for (std::size_t i : block) ind[i] = 1;
        v.push_back(std::move(ind));
    }
    c.r_inv = mat_complete_invertible(f, v, r, Orientation::Columns);
    c.r_mat = mat_inverse(c.r_inv);

    c.a = c.r_inv * c.a0 * c.r_mat;
    c.b = mat_inverse(c.s_mat) * c.b0 * c.s_mat;
    for (std::size_t l = 0; l < k; ++l)
        c.x.push_back(Matrix::column(f, c.r_inv.col_vec(l)) * Matrix::row(f, c.s_mat.row_vec(l)));
    c.claimed_d = base * s;
    return c;
}

/// Code with dim min(r, s) and minimum distance max(r, s); needs
/// q >= min(r, s) + 2. For r > s the (s, r) construction is transposed,
/// using C(B^T, A^T) = C(A, B)^T.
inline ConstructionCertificate construct_extremal(std::size_t r, std::size_t s, const Field& f) {
    const std::size_t m = std::min(r, s);
    if (m < 1) throw Error(Errc::BadK, "r and s must be positive");
    if (f.q() < m + 2)
        throw Error(Errc::FieldTooSmall, "extremal construction needs q >= " + std::to_string(m + 2) + ", got " + f.name(),
                    m + 2, f.q());
    if (r <= s) return construct_code(r, s, r, f);

    const ConstructionCertificate c = construct_code(s, r, s, f);
    ConstructionCertificate t;
    t.field = f;
    t.r = r;
    t.s = s;
    t.k = c.k;
    t.transposed = true;
    t.a0 = c.b0;
    t.b0 = c.a0;
    t.zetas = c.zetas;
    t.alpha = c.beta;
    t.beta = c.alpha;
    t.gamma = c.gamma;
    t.r_inv = c.s_mat.transpose();
    t.r_mat = mat_inverse(t.r_inv);
    t.s_mat = c.r_inv.transpose();
    t.a = c.b.transpose();
    t.b = c.a.transpose();
    for (const auto& x : c.x) t.x.push_back(x.transpose());
    t.row_blocks = c.row_blocks;
    t.claimed_d = c.claimed_d;
    return t;
}

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "fail";
}

struct CertificateCheck {
    std::string name;
    CheckStatus status = CheckStatus::Fail;
    std::string detail;
};

struct VerificationReport {
    std::vector<CertificateCheck> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
    bool any_skipped() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Skipped) return true;
        return false;
    }
    const CertificateCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace detail {

template <class Fn>
void run_check(VerificationReport& report, const std::string& name, Fn&& fn) {
    try {
        std::string detail;
        const bool ok = fn(detail);
        report.checks.push_back({name, ok ? CheckStatus::Pass : CheckStatus::Fail, detail});
    } catch (const Error& e) {
        if (e.code() == Errc::BudgetExceeded)
            report.checks.push_back({name, CheckStatus::Skipped, e.what()});
        else
            report.checks.push_back({name, CheckStatus::Fail, e.what()});
    }
}

}  // namespace detail

/// Re-derives every claim of a certificate from its matrices alone; nothing
/// computed by the constructor is trusted. Failures are report entries.
inline VerificationReport verify_certificate(const ConstructionCertificate& c,
                                             std::uint64_t budget = kDefaultDistanceBudget) {
    VerificationReport rep;
    const Field& f = c.field;
    // Width of the u_l vectors and length of the block indicators.
    const std::size_t u_len = c.transposed ? c.r : c.s;
    const std::size_t v_len = c.transposed ? c.s : c.r;

    detail::run_check(rep, "shapes", [&](std::string& d) {
        const bool ok = c.k >= 1 && c.k <= std::min(c.r, c.s) && c.a0.rows() == c.r && c.a0.cols() == c.r &&
                        c.b0.rows() == c.s && c.b0.cols() == c.s && c.a.rows() == c.r && c.a.cols() == c.r &&
                        c.b.rows() == c.s && c.b.cols() == c.s && c.r_mat.rows() == c.r && c.r_mat.cols() == c.r &&
                        c.r_inv.rows() == c.r && c.r_inv.cols() == c.r && c.s_mat.rows() == c.s &&
                        c.s_mat.cols() == c.s && c.x.size() == c.k && c.zetas.size() == c.k &&
                        c.row_blocks.size() == c.k;
        if (!ok) d = "matrix or list sizes inconsistent with r, s, k";
        for (const auto& x : c.x)
            if (x.rows() != c.r || x.cols() != c.s) return false;
        return ok;
    });
    if (rep.checks.back().status == CheckStatus::Fail) return rep;

    detail::run_check(rep, "diagonal_seed", [&](std::string& d) {
        std::vector<elem_t> all = c.zetas;
        if (c.alpha) all.push_back(*c.alpha);
        if (c.beta) all.push_back(*c.beta);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (all[i] == all[j]) {
                    d = "scalars not pairwise distinct";
                    return false;
                }
        std::vector<elem_t> da, db;
        for (std::size_t i = 0; i < c.r; ++i) da.push_back(i < c.k ? c.zetas[i] : c.alpha.value_or(0));
        for (std::size_t i = 0; i < c.s; ++i) db.push_back(i < c.k ? c.zetas[i] : c.beta.value_or(0));
        if ((c.r > c.k && !c.alpha) || (c.s > c.k && !c.beta)) {
            d = "missing alpha or beta";
            return false;
        }
        const bool ok = c.a0 == Matrix::diagonal(f, da) && c.b0 == Matrix::diagonal(f, db);
        if (!ok) d = "A0/B0 are not diag(zetas, alpha...) / diag(zetas, beta...)";
        return ok;
    });

    detail::run_check(rep, "gamma_admissible", [&](std::string& d) {
        const elem_t one_minus = f.sub(1, f.from_int(static_cast<std::int64_t>(u_len % f.p())));
        const bool ok = c.gamma != 0 && c.gamma != one_minus && (c.gamma != 1 || c.k == 1);
        if (!ok) d = "gamma must avoid 0 and 1 - s (and 1 unless k = 1)";
        return ok;
    });

    detail::run_check(rep, "R_invertible", [&](std::string& d) {
        const bool ok = c.r_mat * c.r_inv == Matrix::identity(f, c.r);
        if (!ok) d = "R * R^{-1} != I";
        return ok;
    });

    detail::run_check(rep, "S_invertible", [&](std::string& d) {
        const bool ok = mat_is_invertible(c.s_mat);
        if (!ok) d = "S is singular";
        return ok;
    });

    detail::run_check(rep, "conjugation", [&](std::string& d) {
        const bool ok = c.a == c.r_inv * c.a0 * c.r_mat && c.b == mat_inverse(c.s_mat) * c.b0 * c.s_mat;
        if (!ok) d = "A != R^{-1} A0 R or B != S^{-1} B0 S";
        return ok;
    });

    detail::run_check(rep, "block_structure", [&](std::string& d) {
        const std::size_t base = v_len / c.k;
        std::vector<int> seen(v_len, 0);
        for (std::size_t l = 0; l < c.k; ++l) {
            const auto& blk = c.row_blocks[l];
            const std::size_t want = l + 1 == c.k ? v_len - base * (c.k - 1) : base;
            if (blk.size() != want) {
                d = "block " + std::to_string(l) + " has wrong size";
                return false;
            }
            for (std::size_t i : blk) {
                if (i >= v_len || seen[i]++) {
                    d = "blocks do not partition the index set";
                    return false;
                }
            }
            std::vector<elem_t> ind(v_len, 0), u(u_len, 1);
            for (std::size_t i : blk) ind[i] = 1;
            u[l] = c.gamma;
            const std::vector<elem_t> t_col = c.transposed ? c.s_mat.row_vec(l) : c.r_inv.col_vec(l);
            const std::vector<elem_t> s_row = c.transposed ? c.r_inv.col_vec(l) : c.s_mat.row_vec(l);
            if (t_col != ind || s_row != u) {
                d = "conjugator prefix " + std::to_string(l) + " is not (indicator, u_l)";
                return false;
            }
        }
        return true;
    });

    detail::run_check(rep, "rank_one_identity", [&](std::string& d) {
        for (std::size_t l = 0; l < c.k; ++l) {
            const Matrix via_unit = c.r_inv * Matrix::unit(f, c.r, c.s, l, l) * c.s_mat;
            const Matrix outer = Matrix::column(f, c.r_inv.col_vec(l)) * Matrix::row(f, c.s_mat.row_vec(l));
            if (via_unit != c.x[l] || outer != c.x[l]) {
                d = "R^{-1} E_ll S != X^(" + std::to_string(l + 1) + ")";
                return false;
            }
        }
        return true;
    });

    detail::run_check(rep, "codewords_intertwine", [&](std::string& d) {
        for (std::size_t l = 0; l < c.k; ++l)
            if (c.a * c.x[l] != c.x[l] * c.b) {
                d = "A X^(" + std::to_string(l + 1) + ") != X^(" + std::to_string(l + 1) + ") B";
                return false;
            }
        return true;
    });

    const IntertwiningCode oracle = intertwiner_basis(c.a, c.b);
    detail::run_check(rep, "dimension", [&](std::string& d) {
        const bool ok = oracle.k() == c.k && oracle == IntertwiningCode::span_of(f, c.r, c.s, c.x);
        d = "oracle dimension " + std::to_string(oracle.k());
        return ok;
    });

    detail::run_check(rep, "min_distance", [&](std::string& d) {
        const std::uint64_t dist = min_distance(oracle, budget);
        d = "exhaustive distance " + std::to_string(dist) + ", claimed " + std::to_string(c.claimed_d);
        return dist == c.claimed_d;
    });
    return rep;
}

}  // namespace intertwine

#endif  // INTERTWINE_CONSTRUCT_HPP
