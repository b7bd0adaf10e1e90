#ifndef INTERTWINE_MATRIX_HPP
#define INTERTWINE_MATRIX_HPP

/// Dense matrices over GF(q) and the exact linear algebra built on them.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "intertwine/error.hpp"
#include "intertwine/gf.hpp"
#include "intertwine/poly.hpp"

namespace intertwine {

/// Row-major r x s matrix. Row-major order is also the vectorization used
/// for codewords.
class Matrix {
public:
    explicit Matrix(Field f) : f_(std::move(f)) {}
    Matrix(Field f, std::size_t rows, std::size_t cols) : f_(std::move(f)), r_(rows), c_(cols), a_(rows * cols, 0) {}
    Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<elem_t> entries)
        : f_(std::move(f)), r_(rows), c_(cols), a_(std::move(entries)) {
        if (a_.size() != r_ * c_) throw Error(Errc::SizeMismatch, "entry count does not match shape");
        for (elem_t v : a_)
            if (!f_.contains(v)) throw Error(Errc::Parse, "entry " + std::to_string(v) + " not in " + f_.name());
    }

    static Matrix from_rows(const Field& f, const std::vector<std::vector<elem_t>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows[0].size();
        std::vector<elem_t> a;
        a.reserve(r * c);
        for (const auto& row : rows) {
            if (row.size() != c) throw Error(Errc::SizeMismatch, "ragged rows");
            a.insert(a.end(), row.begin(), row.end());
        }
        return Matrix(f, r, c, std::move(a));
    }
    static Matrix identity(const Field& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }
    static Matrix scalar(const Field& f, std::size_t n, elem_t a) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, a);
        return m;
    }
    static Matrix diagonal(const Field& f, const std::vector<elem_t>& d) {
        Matrix m(f, d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
        return m;
    }
    static Matrix column(const Field& f, std::vector<elem_t> v) {
        const std::size_t n = v.size();
        return Matrix(f, n, 1, std::move(v));
    }
    static Matrix row(const Field& f, std::vector<elem_t> v) {
        const std::size_t n = v.size();
        return Matrix(f, 1, n, std::move(v));
    }
    /// Single 1 at (i, j).
    static Matrix unit(const Field& f, std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
        Matrix m(f, rows, cols);
        m.set(i, j, 1);
        return m;
    }

    const Field& field() const noexcept { return f_; }
    std::size_t rows() const noexcept { return r_; }
    std::size_t cols() const noexcept { return c_; }
    bool is_square() const noexcept { return r_ == c_; }
    const std::vector<elem_t>& entries() const noexcept { return a_; }

    elem_t at(std::size_t i, std::size_t j) const noexcept { return a_[i * c_ + j]; }
    void set(std::size_t i, std::size_t j, elem_t v) noexcept { a_[i * c_ + j] = v; }

    std::vector<elem_t> row_vec(std::size_t i) const {
        return {a_.begin() + static_cast<std::ptrdiff_t>(i * c_), a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * c_)};
    }
    std::vector<elem_t> col_vec(std::size_t j) const {
        std::vector<elem_t> v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = at(i, j);
        return v;
    }

    bool is_zero() const noexcept {
        for (elem_t v : a_)
            if (v != 0) return false;
        return true;
    }
    /// Hamming weight of the row-major vectorization.
    std::size_t weight() const noexcept {
        std::size_t w = 0;
        for (elem_t v : a_) w += v != 0;
        return w;
    }

    Matrix transpose() const {
        Matrix t(f_, c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t.set(j, i, at(i, j));
        return t;
    }

    Matrix scaled(elem_t s) const {
        Matrix m = *this;
        for (auto& v : m.a_) v = f_.mul(v, s);
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        same_shape(a, b);
        Matrix m = a;
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.f_.add(a.a_[i], b.a_[i]);
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        same_shape(a, b);
        Matrix m = a;
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.f_.sub(a.a_[i], b.a_[i]);
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        check_field(a, b);
        if (a.c_ != b.r_) throw Error(Errc::SizeMismatch, "product of " + a.shape() + " and " + b.shape());
        const Field& f = a.f_;
        Matrix m(f, a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i) {
            for (std::size_t l = 0; l < a.c_; ++l) {
                const elem_t x = a.at(i, l);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.c_; ++j) m.a_[i * b.c_ + j] = f.add(m.a_[i * b.c_ + j], f.mul(x, b.at(l, j)));
            }
        }
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_ && a.f_ == b.f_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string shape() const { return std::to_string(r_) + "x" + std::to_string(c_); }

    friend void check_field(const Matrix& a, const Matrix& b) {
        if (a.f_ != b.f_) throw Error(Errc::FieldMismatch, a.f_.name() + " vs " + b.f_.name());
    }

private:
    static void same_shape(const Matrix& a, const Matrix& b) {
        check_field(a, b);
        if (a.r_ != b.r_ || a.c_ != b.c_) throw Error(Errc::SizeMismatch, a.shape() + " vs " + b.shape());
    }

    Field f_;
    std::size_t r_ = 0;
    std::size_t c_ = 0;
    std::vector<elem_t> a_;
};

inline void require_square(const Matrix& m, const char* what) {
    if (!m.is_square()) throw Error(Errc::NotSquare, std::string(what) + " is " + m.shape());
}

struct RrefResult {
    Matrix rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
inline RrefResult mat_rref(Matrix m) {
    const Field f = m.field();
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t piv = row;
        while (piv < R && m.at(piv, col) == 0) ++piv;
        if (piv == R) continue;
        if (piv != row)
            for (std::size_t j = 0; j < C; ++j) {
                const elem_t tmp = m.at(row, j);
                m.set(row, j, m.at(piv, j));
                m.set(piv, j, tmp);
            }
        const elem_t li = f.inv(m.at(row, col));
        for (std::size_t j = col; j < C; ++j) m.set(row, j, f.mul(m.at(row, j), li));
        for (std::size_t i = 0; i < R; ++i) {
            if (i == row) continue;
            const elem_t c = m.at(i, col);
            if (c == 0) continue;
            for (std::size_t j = col; j < C; ++j) m.set(i, j, f.sub(m.at(i, j), f.mul(c, m.at(row, j))));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), pivots.size(), std::move(pivots)};
}

inline std::size_t mat_rank(const Matrix& m) { return mat_rref(m).rank; }

/// Kernel basis as column vectors, one per free column in ascending order
/// (that free variable set to 1, the other free variables to 0).
inline std::vector<Matrix> mat_nullspace(const Matrix& m) {
    const Field& f = m.field();
    const RrefResult rr = mat_rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<Matrix> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<elem_t> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = f.neg(rr.rref.at(i, free));
        basis.push_back(Matrix::column(f, std::move(v)));
    }
    return basis;
}

inline Matrix mat_inverse(const Matrix& m) {
    require_square(m, "matrix to invert");
    const std::size_t n = m.rows();
    const Field& f = m.field();
    Matrix aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
        aug.set(i, n + i, 1);
    }
    const RrefResult rr = mat_rref(std::move(aug));
    if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1)) throw Error(Errc::Singular, "matrix is singular");
    Matrix inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, rr.rref.at(i, n + j));
    return inv;
}

inline bool mat_is_invertible(const Matrix& m) { return m.is_square() && mat_rank(m) == m.rows(); }

/// det(tI - M) by Berkowitz's division-free algorithm.
inline Polynomial mat_charpoly(const Matrix& m) {
    require_square(m, "charpoly argument");
    const Field& f = m.field();
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial::constant(f, 1);
    // Coefficients highest degree first: vect = charpoly of the leading r x r block.
    std::vector<elem_t> vect{1, f.neg(m.at(0, 0))};
    for (std::size_t r = 1; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R C, -R M C, ..., -R M^{r-1} C
        std::vector<elem_t> toep(r + 2, 0);
        toep[0] = 1;
        toep[1] = f.neg(m.at(r, r));
        std::vector<elem_t> ck(r);
        for (std::size_t i = 0; i < r; ++i) ck[i] = m.at(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            elem_t dot = 0;
            for (std::size_t j = 0; j < r; ++j) dot = f.add(dot, f.mul(m.at(r, j), ck[j]));
            toep[k + 2] = f.neg(dot);
            std::vector<elem_t> next(r, 0);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) next[i] = f.add(next[i], f.mul(m.at(i, j), ck[j]));
            ck = std::move(next);
        }
        std::vector<elem_t> nv(r + 2, 0);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) nv[i] = f.add(nv[i], f.mul(toep[i - j], vect[j]));
        vect = std::move(nv);
    }
    return Polynomial(f, std::vector<elem_t>(vect.rbegin(), vect.rend()));
}

/// Horner evaluation of f at a square matrix.
inline Matrix mat_poly_eval(const Polynomial& p, const Matrix& m) {
    require_square(m, "evaluation point");
    if (p.field() != m.field()) throw Error(Errc::FieldMismatch, p.field().name() + " vs " + m.field().name());
    const Field& f = m.field();
    const std::size_t n = m.rows();
    Matrix acc(f, n, n);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * m + Matrix::scalar(f, n, p.coeffs()[i]);
    return acc;
}

/// Block-diagonal assembly; the empty sum is the 0 x 0 matrix over `f`.
inline Matrix mat_direct_sum(const Field& f, std::span<const Matrix> blocks) {
    std::size_t R = 0, C = 0;
    for (const auto& b : blocks) {
        if (b.field() != f) throw Error(Errc::FieldMismatch, b.field().name() + " vs " + f.name());
        R += b.rows();
        C += b.cols();
    }
    Matrix m(f, R, C);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m.set(r0 + i, c0 + j, b.at(i, j));
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

inline Matrix mat_direct_sum(const Matrix& a, const Matrix& b) {
    const Matrix blocks[] = {a, b};
    return mat_direct_sum(a.field(), blocks);
}

enum class Orientation { Rows, Columns };

/// n x n invertible matrix whose first rows (or columns) are `prefix`; the
/// rest are standard basis vectors at the non-pivot positions of the
/// prefix's RREF, in ascending order.
inline Matrix mat_complete_invertible(const Field& f, const std::vector<std::vector<elem_t>>& prefix, std::size_t n,
                                      Orientation mode) {
    if (prefix.size() > n) throw Error(Errc::DependentPrefix, "more prefix vectors than the dimension");
    for (const auto& v : prefix)
        if (v.size() != n) throw Error(Errc::SizeMismatch, "prefix vector has wrong length");
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < prefix.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, prefix[i][j]);
    if (!prefix.empty()) {
        const Matrix head = Matrix::from_rows(f, prefix);
        const RrefResult rr = mat_rref(head);
        if (rr.rank < prefix.size()) throw Error(Errc::DependentPrefix, "prefix vectors are linearly dependent");
        std::vector<bool> is_pivot(n, false);
        for (std::size_t c : rr.pivots) is_pivot[c] = true;
        std::size_t row = prefix.size();
        for (std::size_t j = 0; j < n; ++j)
            if (!is_pivot[j]) m.set(row++, j, 1);
    } else {
        m = Matrix::identity(f, n);
    }
    return mode == Orientation::Rows ? m : m.transpose();
}

/// Entrywise image of a matrix over GF(p) in an extension GF(p^e) of it.
inline Matrix embed_prime_subfield(const Matrix& m, const Field& target) {
    if (m.field().e() != 1 || m.field().p() != target.p())
        throw Error(Errc::FieldMismatch, m.field().name() + " is not the prime subfield of " + target.name());
    return Matrix(target, m.rows(), m.cols(), m.entries());
}

}  // namespace intertwine

#endif  // INTERTWINE_MATRIX_HPP
