#ifndef INTERTWINE_GF_HPP
#define INTERTWINE_GF_HPP

/// Exact arithmetic in GF(p^e).
///
/// Elements are handled in their canonical integer encoding
/// idx = sum_i c_i p^i, where c_0..c_{e-1} are the coefficients of the
/// element in the power basis 1, x, ..., x^{e-1} of GF(p)[x]/(modulus).
/// Prime subfield elements therefore encode as themselves, 0 encodes zero and
/// 1 encodes one. Fields of order <= 256 precompute full operation tables.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "intertwine/error.hpp"

namespace intertwine {

using elem_t = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace detail {

inline constexpr std::uint64_t kTableLimit = 256;
inline constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

struct FieldData {
    std::uint32_t p = 2;
    std::uint32_t e = 1;
    std::uint64_t q = 2;
    std::vector<elem_t> modulus;  // ascending, monic, length e+1; empty for prime fields
    std::vector<std::uint64_t> pow_p;  // p^0 .. p^e
    std::vector<elem_t> add_tab, sub_tab, mul_tab, inv_tab;

    bool tabled() const noexcept { return !mul_tab.empty(); }
};

}  // namespace detail

/// Handle to an immutable finite field. Copies share the same tables.
class Field {
public:
    /// GF(2); mostly useful as a default-constructed placeholder.
    Field() : Field(make_prime_data(2)) {}

    /// Prime field GF(p). Throws NotPrime.
    static Field prime(std::uint64_t p) {
        if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
        if (p >= detail::kMaxOrder) throw Error(Errc::NotPrime, "prime exceeds supported range 2^31");
        return Field(make_prime_data(static_cast<std::uint32_t>(p)));
    }

    /// GF(p^e) from a modulus the caller has already verified to be a monic
    /// irreducible of degree e. Use make_field() for validated construction.
    static Field from_verified_modulus(std::uint32_t p, std::uint32_t e, std::vector<elem_t> modulus) {
        if (e == 1) return prime(p);
        auto d = std::make_shared<detail::FieldData>();
        d->p = p;
        d->e = e;
        d->modulus = std::move(modulus);
        d->pow_p.assign(e + 1, 1);
        for (std::uint32_t i = 1; i <= e; ++i) d->pow_p[i] = d->pow_p[i - 1] * p;
        d->q = d->pow_p[e];
        Field f(std::move(d));
        f.build_tables();
        return f;
    }

    std::uint32_t p() const noexcept { return d_->p; }
    std::uint32_t e() const noexcept { return d_->e; }
    std::uint64_t q() const noexcept { return d_->q; }
    const std::vector<elem_t>& modulus() const noexcept { return d_->modulus; }
    std::string name() const {
        return "GF(" + std::to_string(d_->q) + ")";
    }

    bool contains(elem_t a) const noexcept { return a < d_->q; }

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->e == b.d_->e && a.d_->modulus == b.d_->modulus);
    }
    friend bool operator!=(const Field& a, const Field& b) noexcept { return !(a == b); }

    /// Image of an integer in the prime subfield.
    elem_t from_int(std::int64_t n) const noexcept {
        std::int64_t r = n % static_cast<std::int64_t>(d_->p);
        if (r < 0) r += d_->p;
        return static_cast<elem_t>(r);
    }

    std::vector<elem_t> coeffs(elem_t a) const {
        std::vector<elem_t> c(d_->e);
        for (std::uint32_t i = 0; i < d_->e; ++i) {
            c[i] = a % d_->p;
            a /= d_->p;
        }
        return c;
    }

    elem_t from_coeffs(const std::vector<elem_t>& c) const {
        if (c.size() != d_->e) throw Error(Errc::Parse, "coefficient vector has wrong length for " + name());
        std::uint64_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] >= d_->p) throw Error(Errc::Parse, "coefficient out of range for " + name());
            v = v * d_->p + c[i];
        }
        return static_cast<elem_t>(v);
    }

    elem_t add(elem_t a, elem_t b) const noexcept {
        if (d_->tabled()) return d_->add_tab[a * d_->q + b];
        return add_raw(a, b);
    }
    elem_t sub(elem_t a, elem_t b) const noexcept {
        if (d_->tabled()) return d_->sub_tab[a * d_->q + b];
        return sub_raw(a, b);
    }
    elem_t neg(elem_t a) const noexcept { return sub(0, a); }
    elem_t mul(elem_t a, elem_t b) const noexcept {
        if (d_->tabled()) return d_->mul_tab[a * d_->q + b];
        return mul_raw(a, b);
    }
    elem_t inv(elem_t a) const {
        if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero in " + name());
        if (d_->tabled()) return d_->inv_tab[a];
        return pow(a, d_->q - 2);
    }
    elem_t div(elem_t a, elem_t b) const { return mul(a, inv(b)); }

    elem_t pow(elem_t a, std::uint64_t n) const noexcept {
        elem_t result = 1;
        while (n != 0) {
            if (n & 1) result = mul(result, a);
            a = mul(a, a);
            n >>= 1;
        }
        return result;
    }

    /// Unique p-th root (inverse Frobenius): a^(q/p).
    elem_t pth_root(elem_t a) const noexcept { return pow(a, d_->q / d_->p); }

private:
    explicit Field(std::shared_ptr<detail::FieldData> d) : d_(std::move(d)) {}

    static std::shared_ptr<detail::FieldData> make_prime_data(std::uint32_t p) {
        auto d = std::make_shared<detail::FieldData>();
        d->p = p;
        d->e = 1;
        d->q = p;
        d->pow_p = {1, p};
        Field tmp(d);
        tmp.build_tables();
        return d;
    }

    elem_t add_raw(elem_t a, elem_t b) const noexcept {
        const auto p = d_->p;
        if (d_->e == 1) return static_cast<elem_t>((std::uint64_t{a} + b) % p);
        std::uint64_t v = 0;
        for (std::uint32_t i = 0; i < d_->e; ++i) {
            v += ((a % p + b % p) % p) * d_->pow_p[i];
            a /= p;
            b /= p;
        }
        return static_cast<elem_t>(v);
    }

    elem_t sub_raw(elem_t a, elem_t b) const noexcept {
        const auto p = d_->p;
        if (d_->e == 1) return static_cast<elem_t>((std::uint64_t{a} + p - b) % p);
        std::uint64_t v = 0;
        for (std::uint32_t i = 0; i < d_->e; ++i) {
            v += ((a % p + p - b % p) % p) * d_->pow_p[i];
            a /= p;
            b /= p;
        }
        return static_cast<elem_t>(v);
    }

    elem_t mul_raw(elem_t a, elem_t b) const noexcept {
        const std::uint64_t p = d_->p;
        if (d_->e == 1) return static_cast<elem_t>((std::uint64_t{a} * b) % p);
        const std::uint32_t e = d_->e;
        std::vector<std::uint64_t> x(e), y(e), prod(2 * e - 1, 0);
        for (std::uint32_t i = 0; i < e; ++i) {
            x[i] = a % p;
            a /= static_cast<elem_t>(p);
            y[i] = b % p;
            b /= static_cast<elem_t>(p);
        }
        for (std::uint32_t i = 0; i < e; ++i) {
            if (x[i] == 0) continue;
            for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
        }
        // reduce with x^e = -sum_{i<e} m_i x^i
        const auto& m = d_->modulus;
        for (std::size_t k = prod.size(); k-- > e;) {
            const std::uint64_t c = prod[k];
            if (c == 0) continue;
            prod[k] = 0;
            for (std::uint32_t i = 0; i < e; ++i)
                prod[k - e + i] = (prod[k - e + i] + (p - m[i]) % p * c) % p;
        }
        std::uint64_t v = 0;
        for (std::uint32_t i = e; i-- > 0;) v = v * p + prod[i];
        return static_cast<elem_t>(v);
    }

    void build_tables() {
        const std::uint64_t q = d_->q;
        if (q > detail::kTableLimit) return;
        std::vector<elem_t> add_t(q * q), sub_t(q * q), mul_t(q * q), inv_t(q, 0);
        for (elem_t a = 0; a < q; ++a) {
            for (elem_t b = 0; b < q; ++b) {
                add_t[a * q + b] = add_raw(a, b);
                sub_t[a * q + b] = sub_raw(a, b);
                mul_t[a * q + b] = mul_raw(a, b);
                if (mul_t[a * q + b] == 1) inv_t[a] = b;
            }
        }
        d_->add_tab = std::move(add_t);
        d_->sub_tab = std::move(sub_t);
        d_->inv_tab = std::move(inv_t);
        d_->mul_tab = std::move(mul_t);
    }

    std::shared_ptr<detail::FieldData> d_;
};

/// An element bound to its field; arithmetic checks that operands agree.
class FieldElement {
public:
    FieldElement(Field f, elem_t v) : f_(std::move(f)), v_(v) {
        if (!f_.contains(v_)) throw Error(Errc::Parse, "encoding " + std::to_string(v) + " not in " + f_.name());
    }

    const Field& field() const noexcept { return f_; }
    elem_t encoding() const noexcept { return v_; }
    std::vector<elem_t> coeffs() const { return f_.coeffs(v_); }
    bool is_zero() const noexcept { return v_ == 0; }

    FieldElement inv() const { return {f_, f_.inv(v_)}; }
    FieldElement operator-() const { return {f_, f_.neg(v_)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.f_, a.f_.add(a.v_, b.v_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.f_, a.f_.sub(a.v_, b.v_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.f_, a.f_.mul(a.v_, b.v_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.f_, a.f_.div(a.v_, b.v_)};
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.v_ == b.v_ && a.f_ == b.f_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    static void check(const FieldElement& a, const FieldElement& b) {
        if (a.f_ != b.f_) throw Error(Errc::FieldMismatch, a.f_.name() + " vs " + b.f_.name());
    }

    Field f_;
    elem_t v_;
};

enum class ArithOp { Add, Sub, Mul, Div, Neg, Inv };

/// Dispatching form of the element operations; `b` is ignored for Neg/Inv.
inline FieldElement elem_arith(ArithOp op, const FieldElement& a, const FieldElement* b = nullptr) {
    auto need_b = [&]() -> const FieldElement& {
        if (b == nullptr) throw Error(Errc::LengthMismatch, "binary operation needs a second operand");
        return *b;
    };
    switch (op) {
        case ArithOp::Add: return a + need_b();
        case ArithOp::Sub: return a - need_b();
        case ArithOp::Mul: return a * need_b();
        case ArithOp::Div: return a / need_b();
        case ArithOp::Neg: return -a;
        case ArithOp::Inv: return a.inv();
    }
    return a;
}

/// All q elements in ascending encoding order (0 first, then 1).
inline std::vector<FieldElement> enumerate_elements(const Field& f) {
    std::vector<FieldElement> out;
    out.reserve(f.q());
    for (std::uint64_t v = 0; v < f.q(); ++v) out.emplace_back(f, static_cast<elem_t>(v));
    return out;
}

}  // namespace intertwine

#endif  // INTERTWINE_GF_HPP
