#ifndef INTERTWINE_POLY_HPP
#define INTERTWINE_POLY_HPP

/// Univariate polynomials over GF(q): arithmetic, gcd, irreducibility and
/// complete factorization (squarefree, distinct-degree, Cantor-Zassenhaus).

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "intertwine/error.hpp"
#include "intertwine/gf.hpp"

namespace intertwine {

/// Ascending coefficients, no trailing zeros; the zero polynomial is empty.
class Polynomial {
public:
    explicit Polynomial(Field f) : f_(std::move(f)) {}
    Polynomial(Field f, std::vector<elem_t> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
        for (elem_t v : c_)
            if (!f_.contains(v)) throw Error(Errc::Parse, "coefficient " + std::to_string(v) + " not in " + f_.name());
        trim();
    }

    static Polynomial constant(const Field& f, elem_t c) { return Polynomial(f, {c}); }
    static Polynomial monomial(const Field& f, elem_t c, std::size_t deg) {
        std::vector<elem_t> v(deg + 1, 0);
        v[deg] = c;
        return Polynomial(f, std::move(v));
    }
    static Polynomial t(const Field& f) { return monomial(f, 1, 1); }

    const Field& field() const noexcept { return f_; }
    const std::vector<elem_t>& coeffs() const noexcept { return c_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    elem_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    elem_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    Polynomial monic() const {
        if (is_zero() || is_monic()) return *this;
        const elem_t li = f_.inv(lead());
        Polynomial r = *this;
        for (auto& v : r.c_) v = f_.mul(v, li);
        return r;
    }

    Polynomial scaled(elem_t a) const {
        Polynomial r = *this;
        for (auto& v : r.c_) v = f_.mul(v, a);
        r.trim();
        return r;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial(f_);
        std::vector<elem_t> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = f_.mul(f_.from_int(static_cast<std::int64_t>(i)), c_[i]);
        return Polynomial(f_, std::move(d));
    }

    elem_t eval(elem_t x) const noexcept {
        elem_t acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x), c_[i]);
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check(a, b);
        std::vector<elem_t> v(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.f_.add(a.coeff(i), b.coeff(i));
        return Polynomial(a.f_, std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check(a, b);
        std::vector<elem_t> v(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.f_.sub(a.coeff(i), b.coeff(i));
        return Polynomial(a.f_, std::move(v));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.f_);
        const Field& f = a.f_;
        std::vector<elem_t> v(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
        }
        return Polynomial(f, std::move(v));
    }

    /// Quotient and remainder; throws DivisionByZero for a zero divisor.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        check(a, b);
        if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
        const Field& f = a.f_;
        if (a.degree() < b.degree()) return {Polynomial(f), a};
        std::vector<elem_t> rem = a.c_;
        const std::size_t db = b.c_.size() - 1;
        std::vector<elem_t> quo(rem.size() - db, 0);
        const elem_t li = f.inv(b.lead());
        for (std::size_t k = rem.size(); k-- > db;) {
            const elem_t c = f.mul(rem[k], li);
            quo[k - db] = c;
            if (c == 0) continue;
            for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = f.sub(rem[k - db + i], f.mul(c, b.c_[i]));
        }
        rem.resize(db);
        return {Polynomial(f, std::move(quo)), Polynomial(f, std::move(rem))};
    }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Canonical order: by degree, then by the coefficient encoding read as a
    /// base-q integer (highest coefficient most significant).
    friend bool canonical_less(const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (std::size_t i = a.c_.size(); i-- > 0;)
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        return false;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            const bool show_coeff = c_[i] != 1 || i == 0;
            if (show_coeff) s += (f_.e() == 1 ? std::to_string(c_[i]) : "[" + std::to_string(c_[i]) + "]");
            if (i >= 1) s += (show_coeff ? "*t" : "t");
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    static void check(const Polynomial& a, const Polynomial& b) {
        if (a.f_ != b.f_) throw Error(Errc::FieldMismatch, a.f_.name() + " vs " + b.f_.name());
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    Field f_;
    std::vector<elem_t> c_;
};

/// Monic gcd. Throws BothZero when both inputs vanish.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    if (a.field() != b.field()) throw Error(Errc::FieldMismatch, a.field().name() + " vs " + b.field().name());
    if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    return ((a * b) / poly_gcd(a, b)).monic();
}

/// base^n mod m.
inline Polynomial poly_powmod(Polynomial base, std::uint64_t n, const Polynomial& m) {
    Polynomial result = Polynomial::constant(m.field(), 1) % m;
    base = base % m;
    while (n != 0) {
        if (n & 1) result = (result * base) % m;
        base = (base * base) % m;
        n >>= 1;
    }
    return result;
}

inline Polynomial poly_pow(const Polynomial& base, unsigned n) {
    Polynomial r = Polynomial::constant(base.field(), 1);
    for (unsigned i = 0; i < n; ++i) r = r * base;
    return r;
}

namespace detail {

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Coefficient-wise p-th root of a polynomial in t^p.
inline Polynomial pth_root(const Polynomial& f) {
    const Field& F = f.field();
    const std::size_t p = F.p();
    std::vector<elem_t> out(f.coeffs().size() / p + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) out[i / p] = F.pth_root(f.coeffs()[i]);
    return Polynomial(F, std::move(out));
}

inline void squarefree_rec(const Polynomial& f, unsigned scale, std::vector<std::pair<Polynomial, unsigned>>& out) {
    const Field& F = f.field();
    if (f.degree() <= 0) return;
    const Polynomial d = f.derivative();
    if (d.is_zero()) {
        squarefree_rec(pth_root(f), scale * F.p(), out);
        return;
    }
    Polynomial c = poly_gcd(f, d);
    Polynomial w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        Polynomial y = poly_gcd(w, c);
        Polynomial z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i * scale);
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (c.degree() > 0) squarefree_rec(pth_root(c), scale * F.p(), out);
}

}  // namespace detail

/// f = lead(f) * prod g_i^{m_i} with g_i monic, squarefree and pairwise
/// coprime; sorted by multiplicity.
inline std::vector<std::pair<Polynomial, unsigned>> poly_squarefree_decomposition(const Polynomial& f) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "squarefree decomposition of 0");
    std::vector<std::pair<Polynomial, unsigned>> out;
    detail::squarefree_rec(f.monic(), 1, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return canonical_less(a.first, b.first);
    });
    return out;
}

/// Rabin's test: t^{q^m} = t (mod f) and gcd(t^{q^{m/l}} - t, f) = 1 for
/// every prime l | m.
inline bool poly_is_irreducible(const Polynomial& f) {
    if (f.degree() < 1) throw Error(Errc::ConstantPolynomial, "irreducibility of a constant");
    if (!f.is_monic()) throw Error(Errc::NotMonic, f.to_string());
    const auto m = static_cast<std::uint64_t>(f.degree());
    if (m == 1) return true;
    const Field& F = f.field();
    const Polynomial t = Polynomial::t(F) % f;
    std::vector<Polynomial> frob{t};  // frob[i] = t^{q^i} mod f
    for (std::uint64_t i = 1; i <= m; ++i) frob.push_back(poly_powmod(frob.back(), F.q(), f));
    if (frob[m] != t) return false;
    for (std::uint64_t l : detail::prime_divisors(m)) {
        if (!poly_gcd(frob[m / l] - t, f).is_one()) return false;
    }
    return true;
}

struct FactoredPolynomial {
    elem_t unit = 1;
    std::vector<std::pair<Polynomial, unsigned>> factors;
};

namespace detail {

/// Distinct-degree split of a monic squarefree polynomial: (product of all
/// irreducible factors of degree d, d).
inline std::vector<std::pair<Polynomial, unsigned>> distinct_degree(Polynomial f) {
    const Field& F = f.field();
    std::vector<std::pair<Polynomial, unsigned>> out;
    const Polynomial t = Polynomial::t(F);
    Polynomial h = t % f;
    for (unsigned d = 1; 2 * static_cast<int>(d) <= f.degree(); ++d) {
        h = poly_powmod(h, F.q(), f);
        Polynomial g = poly_gcd(h - t, f);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

/// Splits g, a product of distinct monic irreducibles all of degree d.
inline void equal_degree(const Polynomial& g, unsigned d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
    if (g.degree() == static_cast<int>(d)) {
        out.push_back(g);
        return;
    }
    const Field& F = g.field();
    const std::size_t n = static_cast<std::size_t>(g.degree());
    for (;;) {
        std::vector<elem_t> a(n);
        for (auto& v : a) v = static_cast<elem_t>(rng() % F.q());
        Polynomial pa(F, std::move(a));
        if (pa.degree() < 1) continue;
        Polynomial b(F);
        if (F.p() == 2) {
            // absolute trace GF(2^{e d}) -> GF(2)
            Polynomial term = pa % g;
            b = term;
            for (unsigned i = 1; i < F.e() * d; ++i) {
                term = (term * term) % g;
                b = b + term;
            }
        } else {
            // a^{(q^d - 1)/2} = (prod_{i<d} a^{q^i})^{(q-1)/2}
            Polynomial frob = pa % g;
            Polynomial norm = frob;
            for (unsigned i = 1; i < d; ++i) {
                frob = poly_powmod(frob, F.q(), g);
                norm = (norm * frob) % g;
            }
            b = poly_powmod(norm, (F.q() - 1) / 2, g) - Polynomial::constant(F, 1);
        }
        if (b.is_zero()) continue;
        Polynomial h = poly_gcd(b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree(g / h, d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Complete factorization into monic irreducibles, sorted canonically.
/// The random splitter is driven solely by `rng_seed`.
inline FactoredPolynomial poly_factor(const Polynomial& f, std::uint64_t rng_seed = 0) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "factorization of 0");
    if (f.degree() < 1) throw Error(Errc::ConstantPolynomial, "factorization of a constant");
    std::mt19937_64 rng(rng_seed);
    FactoredPolynomial out;
    out.unit = f.lead();
    for (const auto& [part, mult] : poly_squarefree_decomposition(f)) {
        for (const auto& [block, d] : detail::distinct_degree(part)) {
            std::vector<Polynomial> irr;
            detail::equal_degree(block, d, rng, irr);
            for (auto& g : irr) out.factors.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
}

/// unit * prod factor^mult.
inline Polynomial expand(const FactoredPolynomial& fp, const Field& f) {
    Polynomial r = Polynomial::constant(f, fp.unit);
    for (const auto& [g, m] : fp.factors) r = r * poly_pow(g, m);
    return r;
}

}  // namespace intertwine

#endif  // INTERTWINE_POLY_HPP
