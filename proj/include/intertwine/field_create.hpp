#ifndef INTERTWINE_FIELD_CREATE_HPP
#define INTERTWINE_FIELD_CREATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intertwine/error.hpp"
#include "intertwine/gf.hpp"
#include "intertwine/poly.hpp"

namespace intertwine {

/// Builds GF(p^e). Without a modulus (e > 1) the least monic irreducible of
/// degree e is used, ordering candidates by sum_{i<e} c_i p^i.
inline Field field_create(std::uint64_t p, std::uint32_t e, const std::optional<std::vector<elem_t>>& modulus = {}) {
    const Field base = Field::prime(p);
    if (e < 1) throw Error(Errc::BadModulus, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > detail::kMaxOrder) throw Error(Errc::BadModulus, "field order exceeds 2^31");
    }
    if (e == 1) return base;

    if (modulus) {
        if (modulus->size() != e + 1) throw Error(Errc::BadModulus, "modulus must have e+1 coefficients");
        for (elem_t c : *modulus)
            if (c >= p) throw Error(Errc::BadModulus, "modulus coefficient out of range");
        if (modulus->back() != 1) throw Error(Errc::BadModulus, "modulus must be monic");
        if (!poly_is_irreducible(Polynomial(base, *modulus))) throw Error(Errc::BadModulus, "modulus is reducible");
        return Field::from_verified_modulus(static_cast<std::uint32_t>(p), e, *modulus);
    }

    const std::uint64_t count = q;  // number of monic degree-e candidates
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<elem_t> c(e + 1, 0);
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < e; ++i) {
            c[i] = static_cast<elem_t>(v % p);
            v /= p;
        }
        c[e] = 1;
        if (c[0] == 0) continue;  // divisible by t
        if (poly_is_irreducible(Polynomial(base, c)))
            return Field::from_verified_modulus(static_cast<std::uint32_t>(p), e, std::move(c));
    }
    throw Error(Errc::InternalInconsistency, "no irreducible polynomial of degree " + std::to_string(e));
}

/// Parses "p^e" or "q" (a prime power) into a field with the default modulus.
inline Field field_from_order_string(const std::string& s) {
    auto parse_u64 = [&](const std::string& t) -> std::uint64_t {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
            throw Error(Errc::Parse, "bad field order '" + s + "'");
        return std::stoull(t);
    };
    const auto caret = s.find('^');
    if (caret != std::string::npos) {
        const std::uint64_t p = parse_u64(s.substr(0, caret));
        const std::uint64_t e = parse_u64(s.substr(caret + 1));
        if (e == 0 || e > 64) throw Error(Errc::BadModulus, "bad extension degree in '" + s + "'");
        return field_create(p, static_cast<std::uint32_t>(e));
    }
    const std::uint64_t q = parse_u64(s);
    if (q < 2) throw Error(Errc::NotPrime, s + " is not a prime power");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw Error(Errc::NotPrime, s + " is not a prime power");
    return field_create(p, e);
}

}  // namespace intertwine

#endif  // INTERTWINE_FIELD_CREATE_HPP
