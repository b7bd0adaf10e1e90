#ifndef INTERTWINE_IO_HPP
#define INTERTWINE_IO_HPP

/// JSON forms of fields, polynomials, matrices, partitions, decompositions,
/// codes and certificates. Elements are written as canonical encodings and
/// keys keep insertion order so output is stable for diffing.
///
///   field:      {"p", "e", "modulus"?}
///   polynomial: {"field", "coeffs": [...] ascending}
///   matrix:     {"field", "rows", "cols", "entries": [[...], ...]}
///   partition:  [int, ...] weakly decreasing
///   code:       {"field", "r", "s", "k", "basis": [matrix...], "d", "d_budget"}

#include <optional>
#include <string>
#include <vector>

#include "intertwine/canonical.hpp"
#include "intertwine/code.hpp"
#include "intertwine/construct.hpp"
#include "intertwine/error.hpp"
#include "intertwine/field_create.hpp"
#include "intertwine/matrix.hpp"
#include "intertwine/partitions.hpp"
#include "intertwine/poly.hpp"
#include "json.hpp"

namespace intertwine::io {

using json = nlohmann::ordered_json;

namespace detail {

inline const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(Errc::Parse, std::string("missing key '") + key + "'");
    return j.at(key);
}

template <class T>
T get_as(const json& j, const char* key) {
    try {
        return member(j, key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Parse, std::string("bad value for '") + key + "': " + e.what());
    }
}

}  // namespace detail

inline json to_json(const Field& f) {
    json j;
    j["p"] = f.p();
    j["e"] = f.e();
    if (f.e() > 1) j["modulus"] = f.modulus();
    return j;
}

inline Field field_from_json(const json& j) {
    const auto p = detail::get_as<std::uint64_t>(j, "p");
    const auto e = j.contains("e") ? detail::get_as<std::uint32_t>(j, "e") : 1u;
    std::optional<std::vector<elem_t>> modulus;
    if (j.contains("modulus") && !j.at("modulus").is_null() && e > 1)
        modulus = detail::get_as<std::vector<elem_t>>(j, "modulus");
    return field_create(p, e, modulus);
}

inline json to_json(const Polynomial& p) {
    json j;
    j["field"] = to_json(p.field());
    j["coeffs"] = p.coeffs();
    return j;
}

inline Polynomial polynomial_from_json(const json& j, const std::optional<Field>& field = {}) {
    const Field f = field ? *field : field_from_json(detail::member(j, "field"));
    return Polynomial(f, detail::get_as<std::vector<elem_t>>(j, "coeffs"));
}

inline json to_json(const Matrix& m) {
    json j;
    j["field"] = to_json(m.field());
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vec(i));
    j["entries"] = std::move(rows);
    return j;
}

/// `field`, when given, overrides (and must equal) the embedded field.
inline Matrix matrix_from_json(const json& j, const std::optional<Field>& field = {}) {
    Field f = j.contains("field") ? field_from_json(j.at("field")) : (field ? *field : throw Error(Errc::Parse, "matrix without field"));
    if (field && *field != f) throw Error(Errc::FieldMismatch, "matrix field differs from the expected " + field->name());
    const auto rows = detail::get_as<std::size_t>(j, "rows");
    const auto cols = detail::get_as<std::size_t>(j, "cols");
    const auto entries = detail::get_as<std::vector<std::vector<elem_t>>>(j, "entries");
    if (entries.size() != rows) throw Error(Errc::Parse, "entries has " + std::to_string(entries.size()) + " rows, expected " + std::to_string(rows));
    std::vector<elem_t> flat;
    for (const auto& row : entries) {
        if (row.size() != cols) throw Error(Errc::Parse, "entries row has wrong length");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    try {
        return Matrix(f, rows, cols, std::move(flat));
    } catch (const Error& e) {
        throw Error(Errc::Parse, e.what());
    }
}

inline json to_json(const Partition& p) { return p.parts(); }

inline Partition partition_from_json(const json& j) {
    try {
        return Partition(j.get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Parse, e.what());
    }
}

inline json to_json(const PrimaryDecomposition& d) {
    json arr = json::array();
    for (const auto& c : d.components) {
        json j;
        j["irr"] = to_json(c.irr);
        j["mult"] = c.mult;
        j["partition"] = to_json(c.partition);
        arr.push_back(std::move(j));
    }
    return arr;
}

inline json to_json(const FactoredPolynomial& fp, const Field& f) {
    json j;
    j["field"] = to_json(f);
    j["unit"] = fp.unit;
    json fs = json::array();
    for (const auto& [g, m] : fp.factors) {
        json e;
        e["factor"] = g.coeffs();
        e["mult"] = m;
        fs.push_back(std::move(e));
    }
    j["factors"] = std::move(fs);
    return j;
}

inline json to_json(const IntertwiningCode& c) {
    json j;
    j["field"] = to_json(c.field());
    j["r"] = c.r();
    j["s"] = c.s();
    j["k"] = c.k();
    json basis = json::array();
    for (const auto& x : c.basis()) basis.push_back(to_json(x));
    j["basis"] = std::move(basis);
    j["d"] = c.distance() ? json(*c.distance()) : json(nullptr);
    j["d_budget"] = c.distance_budget() ? json(*c.distance_budget()) : json(nullptr);
    return j;
}

/// Re-canonicalizes the basis, so hand-written spanning sets are accepted.
inline IntertwiningCode code_from_json(const json& j) {
    const Field f = field_from_json(detail::member(j, "field"));
    const auto r = detail::get_as<std::size_t>(j, "r");
    const auto s = detail::get_as<std::size_t>(j, "s");
    std::vector<Matrix> gens;
    for (const auto& m : detail::member(j, "basis")) gens.push_back(matrix_from_json(m, f));
    IntertwiningCode c = IntertwiningCode::span_of(f, r, s, gens);
    if (j.contains("k") && detail::get_as<std::size_t>(j, "k") != c.k())
        throw Error(Errc::Parse, "declared k does not match the basis rank");
    if (j.contains("d") && !j.at("d").is_null()) {
        const auto budget = j.contains("d_budget") && !j.at("d_budget").is_null() ? detail::get_as<std::uint64_t>(j, "d_budget") : 0;
        c.set_distance(detail::get_as<std::uint64_t>(j, "d"), budget);
    }
    return c;
}

inline json to_json(const ConstructionCertificate& c) {
    json j;
    j["field"] = to_json(c.field);
    j["r"] = c.r;
    j["s"] = c.s;
    j["k"] = c.k;
    j["transposed"] = c.transposed;
    j["A0"] = to_json(c.a0);
    j["B0"] = to_json(c.b0);
    j["zetas"] = c.zetas;
    j["alpha"] = c.alpha ? json(*c.alpha) : json(nullptr);
    j["beta"] = c.beta ? json(*c.beta) : json(nullptr);
    j["gamma"] = c.gamma;
    j["R"] = to_json(c.r_mat);
    j["R_inv"] = to_json(c.r_inv);
    j["S"] = to_json(c.s_mat);
    j["A"] = to_json(c.a);
    j["B"] = to_json(c.b);
    json xs = json::array();
    for (const auto& x : c.x) xs.push_back(to_json(x));
    j["X"] = std::move(xs);
    j["row_blocks"] = c.row_blocks;
    j["claimed_d"] = c.claimed_d;
    return j;
}

inline ConstructionCertificate certificate_from_json(const json& j) {
    ConstructionCertificate c;
    c.field = field_from_json(detail::member(j, "field"));
    const Field& f = c.field;
    c.r = detail::get_as<std::size_t>(j, "r");
    c.s = detail::get_as<std::size_t>(j, "s");
    c.k = detail::get_as<std::size_t>(j, "k");
    c.transposed = j.contains("transposed") && detail::get_as<bool>(j, "transposed");
    c.a0 = matrix_from_json(detail::member(j, "A0"), f);
    c.b0 = matrix_from_json(detail::member(j, "B0"), f);
    c.zetas = detail::get_as<std::vector<elem_t>>(j, "zetas");
    if (j.contains("alpha") && !j.at("alpha").is_null()) c.alpha = detail::get_as<elem_t>(j, "alpha");
    if (j.contains("beta") && !j.at("beta").is_null()) c.beta = detail::get_as<elem_t>(j, "beta");
    c.gamma = detail::get_as<elem_t>(j, "gamma");
    c.r_mat = matrix_from_json(detail::member(j, "R"), f);
    c.r_inv = matrix_from_json(detail::member(j, "R_inv"), f);
    c.s_mat = matrix_from_json(detail::member(j, "S"), f);
    c.a = matrix_from_json(detail::member(j, "A"), f);
    c.b = matrix_from_json(detail::member(j, "B"), f);
    for (const auto& x : detail::member(j, "X")) c.x.push_back(matrix_from_json(x, f));
    c.row_blocks = detail::get_as<std::vector<std::vector<std::size_t>>>(j, "row_blocks");
    c.claimed_d = detail::get_as<std::uint64_t>(j, "claimed_d");
    return c;
}

inline json to_json(const VerificationReport& rep) {
    json j;
    j["passed"] = rep.passed();
    j["skipped"] = rep.any_skipped();
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["name"] = c.name;
        e["status"] = status_name(c.status);
        e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

inline json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Parse, e.what());
    }
}

}  // namespace intertwine::io

#endif  // INTERTWINE_IO_HPP
