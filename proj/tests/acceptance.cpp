// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

using namespace intertwine;
namespace ts = intertwine::test_support;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Sample {
    Matrix a, b;
    std::size_t dim;
};

std::vector<Polynomial> pool_for(const Field& f) {
    std::vector<Polynomial> pool = ts::monic_irreducibles(f, 1);
    for (const auto& p : ts::monic_irreducibles(f, 2)) pool.push_back(p);
    if (f.q() <= 3)
        for (const auto& p : ts::monic_irreducibles(f, 3)) pool.push_back(p);
    return pool;
}

std::vector<Sample> criterion1_samples;

struct ConstructedCode {
    std::size_t r, s, k;
    std::uint64_t q, d;
};
std::vector<ConstructedCode> criterion2_codes;

// Codes whose distance was computed anywhere in the suite, for Singleton.
struct Computed {
    std::size_t n, k;
    std::uint64_t d;
};
std::vector<Computed> computed_codes;

std::uint64_t q_for_min(std::size_t m) {
    for (std::uint64_t q = m + 2;; ++q) {
        std::uint64_t p = 2;
        while (q % p != 0) ++p;
        std::uint64_t v = q;
        while (v % p == 0) v /= p;
        if (v == 1) return q;
    }
}

Outcome dimension_formula() {
    Outcome o;
    std::size_t trials = 0, nonzero = 0, mismatches = 0;
    for (std::uint64_t q : {2, 3, 4, 5, 9}) {
        const Field f = field_from_order_string(std::to_string(q));
        const auto pool = pool_for(f);
        ts::Rng rng(1000 + q);
        for (int t = 0; t < 120; ++t) {
            const std::size_t r = 1 + rng() % 6, s = 1 + rng() % 6;
            const Matrix a = ts::random_test_matrix(f, r, pool, rng);
            const Matrix b = ts::random_test_matrix(f, s, pool, rng);
            const std::size_t oracle = intertwiner_basis(a, b).k();
            const auto formula = dim_via_formula(a, b, rng());
            ++trials;
            nonzero += oracle > 0;
            if (formula.dim != static_cast<std::int64_t>(oracle)) {
                ++mismatches;
                if (o.pass) o.detail = "first mismatch r=" + std::to_string(r) + " s=" + std::to_string(s) + " q=" + std::to_string(q) + "; ";
                o.pass = false;
            }
            criterion1_samples.push_back({a, b, oracle});
        }
    }
    o.detail += std::to_string(trials) + " pairs, " + std::to_string(nonzero) + " with dim > 0, " +
                std::to_string(mismatches) + " mismatches";
    o.pass = o.pass && trials >= 500;
    return o;
}

Outcome construction_theorem() {
    Outcome o;
    std::size_t cases = 0, failures = 0;
    for (std::uint64_t q : {5, 7, 8, 9}) {
        const Field f = field_from_order_string(std::to_string(q));
        for (std::size_t r = 1; r <= 6; ++r)
            for (std::size_t s = 1; s <= 6; ++s)
                for (std::size_t k = 1; k <= std::min(r, s); ++k) {
                    if (q < k + 2 || ts::ipow(q, k) > 100000) continue;
                    ++cases;
                    const auto cert = construct_code(r, s, k, f);
                    const auto code = intertwiner_basis(cert.a, cert.b);
                    const std::uint64_t d = code.k() > 0 ? min_distance(code) : 0;
                    const std::uint64_t want = (r / k) * s;
                    if (code.k() != k || d != want) {
                        ++failures;
                        if (o.pass) {
                            std::ostringstream ss;
                            ss << "first failure (r,s,k,q)=(" << r << "," << s << "," << k << "," << q << "): k=" << code.k()
                               << " d=" << d << " expected d=" << want << "; ";
                            o.detail = ss.str();
                        }
                        o.pass = false;
                    }
                    criterion2_codes.push_back({r, s, k, q, d});
                    computed_codes.push_back({r * s, code.k(), d});
                }
    }
    o.detail += std::to_string(cases) + " parameter sets, " + std::to_string(failures) + " failures";
    return o;
}

Outcome extremal_corollary() {
    Outcome o;
    std::size_t cases = 0, failures = 0;
    for (std::size_t r = 1; r <= 5; ++r)
        for (std::size_t s = 1; s <= 5; ++s) {
            const std::uint64_t q = q_for_min(std::min(r, s));
            const Field f = field_from_order_string(std::to_string(q));
            const auto cert = construct_extremal(r, s, f);
            const auto code = intertwiner_basis(cert.a, cert.b);
            const std::uint64_t d = code.k() > 0 ? min_distance(code) : 0;
            ++cases;
            computed_codes.push_back({r * s, code.k(), d});
            if (code.k() != std::min(r, s) || d != std::max(r, s)) {
                ++failures;
                if (o.pass) {
                    std::ostringstream ss;
                    ss << "first failure r=" << r << " s=" << s << " q=" << q << ": k=" << code.k() << " d=" << d << "; ";
                    o.detail = ss.str();
                }
                o.pass = false;
            }
        }
    o.detail += std::to_string(cases) + " shapes with q in {3,4,5,7}, " + std::to_string(failures) + " failures";
    return o;
}

Outcome partition_identity() {
    Outcome o;
    ts::Rng rng(4);
    std::size_t failures = 0;
    for (int t = 0; t < 1000; ++t) {
        std::vector<Partition> ps;
        const std::size_t count = 1 + rng() % 4;
        for (std::size_t i = 0; i < count; ++i) ps.push_back(ts::random_partition(static_cast<int>(rng() % 31), rng));
        if (minsum(ps) != ts::minsum_literal(ps) || conjprod(ps) != ts::minsum_literal(ps)) ++failures;
    }
    o.pass = failures == 0;
    o.detail = "1000 tuples, " + std::to_string(failures) + " failures";
    return o;
}

Outcome bounds_sandwich() {
    Outcome o;
    std::size_t violations = 0;
    ts::Rng rng(5);
    for (const auto& smp : criterion1_samples) {
        const auto dim = static_cast<std::int64_t>(smp.dim);
        const auto sp = bounds_spectral(smp.a, smp.b, rng());
        const auto rk = bounds_rank(smp.a, smp.b);
        if (!(sp.lo <= dim && dim <= sp.hi && rk.lo <= dim && dim <= rk.hi)) ++violations;
    }
    std::ostringstream ss;
    ss << "sandwich: " << criterion1_samples.size() << " samples, " << violations << " violations; tightness for N_n vs N_n:";
    std::vector<std::string> untight;
    for (std::uint64_t q : {2, 3, 5}) {
        const Field f = field_create(q, 1);
        for (int n = 1; n <= 6; ++n) {
            const Matrix nn = nilpotent_matrix(f, Partition({n}));
            const auto dim = static_cast<std::int64_t>(intertwiner_basis(nn, nn).k());
            const auto hi = bounds_rank(nn, nn).hi;
            if (dim != hi && q == 2) untight.push_back("n=" + std::to_string(n) + " dim " + std::to_string(dim) + " vs hi " + std::to_string(hi));
            if (dim != hi) o.pass = false;
        }
    }
    if (untight.empty()) {
        ss << " equal for n=1..6";
    } else {
        for (const auto& u : untight) ss << " [" << u << "]";
    }
    o.pass = o.pass && violations == 0;
    o.detail = ss.str();
    return o;
}

Outcome worked_example() {
    Outcome o;
    const Field f2 = field_create(2, 1);
    // least irreducible cubic over GF(2) in canonical order
    Polynomial p(f2);
    for (const auto& c : ts::monic_irreducibles(f2, 3)) {
        p = c;
        break;
    }
    const Matrix a = generalized_jordan_matrix(p, Partition({3}));
    const auto formula = dim_via_formula(a, a);
    const std::size_t oracle = intertwiner_basis(a, a).k();
    o.pass = p == Polynomial(f2, {1, 1, 0, 1}) && formula.dim == 9 && oracle == 9 && formula.factors.size() == 1 &&
             formula.factors[0].contribution == 9;
    o.detail = "p = " + p.to_string() + ", formula " + std::to_string(formula.dim) + ", oracle " + std::to_string(oracle);
    return o;
}

Outcome invariance_suite() {
    Outcome o;
    constexpr int kTrials = 120;
    std::vector<std::pair<std::string, std::size_t>> failures;
    auto run = [&](const std::string& name, const std::function<bool(ts::Rng&)>& check) {
        ts::Rng rng(std::hash<std::string>{}(name) & 0xffff);
        std::size_t bad = 0;
        for (int t = 0; t < kTrials; ++t) bad += !check(rng);
        failures.emplace_back(name, bad);
        if (bad) o.pass = false;
    };
    const Field f3 = field_create(3, 1), f2 = field_create(2, 1), f4 = field_create(2, 2), f5 = field_create(5, 1);
    const auto pool3 = pool_for(f3), pool2 = pool_for(f2), pool5 = pool_for(f5);
    auto pair = [](const Field& f, const std::vector<Polynomial>& pool, std::size_t max, ts::Rng& rng) {
        const std::size_t r = 1 + rng() % max, s = 1 + rng() % max;
        return std::make_pair(ts::random_test_matrix(f, r, pool, rng), ts::random_test_matrix(f, s, pool, rng));
    };

    run("shift", [&](ts::Rng& rng) {
        const auto [a, b] = pair(f5, pool5, 5, rng);
        const elem_t alpha = ts::random_elem(f5, rng);
        return intertwiner_basis(a, b) ==
               intertwiner_basis(a - Matrix::scalar(f5, a.rows(), alpha), b - Matrix::scalar(f5, b.rows(), alpha));
    });
    run("conjugation", [&](ts::Rng& rng) {
        const auto [a, b] = pair(f3, pool3, 5, rng);
        const Matrix r = ts::random_invertible(f3, a.rows(), rng), s = ts::random_invertible(f3, b.rows(), rng);
        return code_conjugate(intertwiner_basis(a, b), r, s) ==
               intertwiner_basis(mat_inverse(r) * a * r, mat_inverse(s) * b * s);
    });
    run("extension", [&](ts::Rng& rng) {
        const auto [a, b] = pair(f2, pool2, 5, rng);
        return intertwiner_basis(a, b).k() ==
               intertwiner_basis(embed_prime_subfield(a, f4), embed_prime_subfield(b, f4)).k();
    });
    run("direct_sum", [&](ts::Rng& rng) {
        const auto [a1, b1] = pair(f3, pool3, 3, rng);
        const auto [a2, b2] = pair(f3, pool3, 3, rng);
        std::size_t sum = 0;
        for (const Matrix* a : {&a1, &a2})
            for (const Matrix* b : {&b1, &b2}) sum += intertwiner_basis(*a, *b).k();
        return intertwiner_basis(mat_direct_sum(a1, a2), mat_direct_sum(b1, b2)).k() == sum;
    });
    run("transpose", [&](ts::Rng& rng) {
        const auto [a, b] = pair(f3, pool3, 4, rng);
        const auto c = intertwiner_basis(a, b);
        const auto ct = intertwiner_basis(b.transpose(), a.transpose());
        if (!(c.transpose() == ct)) return false;
        if (c.k() == 0 || ts::ipow(3, c.k()) > 20000) return true;
        const auto d = min_distance(c);
        computed_codes.push_back({c.n(), c.k(), d});
        return d == min_distance(ct);
    });
    run("zero_test", [&](ts::Rng& rng) {
        const auto [a, b] = pair(f2, pool2, 5, rng);
        return is_zero_code_fast(a, b) == (intertwiner_basis(a, b).k() == 0);
    });

    std::ostringstream ss;
    ss << kTrials << " instances each:";
    for (const auto& [name, bad] : failures) ss << " " << name << "=" << (bad ? std::to_string(bad) + " bad" : "ok");
    o.detail = ss.str();
    return o;
}

Outcome rate_distance() {
    Outcome o;
    std::size_t rd_fail = 0, singleton_fail = 0, equalities = 0;
    for (const auto& c : criterion2_codes) {
        // R d = k d / (r s)
        const std::uint64_t kd = c.k * c.d, n = c.r * c.s;
        const bool ok = kd <= n && ((kd == n) == (c.r % c.k == 0));
        equalities += kd == n;
        rd_fail += !ok;
    }
    for (const auto& c : computed_codes) singleton_fail += !(c.d + c.k <= c.n + 1);
    o.pass = rd_fail == 0 && singleton_fail == 0 && !criterion2_codes.empty();
    o.detail = std::to_string(criterion2_codes.size()) + " certificates (" + std::to_string(equalities) + " with R*d = 1), " +
               std::to_string(rd_fail) + " rate-distance failures; Singleton on " + std::to_string(computed_codes.size()) +
               " codes, " + std::to_string(singleton_fail) + " failures";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*fn)();
    };
    const Criterion criteria[] = {
        {"1 dimension formula vs kernel oracle", dimension_formula},
        {"2 construction theorem k and d", construction_theorem},
        {"3 extremal corollary", extremal_corollary},
        {"4 partition identity", partition_identity},
        {"5 bounds sandwich", bounds_sandwich},
        {"6 worked 9x9 example", worked_example},
        {"7 invariance suite", invariance_suite},
        {"8 rate-distance and Singleton", rate_distance},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  [%s] %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
