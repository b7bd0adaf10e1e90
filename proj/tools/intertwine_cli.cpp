// Command-line front end for intertwining codes.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 mathematical precondition
// violated (or a certificate failed verification), 3 distance budget
// exceeded, 4 internal inconsistency.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "intertwine/intertwine.hpp"
#include "intertwine/io.hpp"

namespace {

using intertwine::Errc;
using intertwine::Error;
using intertwine::Field;
using intertwine::Matrix;
using intertwine::io::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMath = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct RunConfig {
    std::uint64_t seed = 0;
    std::uint64_t budget = intertwine::kDefaultDistanceBudget;
    bool strict = false;
    bool pretty = false;
    std::string out;
};

int exit_code_for(Errc c) {
    switch (c) {
        case Errc::Parse: return kExitUsage;
        case Errc::BudgetExceeded: return kExitBudget;
        case Errc::InternalInconsistency: return kExitInternal;
        default: return kExitMath;
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::Parse, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return intertwine::io::parse(ss.str());
}

void emit(const RunConfig& cfg, const json& j) {
    const std::string text = j.dump(cfg.pretty ? 2 : -1) + "\n";
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out);
    if (!out) throw Error(Errc::Parse, "cannot write '" + cfg.out + "'");
    out << text;
}

struct Pairs {
    std::vector<Matrix> as;
    std::vector<Matrix> bs;
};

Pairs read_pairs(const std::vector<std::string>& files) {
    if (files.empty() || files.size() % 2 != 0)
        throw Error(Errc::Parse, "expected matrix files in A B pairs, got " + std::to_string(files.size()) + " files");
    Pairs p;
    for (std::size_t i = 0; i < files.size(); i += 2) {
        p.as.push_back(intertwine::io::matrix_from_json(read_json_file(files[i])));
        p.bs.push_back(intertwine::io::matrix_from_json(read_json_file(files[i + 1])));
    }
    return p;
}

Field resolve_field(const std::string& order, const std::string& field_file) {
    if (!field_file.empty()) return intertwine::io::field_from_json(read_json_file(field_file));
    if (order.empty()) throw Error(Errc::Parse, "give the field with --q or --field");
    return intertwine::field_from_order_string(order);
}

int cmd_dim(const RunConfig& cfg, const std::vector<std::string>& files) {
    const Pairs p = read_pairs(files);
    const auto code = intertwine::intertwiner_basis(p.as, p.bs);
    json j;
    j["k"] = code.k();
    if (p.as.size() == 1) {
        const auto formula = intertwine::dim_via_formula(p.as[0], p.bs[0], cfg.seed);
        j["formula"] = formula.dim;
        json factors = json::array();
        for (const auto& fc : formula.factors) {
            json e;
            e["irr"] = fc.irr.coeffs();
            e["deg"] = fc.deg;
            e["lambda"] = fc.lambda.parts();
            e["mu"] = fc.mu.parts();
            e["contribution"] = fc.contribution;
            factors.push_back(std::move(e));
        }
        j["factors"] = std::move(factors);
        const bool consistent = formula.dim == static_cast<std::int64_t>(code.k());
        j["consistent"] = consistent;
        emit(cfg, j);
        if (!consistent) {
            std::cerr << "internal error: closed-form dimension " << formula.dim << " != kernel dimension " << code.k()
                      << "\n";
            return kExitInternal;
        }
        return kExitOk;
    }
    json pairwise = json::array();
    for (std::size_t i = 0; i < p.as.size(); ++i) pairwise.push_back(intertwine::intertwiner_basis(p.as[i], p.bs[i]).k());
    j["pairwise_k"] = std::move(pairwise);
    j["note"] = "several pairs: kernel dimension only, no closed formula applies";
    emit(cfg, j);
    return kExitOk;
}

int cmd_basis(const RunConfig& cfg, const std::vector<std::string>& files) {
    const Pairs p = read_pairs(files);
    emit(cfg, intertwine::io::to_json(intertwine::intertwiner_basis(p.as, p.bs)));
    return kExitOk;
}

int cmd_mindist(const RunConfig& cfg, const std::vector<std::string>& files) {
    std::optional<intertwine::IntertwiningCode> code;
    if (files.size() == 1) {
        code = intertwine::io::code_from_json(read_json_file(files[0]));
    } else {
        const Pairs p = read_pairs(files);
        code = intertwine::intertwiner_basis(p.as, p.bs);
    }
    const std::uint64_t enumerated = intertwine::codeword_count(*code, cfg.budget);
    const std::uint64_t d = intertwine::min_distance(*code, cfg.budget);
    json j;
    j["d"] = d;
    j["enumerated"] = enumerated;
    emit(cfg, j);
    return kExitOk;
}

int cmd_bounds(const RunConfig& cfg, const std::vector<std::string>& files) {
    const Pairs p = read_pairs(files);
    if (p.as.size() != 1) throw Error(Errc::Parse, "bounds takes exactly one A B pair");
    const auto spectral = intertwine::bounds_spectral(p.as[0], p.bs[0], cfg.seed);
    const auto rank = intertwine::bounds_rank(p.as[0], p.bs[0]);
    json j;
    j["spectral"] = {{"lo", spectral.lo}, {"hi", spectral.hi}};
    j["rank"] = {{"lo", rank.lo}, {"hi", rank.hi}};
    j["dim"] = intertwine::intertwiner_basis(p.as[0], p.bs[0]).k();
    emit(cfg, j);
    return kExitOk;
}

int cmd_zero(const RunConfig& cfg, const std::vector<std::string>& files) {
    const Pairs p = read_pairs(files);
    if (p.as.size() != 1) throw Error(Errc::Parse, "zero takes exactly one A B pair");
    json j;
    j["zero"] = intertwine::is_zero_code_fast(p.as[0], p.bs[0]);
    j["gcd"] = intertwine::poly_gcd(intertwine::mat_charpoly(p.as[0]), intertwine::mat_charpoly(p.bs[0])).coeffs();
    emit(cfg, j);
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& file) {
    const auto cert = intertwine::io::certificate_from_json(read_json_file(file));
    const auto report = intertwine::verify_certificate(cert, cfg.budget);
    json j = intertwine::io::to_json(report);
    j["warning"] = report.any_skipped();
    emit(cfg, j);
    if (!report.passed()) return kExitMath;
    if (report.any_skipped()) {
        std::cerr << "warning: distance check skipped (budget " << cfg.budget << ")\n";
        return cfg.strict ? kExitBudget : kExitOk;
    }
    return kExitOk;
}

int cmd_factor(const RunConfig& cfg, const std::string& file, const std::string& order, const std::string& coeffs) {
    std::optional<intertwine::Polynomial> poly;
    if (!file.empty()) {
        poly = intertwine::io::polynomial_from_json(read_json_file(file));
    } else {
        const Field f = resolve_field(order, "");
        std::vector<intertwine::elem_t> c;
        std::stringstream ss(coeffs);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw Error(Errc::Parse, "bad coefficient '" + tok + "'");
            c.push_back(static_cast<intertwine::elem_t>(std::stoul(tok)));
        }
        poly = intertwine::Polynomial(f, std::move(c));
    }
    emit(cfg, intertwine::io::to_json(intertwine::poly_factor(*poly, cfg.seed), poly->field()));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct, analyze and verify intertwining codes C(A, B) = {X : A X = X B} over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "Seed for randomized polynomial factorization")->capture_default_str();
    app.add_option("--budget", cfg.budget, "Maximum number of codewords to enumerate")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_flag("--strict", cfg.strict, "Treat a skipped distance check as a failure (exit 3)");
    app.add_flag("--pretty", cfg.pretty, "Indent JSON output");
    app.add_option("--out", cfg.out, "Write output to a file instead of stdout");

    std::vector<std::string> files;
    auto add_pair_cmd = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("files", files, "Matrix JSON files, as A B pairs")->required();
        return sub;
    };
    auto* dim = add_pair_cmd("dim", "Dimension by closed formula and by kernel oracle");
    auto* basis = add_pair_cmd("basis", "Canonical code basis");
    auto* mindist = app.add_subcommand("mindist", "Exhaustive minimum distance of a code JSON or of A B pairs");
    mindist->add_option("files", files, "Code JSON, or matrix JSON files as A B pairs")->required();
    auto* bounds = add_pair_cmd("bounds", "Spectral and rank dimension bounds");
    auto* zero = add_pair_cmd("zero", "Coprimality test for the zero code");

    std::size_t r = 0, s = 0, k = 0;
    std::string order, field_file;
    auto* construct = app.add_subcommand("construct", "Build a code with dimension k and distance floor(r/k)*s");
    construct->add_option("r", r)->required();
    construct->add_option("s", s)->required();
    construct->add_option("k", k)->required();
    auto* extremal = app.add_subcommand("extremal", "Build a code with dimension min(r,s) and distance max(r,s)");
    extremal->add_option("r", r)->required();
    extremal->add_option("s", s)->required();
    for (auto* sub : {construct, extremal}) {
        auto* q_opt = sub->add_option("--q", order, "Field order as q or p^e");
        auto* f_opt = sub->add_option("--field", field_file, "Field JSON file");
        q_opt->excludes(f_opt);
    }

    std::string cert_file;
    auto* verify = app.add_subcommand("verify", "Re-check a construction certificate");
    verify->add_option("certificate", cert_file)->required();

    std::string poly_file, coeffs;
    auto* factor = app.add_subcommand("factor", "Factor a polynomial into monic irreducibles");
    factor->add_option("polynomial", poly_file, "Polynomial JSON file");
    factor->add_option("--q", order, "Field order (with --coeffs)");
    factor->add_option("--coeffs", coeffs, "Comma-separated ascending coefficient encodings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (dim->parsed()) return cmd_dim(cfg, files);
        if (basis->parsed()) return cmd_basis(cfg, files);
        if (mindist->parsed()) return cmd_mindist(cfg, files);
        if (bounds->parsed()) return cmd_bounds(cfg, files);
        if (zero->parsed()) return cmd_zero(cfg, files);
        if (construct->parsed()) {
            emit(cfg, intertwine::io::to_json(intertwine::construct_code(r, s, k, resolve_field(order, field_file))));
            return kExitOk;
        }
        if (extremal->parsed()) {
            emit(cfg, intertwine::io::to_json(intertwine::construct_extremal(r, s, resolve_field(order, field_file))));
            return kExitOk;
        }
        if (verify->parsed()) return cmd_verify(cfg, cert_file);
        if (factor->parsed()) {
            if (poly_file.empty() && (order.empty() || coeffs.empty()))
                throw Error(Errc::Parse, "factor needs a polynomial file or --q with --coeffs");
            return cmd_factor(cfg, poly_file, order, coeffs);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
