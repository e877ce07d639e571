#include "cli.hpp"

#include "qdg/coefficients.hpp"
#include "qdg/coideal.hpp"
#include "qdg/errors.hpp"
#include "qdg/export.hpp"
#include "qdg/ncpoly.hpp"
#include "qdg/rewrite.hpp"
#include "qdg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace qdg::cli {

namespace {

// Relation words have 3r+1 letters and must fit a 64-letter word.
constexpr int kMaxOrder = 21;
// Tensor products are dense 2^L matrices.
constexpr int kMaxSites = 6;

struct RunConfig {
    int r = 0;
    int r_max = 0;
    std::string route = "genfun";
    std::string family = "1";
    std::string format = "json";
    std::string out_path;
    int sites = 0;
    std::string t = "3/2";
    std::string v;
    std::string c0 = "1", c1 = "3", cbar0 = "2", cbar1 = "1/2", eps0 = "1", eps1 = "-1";
    std::string rho0, rho1;
    std::string coproduct = "left";
    bool trace = false;
    bool include_literal = false;
    std::string expression;
    std::string sabotage;
};

/// Usage problems detected after flag parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Sabotage {
    int r, p, j;
    long delta;
};

std::optional<Sabotage> parse_sabotage(const std::string& spec) {
    if (spec.empty()) return std::nullopt;
    Sabotage s{};
    char sign = 0;
    char tail = 0;
    if (std::sscanf(spec.c_str(), "c:%d,%d,%d:%c%ld%c", &s.r, &s.p, &s.j, &sign, &s.delta, &tail) != 5 ||
        (sign != '+' && sign != '-'))
        throw UsageError("--sabotage expects c:R,P,J:+K or c:R,P,J:-K");
    if (sign == '-') s.delta = -s.delta;
    return s;
}

std::vector<int> families(const std::string& f) {
    if (f == "both") return {1, 2};
    return {f == "2" ? 2 : 1};
}

Route route_of(const std::string& name) { return *parse_route(name); }

Rational rational_flag(const std::string& name, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw UsageError("invalid rational for " + name + ": '" + text + "'");
    }
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + cfg.out_path);
    file << text;
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
    CoeffTable table = coefficients_for(route_of(cfg.route), cfg.r);
    std::string text = cfg.format == "csv"     ? coeff_table_csv(table)
                       : cfg.format == "latex" ? coeff_table_latex(table)
                                               : coeff_table_json(table);
    emit(cfg, out, text);
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err,
               const std::optional<Sabotage>& sabotage) {
    const Route route = route_of(cfg.route);
    const int lo = cfg.r > 0 ? cfg.r : 1;
    const int hi = cfg.r > 0 ? cfg.r : cfg.r_max;
    if (hi < 1) throw UsageError("verify needs --r-max or --r");
    std::ostringstream reports;
    bool all_zero = true;
    for (int r = lo; r <= hi; ++r) {
        CoeffTable table = coefficients_for(route, r);
        if (sabotage && sabotage->r == r) {
            if (!table.in_range(sabotage->p, sabotage->j)) throw UsageError("--sabotage index out of range");
            table.set(sabotage->p, sabotage->j, table.at(sabotage->p, sabotage->j) + LaurentPoly(sabotage->delta));
        }
        for (int family : families(cfg.family)) {
            VerificationReport rep = verify_relation(table, family);
            reports << report_json(rep) << '\n';
            if (rep.zero) continue;
            all_zero = false;
            std::string residual = rep.residual.to_string() + "\n";
            if (cfg.out_path.empty()) {
                err << "residual r=" << r << " family=" << family << ": " << residual;
            } else {
                std::string path = cfg.out_path + ".residual-r" + std::to_string(r) +
                                   (family == 2 ? "-f2" : "") + ".txt";
                std::ofstream(path, std::ios::binary) << residual;
            }
        }
    }
    emit(cfg, out, reports.str());
    return all_zero ? kOk : kRelationFailure;
}

int cmd_cross_check(const RunConfig& cfg, std::ostream& out) {
    if (cfg.r_max < 1) throw UsageError("cross-check needs --r-max");
    CrossCheckReport rep = cross_check_routes(cfg.r_max, cfg.include_literal);
    emit(cfg, out, cross_check_json(rep));
    return rep.agree() ? kOk : kRelationFailure;
}

int cmd_matrix_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    CoidealParams params;
    params.t = rational_flag("--t", cfg.t);
    params.c0 = rational_flag("--c0", cfg.c0);
    params.c1 = rational_flag("--c1", cfg.c1);
    params.cbar0 = rational_flag("--cbar0", cfg.cbar0);
    params.cbar1 = rational_flag("--cbar1", cfg.cbar1);
    params.eps0 = rational_flag("--eps0", cfg.eps0);
    params.eps1 = rational_flag("--eps1", cfg.eps1);
    params.sites.clear();
    if (!cfg.v.empty()) {
        std::stringstream ss(cfg.v);
        for (std::string item; std::getline(ss, item, ',');) params.sites.push_back(rational_flag("--v", item));
        if (cfg.sites > 0 && static_cast<std::size_t>(cfg.sites) != params.sites.size())
            throw UsageError("--v lists " + std::to_string(params.sites.size()) + " values but --sites is " +
                             std::to_string(cfg.sites));
    } else {
        for (int s = 1; s <= std::max(cfg.sites, 1); ++s) params.sites.emplace_back(s);
    }
    try {
        params.validate();
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    const Rational rho0 = cfg.rho0.empty() ? params.rho0() : rational_flag("--rho0", cfg.rho0);
    const Rational rho1 = cfg.rho1.empty() ? params.rho1() : rational_flag("--rho1", cfg.rho1);
    const Coproduct cp = cfg.coproduct == "right" ? Coproduct::Right : Coproduct::Left;
    const CoidealPair pair = coideal_generators(params, cp);

    nlohmann::ordered_json doc;
    doc["sites"] = params.sites.size();
    doc["t"] = to_string(params.t);
    doc["q"] = to_string(params.q());
    doc["rho0"] = to_string(rho0);
    doc["rho1"] = to_string(rho1);
    const bool gate = check_qdg(pair.A, pair.Astar, pair.q, rho0, rho1);
    doc["gate"] = gate;
    doc["relations"] = nlohmann::ordered_json::array();
    if (!gate) {
        emit(cfg, out, doc.dump() + "\n");
        err << "matrix gate failed: defining relations do not hold for these parameters\n";
        return kMatrixGate;
    }
    const int r_max = cfg.r > 0 ? cfg.r : 3;
    const Route route = route_of(cfg.route);
    bool all_zero = true;
    for (int r = 1; r <= r_max; ++r) {
        const CoeffTable table = coefficients_for(route, r);
        for (int family : families(cfg.family)) {
            bool zero = eval_ncpoly(build_relation_lhs(table, family), pair, params.q(), rho0, rho1).is_zero();
            all_zero = all_zero && zero;
            doc["relations"].push_back({{"r", r}, {"family", family}, {"zero", zero}});
        }
    }
    emit(cfg, out, doc.dump() + "\n");
    return all_zero ? kOk : kRelationFailure;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    NcPoly x;
    try {
        x = parse_expression(cfg.expression);
    } catch (const ParseError& e) {
        throw UsageError(std::string("cannot parse expression: ") + e.what());
    } catch (const std::length_error& e) {
        throw UsageError(std::string("cannot parse expression: ") + e.what());
    }
    NcPoly result;
    if (cfg.trace) {
        ReductionTrace trace;
        result = normal_form_stepwise(x, &trace);
        err << trace.to_text();
    } else {
        result = normal_form(x);
    }
    emit(cfg, out, result.to_string() + "\n");
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Higher-order q-Dolan-Grady relations: coefficients, verification, matrix checks"};
    app.require_subcommand(1);
    RunConfig cfg;
    const std::vector<std::string> routes{"genfun", "closed", "closed-literal", "recursion", "lusztig"};

    auto* coeffs = app.add_subcommand("coeffs", "Print the coefficient table c_j^{[r,p]}");
    coeffs->add_option("--r", cfg.r, "Relation order r")->required()->check(CLI::Range(1, kMaxOrder));
    coeffs->add_option("--route", cfg.route, "Coefficient route")->check(CLI::IsMember(routes));
    coeffs->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "latex"}));
    coeffs->add_option("--out", cfg.out_path, "Output file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "Reduce the relations to normal form and check they vanish");
    verify->add_option("--r-max", cfg.r_max, "Verify r = 1..r-max")->check(CLI::Range(1, kMaxOrder));
    verify->add_option("--r", cfg.r, "Verify a single r")->check(CLI::Range(1, kMaxOrder));
    verify->add_option("--route", cfg.route, "Coefficient route")->check(CLI::IsMember(routes));
    verify->add_option("--family", cfg.family, "Relation family")->check(CLI::IsMember({"1", "2", "both"}));
    verify->add_option("--out", cfg.out_path, "Report file (default: stdout)");
#ifdef QDG_TEST_HOOKS
    verify->add_option("--sabotage", cfg.sabotage, "Perturb one coefficient: c:R,P,J:+K");
#endif

    auto* cross = app.add_subcommand("cross-check", "Compare the coefficient routes entrywise");
    cross->add_option("--r-max", cfg.r_max, "Compare r = 1..r-max")->required()->check(CLI::Range(1, kMaxOrder));
    cross->add_flag("--include-literal", cfg.include_literal, "Also compare the literal closed form");
    cross->add_option("--out", cfg.out_path, "Output file (default: stdout)");

    auto* matrix = app.add_subcommand("matrix-check", "Evaluate the relations on exact matrix realizations");
    matrix->add_option("--sites", cfg.sites, "Number of tensor factors")->check(CLI::Range(1, kMaxSites));
    matrix->add_option("--t", cfg.t, "Rational t with q = t^2");
    matrix->add_option("--v", cfg.v, "Comma-separated spectral parameters");
    matrix->add_option("--r", cfg.r, "Check relations r = 1..r (default 3)")->check(CLI::Range(1, kMaxOrder));
    matrix->add_option("--route", cfg.route, "Coefficient route")->check(CLI::IsMember(routes));
    matrix->add_option("--family", cfg.family, "Relation family")->check(CLI::IsMember({"1", "2", "both"}));
    matrix->add_option("--c0", cfg.c0);
    matrix->add_option("--c1", cfg.c1);
    matrix->add_option("--cbar0", cfg.cbar0);
    matrix->add_option("--cbar1", cfg.cbar1);
    matrix->add_option("--eps0", cfg.eps0);
    matrix->add_option("--eps1", cfg.eps1);
    matrix->add_option("--rho0", cfg.rho0, "Override rho0 (default c0*cbar0*(q+1/q)^2)");
    matrix->add_option("--rho1", cfg.rho1, "Override rho1 (default c1*cbar1*(q+1/q)^2)");
    matrix->add_option("--coproduct", cfg.coproduct, "Coproduct convention")
        ->check(CLI::IsMember({"left", "right"}));
    matrix->add_option("--out", cfg.out_path, "Output file (default: stdout)");

    auto* reduce = app.add_subcommand("reduce", "Print the normal form of an expression");
    reduce->add_option("expression", cfg.expression, "Expression such as \"A^3 A*\"")->required();
    reduce->add_flag("--trace", cfg.trace, "Print each rewriting step to stderr");
    reduce->add_option("--out", cfg.out_path, "Output file (default: stdout)");

    std::vector<char*> argv;
    for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (*coeffs) return cmd_coeffs(cfg, out);
        if (*verify) return cmd_verify(cfg, out, err, parse_sabotage(cfg.sabotage));
        if (*cross) return cmd_cross_check(cfg, out);
        if (*matrix) return cmd_matrix_check(cfg, out, err);
        if (*reduce) return cmd_reduce(cfg, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IntegrityError& e) {
        err << "integrity error: " << e.what() << '\n';
        return kIntegrity;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kIntegrity;
    }
    return kUsage;
}

}  // namespace qdg::cli
