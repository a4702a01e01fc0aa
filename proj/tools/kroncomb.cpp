/* kroncomb: compute partition statistics, Littlewood-Richardson and
 * Kronecker coefficients, q-series, and symmetric-group character values,
 * or run a verification suite over a parameter grid.
 *
 * Exit codes: 0 = success / all checks passed, 1 = at least one check
 * failed, 2 = usage error (including size-guard refusals).
 */

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "kroncomb/characters.hpp"
#include "kroncomb/kronecker.hpp"
#include "kroncomb/partition.hpp"
#include "kroncomb/qseries.hpp"
#include "kroncomb/statistics.hpp"
#include "kroncomb/tableaux.hpp"
#include "kroncomb/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace kroncomb;

constexpr std::int64_t kGenericLrGuard = 16;   // largest |lambda| for LR-backed routes
constexpr std::int64_t kOracleGuard = 12;      // largest n for the character oracle

struct GuardRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json coefficients_json(const IntPolynomial& p) {
    return Json(p.coeffs());
}

void emit_compute(const std::string& command, const Json& parameters, const Json& result,
                  const std::string& format) {
    if (format == "csv")
        throw std::invalid_argument("--format csv applies to verify reports only");
    if (format == "text") {
        std::cout << "command: " << command << '\n';
        for (const auto& [key, value] : parameters.items())
            std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                      << '\n';
        for (const auto& [key, value] : result.items()) {
            std::cout << key << ":";
            if (value.is_array()) {
                for (const auto& item : value)
                    std::cout << ' ' << item.dump();
                std::cout << '\n';
            } else {
                std::cout << ' ' << (value.is_string() ? value.get<std::string>() : value.dump())
                          << '\n';
            }
        }
        return;
    }
    Json out;
    out["command"] = command;
    out["parameters"] = parameters;
    out["result"] = result;
    std::cout << out.dump() << '\n';
}

int default_jobs() {
    if (const char* env = std::getenv("KRONCOMB_JOBS")) {
        const int parsed = std::atoi(env);
        if (parsed >= 1)
            return parsed;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition statistics, LR and Kronecker coefficients, q-series, and "
                 "verification suites for their unimodality properties"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    bool no_guard = false;
    app.add_flag("--unsafe-no-guard", no_guard, "lift the size guards (may run very long)");

    std::string lambda_text, mu_text, nu_text, alpha_text, beta_text, rho_text, check_id;
    std::int64_t l = 0, m = 0, r = 0;

    CLI::App* cmd_lr = app.add_subcommand("lr", "LR coefficient c^lambda_{alpha beta}");
    cmd_lr->add_option("lambda", lambda_text, "outer partition, e.g. [5,5,3,2]")->required();
    cmd_lr->add_option("alpha", alpha_text, "inner partition")->required();
    cmd_lr->add_option("beta", beta_text, "type partition")->required();

    CLI::App* cmd_kron = app.add_subcommand(
        "kron", "Kronecker coefficient g(lambda, mu, nu); nu two-row or hook uses the "
                "LR-difference route, anything else the character oracle");
    cmd_kron->add_option("lambda", lambda_text)->required();
    cmd_kron->add_option("mu", mu_text)->required();
    cmd_kron->add_option("nu", nu_text)->required();

    CLI::App* cmd_qbinom = app.add_subcommand("qbinom", "Gaussian binomial coefficient array");
    cmd_qbinom->add_option("l", l, "rows")->required();
    cmd_qbinom->add_option("m", m, "columns")->required();

    CLI::App* cmd_almkvist =
        app.add_subcommand("almkvist", "coefficients of (1+q)(1+q^3)...(1+q^{2m-1})");
    cmd_almkvist->add_option("m", m)->required();

    CLI::App* cmd_bpoly =
        app.add_subcommand("bpoly", "coefficients of (1+q^2+...+q^N)(1+q)(1+q^3)...(1+q^{2m-1})");
    cmd_bpoly->add_option("m", m)->required();

    CLI::App* cmd_pstat = app.add_subcommand(
        "pstat", "corner-binomial counts: coefficient n is the sum of C(v(alpha), r) over "
                 "partitions alpha of n inside l x m");
    cmd_pstat->add_option("l", l)->required();
    cmd_pstat->add_option("m", m)->required();
    cmd_pstat->add_option("r", r)->required();

    CLI::App* cmd_char = app.add_subcommand("char", "character value chi^lambda[rho]");
    cmd_char->add_option("lambda", lambda_text)->required();
    cmd_char->add_option("rho", rho_text, "cycle type")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string known;
    for (const auto& id : kroncomb::verify::known_checks())
        known += (known.empty() ? "" : ", ") + id;
    cmd_verify->add_option("check_id", check_id, "one of: " + known)->required();
    verify::GridOptions grid;
    std::optional<std::int64_t> exact_l, exact_m, exact_n;
    cmd_verify->add_option("--l-min", grid.l_min);
    cmd_verify->add_option("--l-max", grid.l_max);
    cmd_verify->add_option("--m-min", grid.m_min);
    cmd_verify->add_option("--m-max", grid.m_max);
    cmd_verify->add_option("--n-min", grid.n_min);
    cmd_verify->add_option("--n-max", grid.n_max);
    cmd_verify->add_option("--r-max", grid.r_max);
    cmd_verify->add_option("--l", exact_l, "shorthand for --l-min N --l-max N");
    cmd_verify->add_option("--m", exact_m, "shorthand for --m-min N --m-max N");
    cmd_verify->add_option("--n", exact_n, "shorthand for --n-min N --n-max N");
    cmd_verify->add_option("--z", grid.z, "Gamma-statistic parameter (z >= 1)");
    grid.jobs = default_jobs();
    cmd_verify->add_option("--jobs", grid.jobs, "parallel grid evaluation")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (*cmd_lr) {
            const Partition lambda = Partition::parse(lambda_text);
            const Partition alpha = Partition::parse(alpha_text);
            const Partition beta = Partition::parse(beta_text);
            if (!no_guard && lambda.size() > kGenericLrGuard)
                throw GuardRefusal("lr: size guard |lambda| <= 16 exceeded (|lambda| = " +
                                   std::to_string(lambda.size()) +
                                   "); pass --unsafe-no-guard to override");
            LrContext lr;
            const std::int64_t c = lr.lr_coefficient(lambda, alpha, beta);
            emit_compute("lr",
                         Json{{"lambda", lambda.to_string()}, {"alpha", alpha.to_string()},
                              {"beta", beta.to_string()}},
                         Json{{"coefficient", c}}, format);
        } else if (*cmd_kron) {
            const Partition lambda = Partition::parse(lambda_text);
            const Partition mu = Partition::parse(mu_text);
            const Partition nu = Partition::parse(nu_text);
            const std::int64_t n = lambda.size();
            if (mu.size() != n || nu.size() != n)
                throw std::invalid_argument("kron requires |lambda| = |mu| = |nu|");
            std::string route;
            std::int64_t g = 0;
            const bool two_row = nu.length() <= 2;
            const bool hook = nu.length() >= 1 && nu.part(1) <= 1;
            if (two_row || hook) {
                if (!no_guard && n > kGenericLrGuard)
                    throw GuardRefusal("kron: size guard n <= 16 for the LR route exceeded (n = " +
                                       std::to_string(n) +
                                       "); pass --unsafe-no-guard to override");
                LrContext lr;
                if (nu.empty()) {  // n = 0: empty partitions all around
                    route = "two-row";
                    g = lambda == mu ? 1 : 0;
                } else if (two_row) {
                    route = "two-row";
                    const std::int64_t k = nu.part(1);
                    g = k == 0 ? (lambda == mu ? 1 : 0) : two_row_kronecker(lr, lambda, mu, k);
                } else {
                    route = "hook";
                    const std::int64_t k = n - nu.part(0);
                    g = k == 0 ? (lambda == mu ? 1 : 0) : hook_kronecker(lr, lambda, mu, k);
                }
            } else {
                route = "character-oracle";
                if (!no_guard && n > kOracleGuard)
                    throw GuardRefusal("kron: size guard n <= 12 for the character oracle "
                                       "exceeded (n = " + std::to_string(n) +
                                       "); pass --unsafe-no-guard to override");
                CharacterContext chars;
                g = chars.kronecker(lambda, mu, nu);
            }
            emit_compute("kron",
                         Json{{"lambda", lambda.to_string()}, {"mu", mu.to_string()},
                              {"nu", nu.to_string()}},
                         Json{{"coefficient", g}, {"route", route}}, format);
        } else if (*cmd_qbinom) {
            emit_compute("qbinom", Json{{"l", l}, {"m", m}},
                         Json{{"coefficients", coefficients_json(q_binomial(l, m))}}, format);
        } else if (*cmd_almkvist) {
            emit_compute("almkvist", Json{{"m", m}},
                         Json{{"coefficients", coefficients_json(almkvist_poly(m))}}, format);
        } else if (*cmd_bpoly) {
            emit_compute("bpoly", Json{{"m", m}},
                         Json{{"coefficients", coefficients_json(b_poly(m))}}, format);
        } else if (*cmd_pstat) {
            std::vector<std::int64_t> coeffs;
            for (std::int64_t n = 0; n <= l * m; ++n)
                coeffs.push_back(p_stat(l, m, n, r));
            emit_compute("pstat", Json{{"l", l}, {"m", m}, {"r", r}},
                         Json{{"coefficients", Json(coeffs)}}, format);
        } else if (*cmd_char) {
            const Partition lambda = Partition::parse(lambda_text);
            const Partition rho = Partition::parse(rho_text);
            CharacterContext chars;
            emit_compute("char",
                         Json{{"lambda", lambda.to_string()}, {"rho", rho.to_string()}},
                         Json{{"value", chars.character(lambda, CycleType(rho))}}, format);
        } else if (*cmd_verify) {
            if (exact_l) grid.l_min = grid.l_max = *exact_l;
            if (exact_m) grid.m_min = grid.m_max = *exact_m;
            if (exact_n) grid.n_min = grid.n_max = *exact_n;
            grid.no_guard = no_guard;
            if (grid.z < 1.0)
                throw std::invalid_argument("--z must be >= 1");
            const auto reports = verify::run_check(check_id, grid);
            if (format == "csv") {
                std::cout << verify::to_csv(reports);
            } else if (format == "text") {
                for (const auto& rep : reports)
                    std::cout << verify::to_text_line(rep) << '\n';
            } else {
                for (const auto& rep : reports)
                    std::cout << rep.to_json().dump() << '\n';
            }
            std::size_t failed = 0;
            for (const auto& rep : reports)
                if (rep.status == verify::Status::fail)
                    ++failed;
            std::cerr << check_id << ": " << reports.size() << " points, " << failed
                      << " failed\n";
            return verify::all_passed(reports) ? 0 : 1;
        }
    } catch (const GuardRefusal& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
