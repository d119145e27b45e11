#include "exsys/json_io.hpp"
#include "exsys/parse.hpp"
#include "exsys/schubert.hpp"
#include "exsys/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace exsys;

namespace {

constexpr int exit_usage = 3;

struct Common {
    std::string semiring = "nat";
    std::optional<int> n;
    bool json_out = false;

    RankBound bound() const { return RankBound{n}; }
};

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

template <Semiring S>
std::string format_series(const BiSeries<S>& s) {
    std::string out;
    for (auto [z, w] : s.support()) {
        out += "  z^" + std::to_string(z) + " w^" + std::to_string(w) + ": " + format_wedge(s.coefficient(z, w)) + '\n';
    }
    if (out.empty()) out = "  0\n";
    return out;
}

int run_normal_form(const Common& c, const std::string& expr, const std::string& strategy, bool eager) {
    return with_semiring(c.semiring, [&]<class S>(S) {
        auto parsed = parse_expression<S>(expr, {c.bound()});
        print_warnings(parsed.warnings);
        NormalFormOptions opts;
        opts.strategy = strategy == "rightmost" ? RewriteStrategy::rightmost : RewriteStrategy::leftmost;
        opts.eager_kill = eager;
        auto nf = normal_form(parsed.value, BilinearForm<S>::kronecker(), opts);
        if (c.json_out) {
            json j = json::object();
            for (const auto& [w, coeff] : nf) j[format_mixed_word(w)] = pair_to_json(coeff);
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << format_mixed(nf) << '\n';
        }
        return 0;
    });
}

template <Semiring S>
void emit_wedge(const Common& c, const Wedge<S>& u) {
    if (c.json_out)
        std::cout << wedge_to_json(u).dump(2) << '\n';
    else
        std::cout << format_wedge(u) << '\n';
}

int run_wedge(const Common& c, const std::string& expr) {
    return with_semiring(c.semiring, [&]<class S>(S) {
        std::vector<std::string> warnings;
        auto u = parse_wedge<S>(expr, &warnings, {c.bound()});
        print_warnings(warnings);
        emit_wedge(c, u);
        return 0;
    });
}

int run_contract(const Common& c, int d, const std::string& expr) {
    return with_semiring(c.semiring, [&]<class S>(S) {
        std::vector<std::string> warnings;
        auto u = parse_wedge<S>(expr, &warnings, {c.bound()});
        print_warnings(warnings);
        emit_wedge(c, contract(d, u, BilinearForm<S>::kronecker()));
        return 0;
    });
}

int run_schubert(const Common& c, int r, const std::string& lambda_text, std::optional<int> sigma) {
    const Partition lambda = parse_partition(lambda_text);
    return with_semiring(c.semiring, [&]<class S>(S) {
        auto u = truncate_rank(schubert_basis<S>(r, lambda), c.bound());
        emit_wedge(c, sigma ? sigma_component(*sigma, u, c.bound()) : u);
        return 0;
    });
}

int run_expand_main(const Common& c, int r, const std::string& lambda_text, int zmax, int wmax,
                    const std::string& prefactor_name) {
    const Partition lambda = parse_partition(lambda_text);
    CheckConfig cfg;
    cfg.semirings = {c.semiring};
    cfg.bound = c.bound();
    cfg.rmax = r;
    cfg.zmax = zmax;
    cfg.wmax = wmax;
    const Prefactor prefactor = prefactor_name == "w_neg" ? Prefactor::w_neg : Prefactor::w_pos;
    return with_semiring(c.semiring, [&]<class S>(S) {
        auto sides = main_theorem_sides<S>(cfg, r, lambda, prefactor);
        auto report = check_main_theorem<S>(cfg, r, lambda, prefactor);
        if (c.json_out) {
            std::cout << json{{"schema_version", report_schema_version},
                              {"lhs", series_to_json(sides.lhs)},
                              {"rhs", series_to_json(sides.rhs)},
                              {"report", report_to_json(report)}}
                             .dump(2)
                      << '\n';
        } else {
            std::cout << "lhs:\n" << format_series(sides.lhs) << "rhs:\n" << format_series(sides.rhs);
            std::cout << "verdict: " << verdict_name(report.verdict);
            if (report.witness)
                std::cout << " at z^" << report.witness->z << " w^" << report.witness->w << ' '
                          << format_wedge_key(report.witness->key);
            std::cout << '\n';
        }
        SuiteSummary s;
        (report.verdict == Verdict::holds ? s.holds : report.verdict == Verdict::fails ? s.fails : s.inconclusive) = 1;
        return suite_exit_code(s);
    });
}

int run_verify(CheckConfig cfg, const std::string& json_path) {
    if (cfg.semirings.size() == 1 && cfg.semirings.front() == "all") cfg.semirings = {"nat", "qplus", "maxplus"};
    cfg.validate();
    auto result = run_suite(cfg);
    const auto& s = result.summary;
    print_warnings(s.warnings);
    std::cout << "prefactor: " << (s.prefactor.empty() ? "n/a" : s.prefactor) << '\n';
    for (const auto& r : result.reports) {
        if (r.verdict == Verdict::holds) continue;
        std::cout << r.check << ' ' << r.semiring << " r=" << r.r << " lambda=" << format_partition(r.lambda) << ": "
                  << verdict_name(r.verdict);
        if (r.witness)
            std::cout << " at z^" << r.witness->z << " w^" << r.witness->w << ' ' << format_wedge_key(r.witness->key);
        if (!r.note.empty()) std::cout << " (" << r.note << ')';
        std::cout << '\n';
    }
    std::cout << "holds=" << s.holds << " fails=" << s.fails << " inconclusive=" << s.inconclusive << '\n';
    if (!json_path.empty()) {
        const std::string text = suite_to_json(cfg, result).dump(2);
        if (json_path == "-") {
            std::cout << text << '\n';
        } else {
            std::ofstream out(json_path);
            if (!out) throw std::runtime_error("cannot write " + json_path);
            out << text << '\n';
        }
    }
    return suite_exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exterior algebras and Schubert derivations over symmetrized semirings"};
    app.set_config("--config", "", "key=value configuration file");
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--semiring", common.semiring, "nat, qplus or maxplus")
            ->check(CLI::IsMember({"nat", "qplus", "maxplus"}));
        sub->add_option("--n", common.n, "rank bound: exponents >= n vanish")->check(CLI::PositiveNumber);
        sub->add_flag("--json", common.json_out, "JSON output");
    };

    std::string expr;
    std::string strategy = "leftmost";
    bool eager = false;
    auto* nf = app.add_subcommand("normal-form", "normal form of a mixed word expression (Kronecker pairing)");
    nf->add_option("expr", expr)->required();
    nf->add_option("--strategy", strategy)->check(CLI::IsMember({"leftmost", "rightmost"}));
    nf->add_flag("--eager-kill", eager, "drop words with a repeated letter as soon as it appears");
    add_common(nf);

    auto* wedge_cmd = app.add_subcommand("wedge", "canonical form of a wedge expression");
    wedge_cmd->add_option("expr", expr)->required();
    add_common(wedge_cmd);

    int dual = 0;
    auto* contract_cmd = app.add_subcommand("contract", "contract a wedge expression by d<k>");
    contract_cmd->add_option("expr", expr)->required();
    contract_cmd->add_option("--d", dual, "dual index")->required()->check(CLI::NonNegativeNumber);
    add_common(contract_cmd);

    int r = 1;
    std::string lambda = "0";
    std::optional<int> sigma;
    auto* schubert_cmd = app.add_subcommand("schubert", "Schubert basis element, optionally hit by sigma_i");
    schubert_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    schubert_cmd->add_option("--lambda", lambda, "partition, e.g. 3,2,1");
    schubert_cmd->add_option("--sigma", sigma, "apply sigma_i")->check(CLI::NonNegativeNumber);
    add_common(schubert_cmd);

    int zmax = 8, wmax = 8;
    std::string prefactor = "w_pos";
    auto* main_cmd = app.add_subcommand("expand-main", "both sides of the generating-function formula");
    main_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    main_cmd->add_option("--lambda", lambda, "partition, e.g. 2,1");
    main_cmd->add_option("--zmax", zmax)->check(CLI::NonNegativeNumber);
    main_cmd->add_option("--wmax", wmax)->check(CLI::NonNegativeNumber);
    main_cmd->add_option("--prefactor", prefactor)->check(CLI::IsMember({"w_pos", "w_neg"}));
    add_common(main_cmd);

    CheckConfig cfg;
    std::optional<int> verify_n;
    std::string json_path;
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    verify_cmd->add_option("--semiring", cfg.semirings, "nat, qplus, maxplus or all (repeatable)")
        ->check(CLI::IsMember({"nat", "qplus", "maxplus", "all"}));
    verify_cmd->add_option("--rmax", cfg.rmax)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--weight", cfg.weight)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--zmax", cfg.zmax)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--wmax", cfg.wmax)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--pieri-max", cfg.pieri_max)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--n", verify_n, "rank bound")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--checks", cfg.checks, "subset of checks")->delimiter(',');
    verify_cmd->add_option("--threads", cfg.threads);
    verify_cmd->add_option("--json", json_path, "write the JSON report to a file ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*nf) return run_normal_form(common, expr, strategy, eager);
        if (*wedge_cmd) return run_wedge(common, expr);
        if (*contract_cmd) return run_contract(common, dual, expr);
        if (*schubert_cmd) return run_schubert(common, r, lambda, sigma);
        if (*main_cmd) return run_expand_main(common, r, lambda, zmax, wmax, prefactor);
        if (*verify_cmd) {
            cfg.bound = RankBound{verify_n};
            return run_verify(cfg, json_path);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
