#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ginvar/asymptotics.hpp"
#include "ginvar/error.hpp"
#include "ginvar/gin.hpp"
#include "ginvar/groebner.hpp"
#include "ginvar/invariants.hpp"
#include "ginvar/parser.hpp"
#include "ginvar/render.hpp"
#include "ginvar/verify.hpp"

namespace {

using namespace ginvar;

constexpr int exit_ok = 0;
constexpr int exit_input_error = 1;
constexpr int exit_certification = 2;

struct Options {
    std::string input_path;
    uint64_t seed = 0;
    int trials = 2;
    bool json = false;
    bool verify = false;
    int n_max = 6;
    std::string invariant = "regularity";
    long t_max = -1;
    long budget_ms = 30000;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int report_issues(const std::vector<std::string>& issues) {
    if (issues.empty()) {
        std::cerr << "verify: ok\n";
        return exit_ok;
    }
    for (const auto& line : issues) std::cerr << "verify: " << line << "\n";
    return exit_certification;
}

template <class F> int run_gb(const IdealInput<F>& input, const Options& opt) {
    GroebnerBasis<F> gb = buchberger(input.gens, MonomialOrder::grevlex, input.field);
    if (opt.json) emit(gb_json(gb, input.vars, input.field));
    else std::cout << render_gb_text(gb, input.vars, input.field);
    if (!opt.verify) return exit_ok;
    VerifyPlan plan;
    plan.initial_ideal = plan.hilbert = true;
    plan.t_max = opt.t_max;
    return report_issues(oracle_discrepancies<F>(input, nullptr, nullptr, plan));
}

template <class F> int run_gin(const IdealInput<F>& input, const Options& opt) {
    GinResult<F> gin = gin_rev(input.nvars(), input.gens, input.field, opt.seed, opt.trials);
    if (opt.json) emit(gin_json(gin, input.vars));
    else std::cout << render_gin_text(gin, input.vars);
    if (!gin.certified) {
        std::cerr << "gin not certified: " << gin.diagnostic << "\n";
        return exit_certification;
    }
    if (!opt.verify) return exit_ok;
    VerifyPlan plan;
    plan.hilbert = plan.sections = true;
    plan.t_max = opt.t_max;
    return report_issues(oracle_discrepancies(input, &gin, nullptr, plan));
}

template <class F> int run_invariants(const IdealInput<F>& input, const Options& opt) {
    GinResult<F> gin = gin_rev(input.nvars(), input.gens, input.field, opt.seed, opt.trials);
    if (!gin.certified) {
        std::cerr << "gin not certified: " << gin.diagnostic << "\n";
        return exit_certification;
    }
    InvariantReport report =
        equivalence_report(input, gin, opt.seed, opt.trials, /*cross_check=*/opt.verify);
    if (opt.json) emit(report_json(report));
    else std::cout << render_report_text(report);
    if (!opt.verify) return exit_ok;
    int status = report_issues(oracle_discrepancies(input, &gin, &report.alpha,
                                                    [&] {
                                                        VerifyPlan plan = VerifyPlan::all();
                                                        plan.t_max = opt.t_max;
                                                        return plan;
                                                    }()));
    const Verdict& routes = report.verdicts.at("route_agreement");
    if (!routes.holds) {
        std::cerr << "verify: sreg routes disagree: " << routes.detail << "\n";
        return exit_certification;
    }
    return status;
}

template <class F> int run_annihilators(const IdealInput<F>& input, const Options& opt) {
    GinResult<F> gin = gin_rev(input.nvars(), input.gens, input.field, opt.seed, opt.trials);
    if (!gin.certified) {
        std::cerr << "gin not certified: " << gin.diagnostic << "\n";
        return exit_certification;
    }
    AnnihilatorTable table = annihilator_table(gin.gin);
    if (opt.json) emit(alpha_json(table));
    else std::cout << render_alpha_table_text(table);
    if (!opt.verify) return exit_ok;
    VerifyPlan plan;
    plan.colons = true;
    plan.t_max = opt.t_max;
    return report_issues(oracle_discrepancies(input, &gin, &table, plan));
}

template <class F> int run_betti(const IdealInput<F>& input, const Options& opt) {
    GinResult<F> gin = gin_rev(input.nvars(), input.gens, input.field, opt.seed, opt.trials);
    if (!gin.certified) {
        std::cerr << "gin not certified: " << gin.diagnostic << "\n";
        return exit_certification;
    }
    if (!gin.strongly_stable)
        throw DomainError("Betti table needs a strongly stable gin; this one is only Borel-fixed");
    BettiTable betti = ek_betti(gin.gin);
    if (opt.json) emit(betti_json(betti));
    else std::cout << render_betti_table_text(betti);
    return exit_ok;
}

template <class F> int run_powers(const IdealInput<F>& input, const Options& opt) {
    if (opt.verify) std::cerr << "note: --verify has no effect for powers\n";
    InvariantSelector selector = parse_selector(opt.invariant);
    PowerSequence seq =
        power_sequence(input, selector, opt.n_max, opt.seed, opt.trials, opt.budget_ms);
    LinearFit fit;
    bool have_fit = false;
    bool finite = true;
    for (const auto& p : seq.points) finite &= p.value.is_finite();
    if (finite && seq.points.size() >= 2) {
        fit = fit_eventual_linear(finite_points(seq));
        have_fit = true;
    }
    if (opt.json) emit(powers_json(seq, have_fit ? &fit : nullptr));
    else std::cout << render_powers_text(seq, have_fit ? &fit : nullptr);
    if (seq.certification_failure) {
        std::cerr << "powers truncated: " << seq.note << "\n";
        return exit_certification;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivalent invariants of homogeneous ideals via reverse-lex generic initial "
                 "ideals: axial constants, sectional regularity, annihilator tables, reduction "
                 "numbers, and their growth along powers."};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("input", opt.input_path, "ideal file")->required();
        cmd->add_flag("--json", opt.json, "emit JSON instead of text");
        cmd->add_option("--seed", opt.seed, "seed for all randomness")->capture_default_str();
        cmd->add_option("--trials", opt.trials, "independent gin draws")
            ->capture_default_str()
            ->check(CLI::Range(2, 16));
        cmd->add_flag("--verify", opt.verify, "cross-check against the linear-algebra oracle");
        cmd->add_option("--t-max", opt.t_max, "degree bound for --verify");
    };
    CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis under grevlex");
    CLI::App* gin = app.add_subcommand("gin", "certified generic initial ideal");
    CLI::App* invariants = app.add_subcommand("invariants", "invariant report with verdicts");
    CLI::App* annihilators = app.add_subcommand("annihilators", "generic annihilator table");
    CLI::App* betti = app.add_subcommand("betti", "Betti table of the gin");
    CLI::App* powers = app.add_subcommand("powers", "invariant along powers with linear fit");
    for (CLI::App* cmd : {gb, gin, invariants, annihilators, betti, powers}) add_common(cmd);
    powers->add_option("--n-max", opt.n_max, "largest power")->capture_default_str()->check(CLI::Range(1, 64));
    powers->add_option("--invariant", opt.invariant,
                       "regularity | axial:i | sreg:i | reduction:s")
        ->capture_default_str();
    powers->add_option("--budget-ms", opt.budget_ms, "per-power time budget, -1 disables")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_input_error;
    }

    try {
        ParsedIdeal parsed = parse_ideal(read_file(opt.input_path));
        return std::visit(
            [&](const auto& input) {
                if (gb->parsed()) return run_gb(input, opt);
                if (gin->parsed()) return run_gin(input, opt);
                if (invariants->parsed()) return run_invariants(input, opt);
                if (annihilators->parsed()) return run_annihilators(input, opt);
                if (betti->parsed()) return run_betti(input, opt);
                return run_powers(input, opt);
            },
            parsed);
    } catch (const ParseError& e) {
        std::cerr << opt.input_path << ": " << e.what() << "\n";
        return exit_input_error;
    } catch (const CertificationError& e) {
        std::cerr << "certification: " << e.what() << "\n";
        return exit_certification;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}
