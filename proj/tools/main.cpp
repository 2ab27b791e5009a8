#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "mcfet/oracle.hpp"
#include "mcfet/sweep.hpp"

int main(int argc, char** argv) {
    CLI::App app{"diffusive molecular link with a nanowire bioFET receiver"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_path;
    std::uint64_t seed = mcfet::kMasterSeed;
    std::size_t grid = 256;
    int workers = 1;
    std::string level = "fast";

    app.add_option("--config", config_path,
                   "parameter file (default: $MCFET_CONFIG when set)");
    app.add_option("--set", overrides, "override as key=value[ unit], repeatable");
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--seed", seed, "seed for randomized oracles");
    app.add_option("--grid", grid, "grid size for tabulated densities");
    app.add_option("--workers", workers, "worker threads for sweeps and simulation");
    app.add_option("--level", level, "validation level")
        ->check(CLI::IsMember({"fast", "full"}));

    auto* cap = app.add_subcommand("capacity", "closed-form capacity report");
    auto* dist = app.add_subcommand("distribution", "capacity-achieving input density as CSV");
    auto* sweep = app.add_subcommand("sweep", "capacity across a parameter range as CSV");
    auto* validate = app.add_subcommand("validate", "cross-check closed forms against oracles");
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo link simulation");
    auto* params_cmd = app.add_subcommand("params", "parameter file helpers");
    auto* tmpl = params_cmd->add_subcommand("template", "print a fully commented parameter file");
    params_cmd->require_subcommand(1);
    for (CLI::App* sub : {cap, dist, sweep, validate, simulate, params_cmd, tmpl}) {
        sub->fallthrough();
    }

    std::string variable = "Ntx_max";
    std::string values_csv;
    std::string log_range_spec;
    std::string lin_range_spec;
    sweep->add_option("--variable", variable,
                      "one of Ntx_max, d, c_ion, N_ot, Ntx_min, N_r-scale, f_H");
    sweep->add_option("--values", values_csv, "comma-separated value list");
    sweep->add_option("--log-range", log_range_spec, "lo,hi,n geometrically spaced");
    sweep->add_option("--lin-range", lin_range_spec, "lo,hi,n linearly spaced");

    double ntx = 1e9;
    std::size_t trials = 100000;
    simulate->add_option("--ntx", ntx, "transmitted molecule count");
    simulate->add_option("--trials", trials, "Monte Carlo trial count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? mcfet::cli::kExitOk : mcfet::cli::kExitValidation;
    }

    using namespace mcfet::cli;
    try {
        if (tmpl->parsed()) return cmd_params_template(out_path, std::cout, std::cerr);

        const ResolvedParams rp = resolve_params(config_path, overrides);
        if (cap->parsed()) return cmd_capacity(rp, std::cout, std::cerr);
        if (dist->parsed()) return cmd_distribution(rp, grid, out_path, std::cout, std::cerr);
        if (validate->parsed()) return cmd_validate(rp, level, seed, std::cout, std::cerr);
        if (simulate->parsed()) {
            return cmd_simulate(rp, ntx, trials, seed, workers, out_path, std::cout, std::cerr);
        }
        if (sweep->parsed()) {
            mcfet::SweepSpec spec;
            if (!mcfet::parse_sweep_variable(variable, spec.variable)) {
                std::cerr << "error: unknown sweep variable '" << variable << "'\n";
                return kExitValidation;
            }
            const int sources = static_cast<int>(!values_csv.empty()) +
                                static_cast<int>(!log_range_spec.empty()) +
                                static_cast<int>(!lin_range_spec.empty());
            if (sources != 1) {
                std::cerr << "error: give exactly one of --values, --log-range, --lin-range\n";
                return kExitValidation;
            }
            if (!values_csv.empty()) {
                spec.values = parse_values_csv(values_csv);
            } else {
                double lo = 0.0;
                double hi = 0.0;
                std::size_t n = 0;
                const std::string& range_spec =
                    !log_range_spec.empty() ? log_range_spec : lin_range_spec;
                if (!parse_range_spec(range_spec, lo, hi, n)) {
                    std::cerr << "error: range must be lo,hi,n with n >= 2\n";
                    return kExitValidation;
                }
                spec.values = !log_range_spec.empty() ? make_log_range(lo, hi, n)
                                                      : make_lin_range(lo, hi, n);
            }
            return cmd_sweep(rp, spec, workers, out_path, std::cout, std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return kExitOk;
}
