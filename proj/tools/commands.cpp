#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mcfet/capacity.hpp"
#include "mcfet/checks.hpp"
#include "mcfet/config.hpp"
#include "mcfet/errors.hpp"
#include "mcfet/link.hpp"
#include "mcfet/oracle.hpp"

namespace mcfet::cli {

namespace {

std::string fmt(double v) {
    if (!std::isfinite(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Defaults that stand in for values the source data does not pin down. Any of
// them left unset by config or override earns a note on the error stream.
const char* const kAssumedKeys[] = {"channel.D", "transducer.l_R", "noise.f_H",
                                    "noise.alpha_s"};

void note_assumed_defaults(const ResolvedParams& rp, std::ostream& err) {
    std::vector<std::string> missing;
    for (const char* key : kAssumedKeys) {
        bool pinned = false;
        for (const std::string& k : rp.keys_set) {
            if (k == key) {
                pinned = true;
                break;
            }
        }
        if (!pinned) missing.emplace_back(key);
    }
    if (missing.empty()) return;
    err << "note: assumed defaults in effect for ";
    for (std::size_t i = 0; i < missing.size(); ++i) {
        if (i) err << ", ";
        err << missing[i];
    }
    err << " (run 'params template' to see the values)\n";
}

// Prints violations; returns the validation exit code when any is an error.
int check_valid(const SystemParams& params, std::ostream& err) {
    bool errors = false;
    for (const Violation& v : validate(params)) {
        err << (v.warning ? "warning: " : "error: ") << v.field << ": " << v.message << "\n";
        errors = errors || !v.warning;
    }
    return errors ? kExitValidation : kExitOk;
}

int run_guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int write_to(const std::string& out_path, std::ostream& fallback, std::ostream& err,
             const std::function<void(std::ostream&)>& writer) {
    if (out_path.empty()) {
        writer(fallback);
        return kExitOk;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open '" << out_path << "' for writing\n";
        return kExitIo;
    }
    writer(file);
    file.flush();
    if (!file) {
        err << "error: write to '" << out_path << "' failed\n";
        return kExitIo;
    }
    return kExitOk;
}

std::string trimmed(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

}  // namespace

ResolvedParams resolve_params(const std::string& config_path,
                              const std::vector<std::string>& overrides) {
    ResolvedParams rp;
    std::string path = config_path;
    if (path.empty()) {
        if (const char* env = std::getenv("MCFET_CONFIG"); env != nullptr && *env != '\0') {
            path = env;
        }
    }
    if (path.empty()) {
        rp.params = default_params();
    } else {
        ConfigLoad loaded = load_config_detailed(path);
        rp.params = loaded.params;
        rp.keys_set = std::move(loaded.keys_set);
    }
    for (const std::string& assignment : overrides) {
        apply_override(rp.params, assignment);
        const auto eq = assignment.find('=');
        rp.keys_set.push_back(
            trimmed(eq == std::string::npos ? assignment : assignment.substr(0, eq)));
    }
    return rp;
}

int cmd_capacity(const ResolvedParams& rp, std::ostream& out, std::ostream& err) {
    if (const int rc = check_valid(rp.params, err)) return rc;
    note_assumed_defaults(rp, err);
    return run_guarded(err, [&]() {
        const LinkModel link(rp.params);
        const CapacityResult cap = capacity_closed_form(link);
        out << "C (bits) = " << fmt(cap.C_bits) << "\n"
            << "L (1) = " << fmt(cap.L) << "\n"
            << "M = " << fmt(cap.M) << "\n"
            << "K_norm = " << fmt(cap.K_norm) << "\n"
            << "arcsin_hi = " << fmt(cap.arcsin_hi) << "\n"
            << "arcsin_lo = " << fmt(cap.arcsin_lo) << "\n"
            << "formula_variant = " << to_string(cap.formula_variant) << "\n"
            << "sigma2_F (A^2) = " << fmt(link.noise().sigma2_F) << "\n"
            << "g_FET (S) = " << fmt(link.fet().g_FET) << "\n"
            << "psi_L (V) = " << fmt(link.fet().psi_L) << "\n"
            << "lambda_D (m) = " << fmt(link.fet().lambda_D) << "\n"
            << "N_r (count) = " << fmt(link.N_r()) << "\n"
            << "param_hash = " << param_hash_hex(rp.params) << "\n";
        return kExitOk;
    });
}

int cmd_distribution(const ResolvedParams& rp, std::size_t grid_size, const std::string& out_path,
                     std::ostream& out, std::ostream& err) {
    if (grid_size < 64) {
        err << "error: --grid must be at least 64\n";
        return kExitValidation;
    }
    if (const int rc = check_valid(rp.params, err)) return rc;
    note_assumed_defaults(rp, err);
    return run_guarded(err, [&]() {
        const TabulatedPdf fstar = optimal_input_pdf(rp.params, grid_size);
        return write_to(out_path, out, err, [&](std::ostream& os) {
            os << "Ntx (molecules),density (1/molecule)\n";
            for (std::size_t i = 0; i < fstar.grid.size(); ++i) {
                os << fmt(fstar.grid[i]) << ',' << fmt(fstar.density[i]) << '\n';
            }
        });
    });
}

int cmd_sweep(const ResolvedParams& rp, const SweepSpec& spec, int n_workers,
              const std::string& out_path, std::ostream& out, std::ostream& err) {
    if (const int rc = check_valid(rp.params, err)) return rc;
    note_assumed_defaults(rp, err);
    return run_guarded(err, [&]() {
        const std::vector<SweepRow> rows = run_sweep(spec, rp.params, n_workers);
        return write_to(out_path, out, err,
                        [&](std::ostream& os) { write_sweep_csv(os, spec, rows); });
    });
}

int cmd_validate(const ResolvedParams& rp, const std::string& level, std::uint64_t seed,
                 std::ostream& out, std::ostream& err) {
    if (level != "fast" && level != "full") {
        err << "error: --level must be 'fast' or 'full'\n";
        return kExitValidation;
    }
    if (const int rc = check_valid(rp.params, err)) return rc;
    note_assumed_defaults(rp, err);
    return run_guarded(err, [&]() {
        const std::vector<CheckResult> checks = run_checks(rp.params, level == "full", seed);
        std::size_t passed = 0;
        for (const CheckResult& c : checks) {
            out << "check name=" << c.name << " measured=" << fmt(c.measured)
                << " tol=" << fmt(c.tolerance) << " status=" << (c.pass ? "PASS" : "FAIL");
            if (!c.detail.empty()) out << " detail=\"" << c.detail << "\"";
            out << "\n";
            if (c.pass) ++passed;
        }
        out << "summary level=" << level << " passed=" << passed << " total=" << checks.size()
            << " seed=" << seed << "\n";
        return passed == checks.size() ? kExitOk : kExitValidation;
    });
}

int cmd_simulate(const ResolvedParams& rp, double Ntx, std::size_t n_trials, std::uint64_t seed,
                 int n_workers, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
    if (n_trials < 1) {
        err << "error: --trials must be at least 1\n";
        return kExitValidation;
    }
    if (const int rc = check_valid(rp.params, err)) return rc;
    note_assumed_defaults(rp, err);
    return run_guarded(err, [&]() {
        const SimResult sim = simulate_link(rp.params, Ntx, n_trials, seed, n_workers);
        const double n = static_cast<double>(n_trials);
        const double se_mean = std::sqrt(sim.model_variance / n);
        const double se_var = sim.model_variance * std::sqrt(2.0 / (n - 1.0));
        out << "Ntx = " << fmt(Ntx) << "\n"
            << "trials = " << n_trials << "\n"
            << "seed = " << seed << "\n"
            << "n_receptors = " << sim.n_receptors << "\n"
            << "empirical_mean (A) = " << fmt(sim.mean) << "\n"
            << "model_mean (A) = " << fmt(sim.model_mean) << "\n"
            << "mean_z = " << fmt(se_mean > 0.0 ? (sim.mean - sim.model_mean) / se_mean : 0.0)
            << "\n"
            << "empirical_variance (A^2) = " << fmt(sim.variance) << "\n"
            << "model_variance (A^2) = " << fmt(sim.model_variance) << "\n"
            << "variance_z = "
            << fmt(n_trials > 1 && se_var > 0.0 ? (sim.variance - sim.model_variance) / se_var
                                                : 0.0)
            << "\n";
        if (n_trials >= 10000) {
            out << "normality_sup_distance = " << fmt(normality_check(sim.samples)) << "\n";
        }
        if (out_path.empty()) return kExitOk;
        return write_to(out_path, out, err, [&](std::ostream& os) {
            os << "sample (A)\n";
            for (double s : sim.samples) os << fmt(s) << '\n';
        });
    });
}

int cmd_params_template(const std::string& out_path, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        return write_to(out_path, out, err,
                        [](std::ostream& os) { os << config_template_text(); });
    });
}

std::vector<double> parse_values_csv(const std::string& csv) {
    std::vector<double> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string token = trimmed(item);
        if (token.empty()) {
            throw std::invalid_argument("empty entry in --values list");
        }
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) {
            throw std::invalid_argument("bad number in --values list: '" + token + "'");
        }
        values.push_back(v);
    }
    if (values.empty()) throw std::invalid_argument("--values list is empty");
    return values;
}

std::vector<double> make_lin_range(double lo, double hi, std::size_t n) {
    if (n < 2) throw std::invalid_argument("range needs at least 2 points");
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return values;
}

std::vector<double> make_log_range(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > 0.0)) {
        throw std::invalid_argument("log range endpoints must be positive");
    }
    if (n < 2) throw std::invalid_argument("range needs at least 2 points");
    std::vector<double> values(n);
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] =
            std::exp(llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    values.front() = lo;
    values.back() = hi;
    return values;
}

bool parse_range_spec(const std::string& spec, double& lo, double& hi, std::size_t& n) {
    std::stringstream ss(spec);
    std::string a, b, c;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c)) {
        return false;
    }
    try {
        std::size_t used = 0;
        lo = std::stod(trimmed(a), &used);
        hi = std::stod(trimmed(b), &used);
        const long count = std::stol(trimmed(c), &used);
        if (count < 2) return false;
        n = static_cast<std::size_t>(count);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

int exit_code_for(const std::exception& e) {
    if (const auto* ce = dynamic_cast<const ConfigError*>(&e)) {
        return ce->kind == ConfigError::Kind::io ? kExitIo : kExitValidation;
    }
    if (dynamic_cast<const NumericError*>(&e) != nullptr) return kExitNumeric;
    if (dynamic_cast<const std::ios_base::failure*>(&e) != nullptr) return kExitIo;
    if (dynamic_cast<const std::logic_error*>(&e) != nullptr) return kExitValidation;
    return kExitNumeric;
}

}  // namespace mcfet::cli
