#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mcfet/params.hpp"
#include "mcfet/sweep.hpp"

namespace mcfet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumeric = 2;
inline constexpr int kExitIo = 3;

// Parameters resolved from a config file plus --set overrides, along with the
// keys the user pinned explicitly. Everything else runs on library defaults.
struct ResolvedParams {
    SystemParams params;
    std::vector<std::string> keys_set;
};

// Reads config_path when given, otherwise the file named by MCFET_CONFIG,
// otherwise the built-in defaults; then applies overrides in order.
ResolvedParams resolve_params(const std::string& config_path,
                              const std::vector<std::string>& overrides);

int cmd_capacity(const ResolvedParams& rp, std::ostream& out, std::ostream& err);
int cmd_distribution(const ResolvedParams& rp, std::size_t grid_size, const std::string& out_path,
                     std::ostream& out, std::ostream& err);
int cmd_sweep(const ResolvedParams& rp, const SweepSpec& spec, int n_workers,
              const std::string& out_path, std::ostream& out, std::ostream& err);
int cmd_validate(const ResolvedParams& rp, const std::string& level, std::uint64_t seed,
                 std::ostream& out, std::ostream& err);
int cmd_simulate(const ResolvedParams& rp, double Ntx, std::size_t n_trials, std::uint64_t seed,
                 int n_workers, const std::string& out_path, std::ostream& out, std::ostream& err);
int cmd_params_template(const std::string& out_path, std::ostream& out, std::ostream& err);

// Value-list builders for the sweep verb.
std::vector<double> parse_values_csv(const std::string& csv);
std::vector<double> make_lin_range(double lo, double hi, std::size_t n);
std::vector<double> make_log_range(double lo, double hi, std::size_t n);
bool parse_range_spec(const std::string& spec, double& lo, double& hi, std::size_t& n);

// Exit-code contract for exceptions escaping command bodies.
int exit_code_for(const std::exception& e);

}  // namespace mcfet::cli
