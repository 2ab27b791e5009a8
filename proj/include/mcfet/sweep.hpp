#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mcfet/params.hpp"

namespace mcfet {

enum class SweepVariable { Ntx_max, d, c_ion, N_ot, Ntx_min, N_r_scale, f_H };

const char* to_string(SweepVariable v);
bool parse_sweep_variable(const std::string& name, SweepVariable& out);

// Column header fragment for the swept value, including its unit.
std::string sweep_value_header(SweepVariable v);

struct SweepSpec {
    SweepVariable variable = SweepVariable::Ntx_max;
    std::vector<double> values;  // nonempty, strictly monotone
};

// One evaluated sweep point. When ok is false the numeric columns are NaN and
// reason says why the point was skipped; the sweep itself keeps going.
struct SweepRow {
    double value = 0.0;
    double C_bits = 0.0;
    double L = 0.0;
    double sigma2_F = 0.0;
    double P_b_min = 0.0;
    double P_b_max = 0.0;
    bool ok = false;
    std::string reason;
    std::string param_hash;
};

// Applies one swept value to a copy of the base parameters.
SystemParams apply_sweep_value(const SystemParams& base, SweepVariable v, double value);

// Evaluates every point, in spec order, optionally across worker threads.
// Throws std::invalid_argument if values are empty or not strictly monotone.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SystemParams& base,
                                int n_workers = 1);

// Deterministic CSV: unit-annotated header, LF endings, "nan" for missing.
void write_sweep_csv(std::ostream& os, const SweepSpec& spec, const std::vector<SweepRow>& rows);

}  // namespace mcfet
