#include "mcfet/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

#include "mcfet/capacity.hpp"
#include "mcfet/config.hpp"
#include "mcfet/link.hpp"

namespace mcfet {

const char* to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::Ntx_max: return "Ntx_max";
        case SweepVariable::d: return "d";
        case SweepVariable::c_ion: return "c_ion";
        case SweepVariable::N_ot: return "N_ot";
        case SweepVariable::Ntx_min: return "Ntx_min";
        case SweepVariable::N_r_scale: return "N_r-scale";
        case SweepVariable::f_H: return "f_H";
    }
    return "?";
}

bool parse_sweep_variable(const std::string& name, SweepVariable& out) {
    static const std::pair<const char*, SweepVariable> table[] = {
        {"Ntx_max", SweepVariable::Ntx_max},   {"d", SweepVariable::d},
        {"c_ion", SweepVariable::c_ion},       {"N_ot", SweepVariable::N_ot},
        {"Ntx_min", SweepVariable::Ntx_min},   {"N_r-scale", SweepVariable::N_r_scale},
        {"N_r_scale", SweepVariable::N_r_scale}, {"f_H", SweepVariable::f_H},
    };
    for (const auto& [key, v] : table) {
        if (name == key) {
            out = v;
            return true;
        }
    }
    return false;
}

std::string sweep_value_header(SweepVariable v) {
    switch (v) {
        case SweepVariable::Ntx_max: return "Ntx_max (molecules)";
        case SweepVariable::d: return "d (m)";
        case SweepVariable::c_ion: return "c_ion (mol/m^3)";
        case SweepVariable::N_ot: return "N_ot (1/(J*m^3))";
        case SweepVariable::Ntx_min: return "Ntx_min (molecules)";
        case SweepVariable::N_r_scale: return "N_r-scale (ratio)";
        case SweepVariable::f_H: return "f_H (Hz)";
    }
    return "value";
}

SystemParams apply_sweep_value(const SystemParams& base, SweepVariable v, double value) {
    SystemParams p = base;
    switch (v) {
        case SweepVariable::Ntx_max: p.channel.Ntx_max = value; break;
        case SweepVariable::d: p.channel.d = value; break;
        case SweepVariable::c_ion: p.transducer.c_ion = value; break;
        case SweepVariable::N_ot: p.noise.N_ot = value; break;
        case SweepVariable::Ntx_min: p.channel.Ntx_min = value; break;
        case SweepVariable::N_r_scale: p.receptor.rho_SR = base.receptor.rho_SR * value; break;
        case SweepVariable::f_H: p.noise.f_H = value; break;
    }
    return p;
}

namespace {

SweepRow evaluate_point(const SystemParams& base, SweepVariable v, double value) {
    SweepRow row;
    row.value = value;
    row.C_bits = row.L = row.sigma2_F = row.P_b_min = row.P_b_max =
        std::numeric_limits<double>::quiet_NaN();
    const SystemParams p = apply_sweep_value(base, v, value);
    row.param_hash = param_hash_hex(p);

    const std::vector<Violation> report = validate(p);
    for (const Violation& viol : report) {
        if (!viol.warning) {
            row.reason = viol.field + ": " + viol.message;
            return row;
        }
    }
    try {
        const LinkModel link(p);
        const CapacityResult cap = capacity_closed_form(link);
        row.C_bits = cap.C_bits;
        row.L = cap.L;
        row.sigma2_F = link.noise().sigma2_F;
        row.P_b_min = link.bound_prob(p.channel.Ntx_min);
        row.P_b_max = link.bound_prob(p.channel.Ntx_max);
        row.ok = true;
    } catch (const std::exception& e) {
        row.reason = e.what();
    }
    return row;
}

std::string format_cell(double v) {
    if (!std::isfinite(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char ch : field) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SystemParams& base, int n_workers) {
    if (spec.values.empty()) {
        throw std::invalid_argument("run_sweep: values must be nonempty");
    }
    if (spec.values.size() > 1) {
        const bool increasing = spec.values[1] > spec.values[0];
        for (std::size_t i = 0; i + 1 < spec.values.size(); ++i) {
            const bool step_up = spec.values[i + 1] > spec.values[i];
            if (spec.values[i + 1] == spec.values[i] || step_up != increasing) {
                throw std::invalid_argument("run_sweep: values must be strictly monotone");
            }
        }
    }

    std::vector<SweepRow> rows(spec.values.size());
    const std::size_t workers = static_cast<std::size_t>(
        std::max(1, std::min<int>(n_workers, static_cast<int>(spec.values.size()))));

    if (workers <= 1) {
        for (std::size_t i = 0; i < spec.values.size(); ++i) {
            rows[i] = evaluate_point(base, spec.variable, spec.values[i]);
        }
        return rows;
    }

    // Striped assignment; each worker writes only its own indices, so output
    // order equals spec order no matter how the threads interleave.
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < spec.values.size(); i += workers) {
                rows[i] = evaluate_point(base, spec.variable, spec.values[i]);
            }
        });
    }
    for (std::thread& t : pool) t.join();
    return rows;
}

void write_sweep_csv(std::ostream& os, const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    os << sweep_value_header(spec.variable)
       << ",C (bits),L (1),sigma2_F (A^2),P_b_min (1),P_b_max (1),param_hash,reason\n";
    for (const SweepRow& row : rows) {
        os << format_cell(row.value) << ',';
        if (row.ok) {
            os << format_cell(row.C_bits) << ',' << format_cell(row.L) << ','
               << format_cell(row.sigma2_F) << ',' << format_cell(row.P_b_min) << ','
               << format_cell(row.P_b_max);
        } else {
            os << "nan,nan,nan,nan,nan";
        }
        os << ',' << row.param_hash << ',' << csv_escape(row.reason) << '\n';
    }
}

}  // namespace mcfet
