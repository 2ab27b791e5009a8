#include "mcfet/transducer.hpp"

#include <cmath>
#include <stdexcept>

#include "mcfet/binding.hpp"
#include "mcfet/constants.hpp"

namespace mcfet {

double debye_length(double eps_M, double c_ion, double T) {
    if (eps_M <= 0.0 || c_ion <= 0.0 || T <= 0.0) {
        throw std::domain_error("debye_length: arguments must be positive");
    }
    return std::sqrt(eps_M * phys.k_B * T / (2.0 * phys.N_A * phys.q * phys.q * c_ion));
}

double effective_charge(double l_SR, double lambda_D) {
    if (l_SR < 0.0 || lambda_D <= 0.0) {
        throw std::domain_error("effective_charge: bad screening geometry");
    }
    return phys.q * std::exp(-l_SR / lambda_D);
}

TransducerDerived capacitances(const TransducerParams& p) {
    TransducerDerived d{};
    d.w_R = pi * p.r_R;
    d.lambda_D = debye_length(p.eps_M, p.c_ion, p.T);
    const double area = d.w_R * p.l_R;
    d.C_dl = (p.eps_M / d.lambda_D) * area;
    d.C_ox_s = p.eps_ox / p.t_ox;
    d.C_ox = d.C_ox_s * area;
    d.lambda_nw = std::sqrt(p.eps_Si * phys.k_B * p.T / (p.p * phys.q * phys.q));
    d.C_nw = (p.eps_Si / d.lambda_nw) * area;
    d.C_eq = 1.0 / (1.0 / d.C_ox + 1.0 / d.C_nw) + d.C_dl;
    return d;
}

double transconductance(const TransducerParams& p) {
    if (p.V_SG - std::abs(p.V_TH) <= 0.0) {
        throw std::domain_error("transconductance: device is not in the linear region");
    }
    const double w_R = pi * p.r_R;
    const double C_ox_s = p.eps_ox / p.t_ox;
    return p.mu_p * C_ox_s * p.V_SD * w_R / p.l_R;
}

TransducerDerived transducer_derived(const SystemParams& params) {
    TransducerDerived d = capacitances(params.transducer);
    d.q_eff = effective_charge(params.receptor.l_SR, d.lambda_D);
    d.g_FET = transconductance(params.transducer);
    d.psi_L = d.q_eff * params.receptor.Ne / d.C_eq;
    return d;
}

double mean_output_current(const SystemParams& params, double Ntx) {
    const TransducerDerived d = transducer_derived(params);
    const BindingStats b = binding_stats(params, Ntx);
    return d.g_FET * d.psi_L * b.mu_Nb;
}

}  // namespace mcfet
