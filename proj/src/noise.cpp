#include "mcfet/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "mcfet/binding.hpp"
#include "mcfet/constants.hpp"
#include "mcfet/diffusion.hpp"
#include "mcfet/transducer.hpp"

namespace mcfet {

namespace {

// 1/f coefficient of the output-current PSD. The flatband-voltage PSD picks
// up one factor of g_FET^2 on its way to the drain current; the literal mode
// keeps the second g_FET^2 that the flatband expression itself carries.
double psd_coefficient(const SystemParams& params) {
    const TransducerParams& t = params.transducer;
    const NoiseParams& n = params.noise;
    const TransducerDerived d = transducer_derived(params);

    const double area = d.w_R * t.l_R;
    const double A_V = n.lambda_tun * phys.k_B * t.T * phys.q * phys.q * n.N_ot /
                       (area * d.C_ox_s * d.C_ox_s);
    const double bracket =
        1.0 + n.alpha_s * t.mu_p * d.C_ox_s * (t.V_SG - std::abs(t.V_TH));
    const double g2 = d.g_FET * d.g_FET;
    double S0 = A_V * g2 * bracket * bracket;
    if (n.flatband_literal) S0 *= g2;
    return S0;
}

}  // namespace

double NoiseBudget::psd(double f) const {
    const double fa = std::abs(f);
    return S0 / (fa < f_L ? f_L : fa);
}

double NoiseBudget::sigma2_binding(double Ntx) const {
    const double rho_R = alpha_ch * Ntx;
    const double P_b = bound_probability(rho_R, k1, k_m1);
    return P_b * (1.0 - P_b) * N_r * gain_squared;
}

double NoiseBudget::sigma2_total(double Ntx) const {
    return sigma2_F + sigma2_binding(Ntx);
}

double flicker_psd(double f, const SystemParams& params) {
    const double S0 = psd_coefficient(params);
    const double f_L = 1.0 / params.noise.T_obs;
    const double fa = std::abs(f);
    return S0 / (fa < f_L ? f_L : fa);
}

double flicker_variance(const SystemParams& params) {
    const double f_L = 1.0 / params.noise.T_obs;
    const double f_H = params.noise.f_H;
    if (f_H <= f_L) {
        throw std::domain_error("flicker_variance: f_H must exceed f_L = 1/T_obs");
    }
    const double S0 = psd_coefficient(params);
    return 2.0 * S0 * (1.0 + std::log(f_H / f_L));
}

double total_variance(const SystemParams& params, double Ntx) {
    const BindingStats b = binding_stats(params, Ntx);
    const TransducerDerived d = transducer_derived(params);
    const double gain = d.g_FET * d.psi_L;
    return flicker_variance(params) + b.var_Nb * gain * gain;
}

NoiseBudget noise_budget(const SystemParams& params) {
    NoiseBudget nb{};
    nb.S0 = psd_coefficient(params);
    nb.f_L = 1.0 / params.noise.T_obs;
    nb.f_H = params.noise.f_H;
    if (nb.f_H <= nb.f_L) {
        throw std::domain_error("noise_budget: f_H must exceed f_L = 1/T_obs");
    }
    nb.sigma2_F = 2.0 * nb.S0 * (1.0 + std::log(nb.f_H / nb.f_L));
    nb.alpha_ch = attenuation(params.channel.d);
    nb.k1 = params.receptor.k1;
    nb.k_m1 = params.receptor.k_m1;
    nb.N_r = params.N_r();
    const TransducerDerived d = transducer_derived(params);
    const double gain = d.g_FET * d.psi_L;
    nb.gain_squared = gain * gain;
    return nb;
}

}  // namespace mcfet
