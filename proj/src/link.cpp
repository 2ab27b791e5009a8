#include "mcfet/link.hpp"

#include <cmath>
#include <stdexcept>

namespace mcfet {

LinkModel::LinkModel(const SystemParams& params)
    : params_(params),
      gain_(channel_gain(params.channel)),
      fet_(transducer_derived(params)),
      noise_(noise_budget(params)),
      N_r_(params.N_r()),
      a_(fet_.g_FET * fet_.psi_L),
      on_rate_(gain_.alpha_ch * params.receptor.k1) {}

double LinkModel::bound_prob(double Ntx) const {
    if (Ntx < 0.0) throw std::domain_error("bound_prob: Ntx must be >= 0");
    const double on = on_rate_ * Ntx;
    return on / (on + params_.receptor.k_m1);
}

double LinkModel::mu(double Ntx) const {
    return a_ * N_r_ * bound_prob(Ntx);
}

double LinkModel::sigma2(double Ntx) const {
    const double P_b = bound_prob(Ntx);
    return noise_.sigma2_F + P_b * (1.0 - P_b) * N_r_ * a_ * a_;
}

double LinkModel::sigma(double Ntx) const {
    return std::sqrt(sigma2(Ntx));
}

double LinkModel::mu_inverse(double I) const {
    const double saturation = a_ * N_r_;
    const double p = I / saturation;
    if (!(p > 0.0) || !(p < 1.0)) {
        throw std::domain_error("mu_inverse: current outside the open range (0, saturation)");
    }
    return params_.receptor.k_m1 * p / (on_rate_ * (1.0 - p));
}

SignalStats LinkModel::stats(double Ntx) const {
    SignalStats s{};
    s.rho_R = gain_.alpha_ch * Ntx;
    s.P_b = bound_prob(Ntx);
    s.mu_Nb = s.P_b * N_r_;
    s.var_Nb = s.P_b * (1.0 - s.P_b) * N_r_;
    s.mu_Irx = a_ * s.mu_Nb;
    s.sigma2_Irx = noise_.sigma2_F + s.var_Nb * a_ * a_;
    return s;
}

}  // namespace mcfet
