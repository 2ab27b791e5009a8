#include "mcfet/binding.hpp"

#include <cmath>
#include <stdexcept>

#include "mcfet/diffusion.hpp"

namespace mcfet {

double bound_probability(double rho_R, double k1, double k_m1) {
    if (rho_R < 0.0) {
        throw std::domain_error("bound_probability: negative concentration");
    }
    if (k1 <= 0.0 || k_m1 <= 0.0) {
        throw std::domain_error("bound_probability: rate constants must be positive");
    }
    const double on = k1 * rho_R;
    return on / (on + k_m1);
}

double bound_count_pmf(long long N_r, double P_b, long long k) {
    if (N_r < 0 || k < 0 || k > N_r) return 0.0;
    if (P_b <= 0.0) return k == 0 ? 1.0 : 0.0;
    if (P_b >= 1.0) return k == N_r ? 1.0 : 0.0;
    const double n = static_cast<double>(N_r);
    const double x = static_cast<double>(k);
    const double log_choose =
        std::lgamma(n + 1.0) - std::lgamma(x + 1.0) - std::lgamma(n - x + 1.0);
    return std::exp(log_choose + x * std::log(P_b) + (n - x) * std::log1p(-P_b));
}

double bound_count_cdf(long long N_r, double P_b, long long k) {
    if (k < 0) return 0.0;
    if (k >= N_r) return 1.0;
    double acc = 0.0;
    for (long long i = 0; i <= k; ++i) {
        acc += bound_count_pmf(N_r, P_b, i);
    }
    return acc < 1.0 ? acc : 1.0;
}

BindingStats binding_stats(const SystemParams& params, double Ntx) {
    const double rho_R = received_concentration(params, Ntx);
    const double P_b = bound_probability(rho_R, params.receptor.k1, params.receptor.k_m1);
    const double N_r = params.N_r();
    BindingStats out;
    out.P_b = P_b;
    out.N_r = N_r;
    out.mu_Nb = P_b * N_r;
    out.var_Nb = P_b * (1.0 - P_b) * N_r;
    return out;
}

}  // namespace mcfet
