#pragma once

#include "mcfet/params.hpp"

namespace mcfet {

struct BindingStats {
    double P_b;     // single-receptor bound probability
    double mu_Nb;   // mean bound count
    double var_Nb;  // variance of bound count
    double N_r;     // receptor count
};

// Steady-state occupancy k1*rho_R / (k1*rho_R + k_m1).
double bound_probability(double rho_R, double k1, double k_m1);

// Binomial pmf P(N_b = k | N_r, P_b), evaluated in log space so it stays
// finite for receptor counts in the thousands.
double bound_count_pmf(long long N_r, double P_b, long long k);

// Exact binomial cdf P(N_b <= k); the oracle for the Gaussian-approximation checks.
double bound_count_cdf(long long N_r, double P_b, long long k);

// Composes attenuation -> bound_probability -> binomial moments at the
// sampling instant.
BindingStats binding_stats(const SystemParams& params, double Ntx);

}  // namespace mcfet
