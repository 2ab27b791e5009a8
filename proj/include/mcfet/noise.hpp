#pragma once

#include "mcfet/params.hpp"

namespace mcfet {

// Output-referred noise description. S(f) = S0/|f| above f_L, flat below.
// The binding contribution depends on the transmitted count, so the two
// variance evaluators take Ntx.
struct NoiseBudget {
    double S0;        // 1/f PSD coefficient (A^2)
    double f_L;       // low cutoff, 1/T_obs (Hz)
    double f_H;       // upper integration cutoff (Hz)
    double sigma2_F;  // flicker variance over [-f_H, f_H] (A^2)

    // cached pieces for the Ntx-dependent terms
    double alpha_ch;      // channel attenuation (1/m^3)
    double k1;            // binding rate (m^3/s)
    double k_m1;          // unbinding rate (1/s)
    double N_r;           // receptor count
    double gain_squared;  // (g_FET * psi_L)^2 (A^2)

    double psd(double f) const;
    double sigma2_binding(double Ntx) const;
    double sigma2_total(double Ntx) const;
};

// Output-current flicker PSD at frequency f. Even in f; returns the f_L
// plateau value for |f| < f_L, including f = 0.
double flicker_psd(double f, const SystemParams& params);

// Total flicker power 2*S0*(1 + ln(f_H/f_L)); both frequency tails counted.
double flicker_variance(const SystemParams& params);

// Flicker plus binomial binding noise through the transducer gain.
double total_variance(const SystemParams& params, double Ntx);

NoiseBudget noise_budget(const SystemParams& params);

}  // namespace mcfet
