#pragma once

#include "mcfet/diffusion.hpp"
#include "mcfet/noise.hpp"
#include "mcfet/params.hpp"
#include "mcfet/transducer.hpp"

namespace mcfet {

// Deterministic signal-chain outputs for one transmitted count.
struct SignalStats {
    double rho_R;       // ligand concentration at the receiver (1/m^3)
    double P_b;         // bound probability
    double mu_Nb;       // mean bound receptors
    double var_Nb;      // variance of bound receptors
    double mu_Irx;      // mean output current (A)
    double sigma2_Irx;  // output current variance (A^2)
};

// Precomputes every Ntx-independent quantity once. The capacity and oracle
// code calls mu/sigma2 inside quadrature loops, so these must be cheap.
class LinkModel {
  public:
    explicit LinkModel(const SystemParams& params);

    const SystemParams& params() const { return params_; }
    const ChannelGain& gain() const { return gain_; }
    const TransducerDerived& fet() const { return fet_; }
    const NoiseBudget& noise() const { return noise_; }

    double N_r() const { return N_r_; }
    // current contributed by one bound receptor, g_FET * psi_L (A)
    double current_per_ligand() const { return a_; }

    double bound_prob(double Ntx) const;
    double mu(double Ntx) const;
    double sigma2(double Ntx) const;
    double sigma(double Ntx) const;

    // Inverts the strictly increasing mean curve. Requires 0 < I < saturation.
    double mu_inverse(double I) const;

    SignalStats stats(double Ntx) const;

  private:
    SystemParams params_;
    ChannelGain gain_;
    TransducerDerived fet_;
    NoiseBudget noise_;
    double N_r_;
    double a_;
    double on_rate_;  // alpha_ch * k1, the concentration-side binding rate
};

}  // namespace mcfet
