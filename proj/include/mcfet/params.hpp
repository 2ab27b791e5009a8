#pragma once

#include <string>
#include <vector>

namespace mcfet {

// All values SI. Conversions from mixed input units happen at the config boundary.

struct ChannelParams {
    double d;        // TX-RX distance (m)
    double D;        // diffusion coefficient (m^2/s)
    double Ntx_min;  // minimum released molecule count
    double Ntx_max;  // maximum released molecule count
};

struct ReceptorParams {
    double k1;      // binding rate (m^3/s)
    double k_m1;    // unbinding rate (1/s)
    double rho_SR;  // receptor surface density (1/m^2)
    double l_SR;    // receptor length (m)
    double Ne;      // electrons per bound ligand

    double K_D() const { return k_m1 / k1; }  // dissociation constant (1/m^3)
};

struct TransducerParams {
    double r_R;     // SiNW radius (m)
    double l_R;     // SiNW length (m)
    double t_ox;    // oxide thickness (m)
    double eps_ox;  // oxide permittivity (F/m)
    double eps_Si;  // SiNW permittivity (F/m)
    double eps_M;   // electrolyte permittivity (F/m)
    double c_ion;   // ionic concentration (mol/m^3)
    double p;       // hole density (1/m^3)
    double mu_p;    // hole mobility (m^2/(V*s))
    double V_SD;    // source-drain voltage (V)
    double V_SG;    // source-gate voltage (V)
    double V_TH;    // threshold voltage (V)
    double T;       // temperature (K)
};

struct NoiseParams {
    double lambda_tun;     // characteristic tunneling distance (m)
    double N_ot;           // oxide trap density (1/(J*m^3))
    double alpha_s;        // Coulomb scattering coefficient (V*s/C)
    double T_obs;          // observation time (s), sets f_L = 1/T_obs
    double f_H;            // upper integration cutoff (Hz)
    bool flatband_literal; // true: g^4 flatband PSD as printed; false: single g^2
};

struct SystemParams {
    ChannelParams channel;
    ReceptorParams receptor;
    TransducerParams transducer;
    NoiseParams noise;

    // receptor count on the nanowire surface
    double N_r() const;
};

SystemParams default_params();

struct Violation {
    std::string field;
    std::string message;
    bool warning = false;  // warnings don't invalidate the record
};

// Empty iff every hard invariant holds. N_r < 1000 is reported as a warning
// (Gaussian approximation regime), not an error.
std::vector<Violation> validate(const SystemParams& params);

bool has_errors(const std::vector<Violation>& violations);

}  // namespace mcfet
