#pragma once

#include "mcfet/params.hpp"

namespace mcfet {

struct ChannelGain {
    double alpha_ch;  // attenuation at the peak-sampling time (1/m^3)
    double t_peak;    // sampling time (s)
};

// Point-source free diffusion, impulse release of Ntx molecules.
// Returns Ntx/(4 pi D t)^{3/2} * exp(-d^2/(4 D t))  (1/m^3).
double concentration_at(double d, double t, double Ntx, double D);

// Time at which concentration_at peaks: d^2/(6 D).
double peak_time(double d, double D);

// Peak attenuation (3/(2 pi e))^{3/2} / d^3, so rho_R = alpha_ch * Ntx.
double attenuation(double d);

ChannelGain channel_gain(const ChannelParams& channel);

// Ligand concentration at the receiver at the sampling instant.
double received_concentration(const SystemParams& params, double Ntx);

}  // namespace mcfet
