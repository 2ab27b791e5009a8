#include "mcfet/diffusion.hpp"

#include <cmath>
#include <stdexcept>

#include "mcfet/constants.hpp"

namespace mcfet {

double concentration_at(double d, double t, double Ntx, double D) {
    if (!(d > 0.0)) throw std::domain_error("concentration_at: d must be > 0");
    if (!(t > 0.0)) throw std::domain_error("concentration_at: t must be > 0");
    if (!(D > 0.0)) throw std::domain_error("concentration_at: D must be > 0");
    if (Ntx < 0.0) throw std::domain_error("concentration_at: Ntx must be >= 0");
    return Ntx * std::pow(4.0 * pi * D * t, -1.5) * std::exp(-d * d / (4.0 * D * t));
}

double peak_time(double d, double D) {
    if (!(d > 0.0)) throw std::domain_error("peak_time: d must be > 0");
    if (!(D > 0.0)) throw std::domain_error("peak_time: D must be > 0");
    return d * d / (6.0 * D);
}

double attenuation(double d) {
    if (!(d > 0.0)) throw std::domain_error("attenuation: d must be > 0");
    return std::pow(3.0 / (2.0 * pi * std::exp(1.0)), 1.5) / (d * d * d);
}

ChannelGain channel_gain(const ChannelParams& channel) {
    return {attenuation(channel.d), peak_time(channel.d, channel.D)};
}

double received_concentration(const SystemParams& params, double Ntx) {
    if (Ntx < 0.0) throw std::domain_error("received_concentration: Ntx must be >= 0");
    return attenuation(params.channel.d) * Ntx;
}

}  // namespace mcfet
