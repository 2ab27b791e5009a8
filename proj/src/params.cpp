#include "mcfet/params.hpp"

#include <cmath>

#include "mcfet/constants.hpp"

namespace mcfet {

double SystemParams::N_r() const {
    // receptors sit on the effective top strip w_R * l_R of the nanowire
    return receptor.rho_SR * pi * transducer.r_R * transducer.l_R;
}

SystemParams default_params() {
    SystemParams p;
    p.channel.d = 250e-6;
    p.channel.D = 1e-10;  // assumed default: typical small-molecule aqueous diffusion
    p.channel.Ntx_min = 1e8;
    p.channel.Ntx_max = 1e9;

    p.receptor.k1 = 2e-18;
    p.receptor.k_m1 = 10.0;
    p.receptor.rho_SR = 4e16;
    p.receptor.l_SR = 2e-9;
    p.receptor.Ne = 3.0;

    p.transducer.r_R = 10e-9;
    p.transducer.l_R = 1e-6;  // assumed default, keeps N_r ~ 1257 (> 1000)
    p.transducer.t_ox = 2e-9;
    p.transducer.eps_ox = 3.9 * phys.eps0;
    p.transducer.eps_Si = 11.68 * phys.eps0;
    p.transducer.eps_M = 78.0 * phys.eps0;
    p.transducer.c_ion = 30.0;
    p.transducer.p = 1e24;  // 1e18 cm^-3
    p.transducer.mu_p = 0.05;  // 500 cm^2/Vs
    p.transducer.V_SD = 0.1;
    p.transducer.V_SG = 0.4;
    p.transducer.V_TH = 0.0;
    p.transducer.T = 300.0;

    p.noise.lambda_tun = 0.05e-9;
    p.noise.N_ot = 1e16 * per_eV_cm3;  // 1e16 eV^-1 cm^-3
    // Literature-scale scattering coefficient. Datasheets circulating with 1.9e14 Vs/C
    // put the flicker power ~20 orders above the signal; see README on assumed defaults.
    p.noise.alpha_s = 1.9e4;
    p.noise.T_obs = pi * 1e7;  // one year of operation
    p.noise.f_H = 1.0;  // assumed default: baseband receiver bandwidth
    p.noise.flatband_literal = true;
    return p;
}

namespace {

void require_positive(std::vector<Violation>& out, const char* field, double v) {
    if (!(v > 0.0) || !std::isfinite(v))
        out.push_back({field, std::string(field) + " must be > 0"});
}

}  // namespace

std::vector<Violation> validate(const SystemParams& p) {
    std::vector<Violation> out;

    require_positive(out, "channel.d", p.channel.d);
    require_positive(out, "channel.D", p.channel.D);
    require_positive(out, "channel.Ntx_min", p.channel.Ntx_min);
    require_positive(out, "channel.Ntx_max", p.channel.Ntx_max);
    if (p.channel.Ntx_min > 0 && p.channel.Ntx_max > 0 &&
        !(p.channel.Ntx_min < p.channel.Ntx_max))
        out.push_back({"channel.Ntx_min", "Ntx_min < Ntx_max violated"});

    require_positive(out, "receptor.k1", p.receptor.k1);
    require_positive(out, "receptor.k_m1", p.receptor.k_m1);
    require_positive(out, "receptor.rho_SR", p.receptor.rho_SR);
    require_positive(out, "receptor.l_SR", p.receptor.l_SR);
    require_positive(out, "receptor.Ne", p.receptor.Ne);

    require_positive(out, "transducer.r_R", p.transducer.r_R);
    require_positive(out, "transducer.l_R", p.transducer.l_R);
    require_positive(out, "transducer.t_ox", p.transducer.t_ox);
    require_positive(out, "transducer.eps_ox", p.transducer.eps_ox);
    require_positive(out, "transducer.eps_Si", p.transducer.eps_Si);
    require_positive(out, "transducer.eps_M", p.transducer.eps_M);
    require_positive(out, "transducer.c_ion", p.transducer.c_ion);
    require_positive(out, "transducer.p", p.transducer.p);
    require_positive(out, "transducer.mu_p", p.transducer.mu_p);
    require_positive(out, "transducer.V_SD", p.transducer.V_SD);
    require_positive(out, "transducer.T", p.transducer.T);
    if (!(p.transducer.V_SG - std::fabs(p.transducer.V_TH) > 0.0))
        out.push_back({"transducer.V_SG",
                       "V_SG - |V_TH| must be > 0 (linear-region operation)"});

    require_positive(out, "noise.lambda_tun", p.noise.lambda_tun);
    require_positive(out, "noise.N_ot", p.noise.N_ot);
    require_positive(out, "noise.alpha_s", p.noise.alpha_s);
    require_positive(out, "noise.T_obs", p.noise.T_obs);
    if (p.noise.T_obs > 0 && !(p.noise.f_H > 1.0 / p.noise.T_obs))
        out.push_back({"noise.f_H", "f_H must exceed f_L = 1/T_obs"});

    const double n_r = p.N_r();
    if (!(n_r >= 1.0))
        out.push_back({"receptor.rho_SR", "derived receptor count N_r must be >= 1"});
    else if (n_r < 1000.0)
        out.push_back({"receptor.rho_SR",
                       "derived N_r < 1000: Gaussian approximation degrades", true});

    return out;
}

bool has_errors(const std::vector<Violation>& violations) {
    for (const auto& v : violations)
        if (!v.warning) return true;
    return false;
}

}  // namespace mcfet
