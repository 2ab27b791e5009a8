#include "mcfet/checks.hpp"

#include <cmath>
#include <sstream>

#include "mcfet/capacity.hpp"
#include "mcfet/constants.hpp"
#include "mcfet/link.hpp"
#include "mcfet/oracle.hpp"
#include "mcfet/quadrature.hpp"

namespace mcfet {

namespace {

CheckResult make_check(std::string name, double measured, double tolerance, std::string detail) {
    CheckResult c;
    c.name = std::move(name);
    c.measured = measured;
    c.tolerance = tolerance;
    c.pass = std::isfinite(measured) && measured <= tolerance;
    c.detail = std::move(detail);
    return c;
}

std::string describe(double reference, double other) {
    std::ostringstream os;
    os.precision(10);
    os << reference << " vs " << other;
    return os.str();
}

}  // namespace

std::vector<CheckResult> run_checks(const SystemParams& params, bool full, std::uint64_t seed) {
    std::vector<CheckResult> out;
    const LinkModel link(params);
    const CapacityResult cap = capacity_closed_form(link);

    // Normalization constant: quadrature against the arcsine closed form.
    {
        const double kq = k_norm_quadrature(link);
        const double kc = k_norm_closed_form(link, FormulaVariant::corrected);
        out.push_back(make_check("k_norm_quadrature_vs_closed_form",
                                 std::fabs(kq - kc) / std::fabs(kc), 1e-6, describe(kq, kc)));
    }

    const TabulatedPdf fstar = optimal_input_pdf(link, 512);

    // The closed form should reproduce its own Taylor functional at f*.
    {
        const double mt = mi_taylor(fstar, link);
        out.push_back(make_check("capacity_vs_mi_taylor_fstar", std::fabs(cap.C_bits - mt), 1e-3,
                                 describe(cap.C_bits, mt)));
    }

    // Transition density integrates to one.
    {
        const double x_mid = 0.5 * (params.channel.Ntx_min + params.channel.Ntx_max);
        const double mu = link.mu(x_mid);
        const double sd = link.sigma(x_mid);
        const QuadResult r = integrate(
            [&](double y) { return transition_pdf(y, x_mid, link); }, mu - 12.0 * sd,
            mu + 12.0 * sd, 1e-13, 1e-11);
        out.push_back(make_check("transition_pdf_normalization", std::fabs(r.value - 1.0), 1e-9,
                                 describe(r.value, 1.0)));
    }

    // Closed-form Gaussian entropy against direct quadrature of -p log2 p.
    {
        const double x_mid = 0.5 * (params.channel.Ntx_min + params.channel.Ntx_max);
        const double s2 = link.sigma2(x_mid);
        const double mu = link.mu(x_mid);
        const double sd = std::sqrt(s2);
        const QuadResult r = integrate(
            [&](double y) {
                const double p = transition_pdf(y, x_mid, link);
                return p > 0.0 ? -p * std::log2(p) : 0.0;
            },
            mu - 12.0 * sd, mu + 12.0 * sd, 1e-13, 1e-11);
        out.push_back(make_check("gaussian_entropy_quadrature",
                                 std::fabs(r.value - gaussian_entropy(s2)), 1e-6,
                                 describe(r.value, gaussian_entropy(s2))));
    }

    // Optimal input density: unit mass and the expected decreasing shape.
    {
        out.push_back(make_check("optimal_pdf_normalization", std::fabs(fstar.integral() - 1.0),
                                 1e-6, "tabulation residual " + std::to_string(fstar.norm_residual)));
        double worst_rise = 0.0;
        double peak = 0.0;
        for (std::size_t i = 0; i + 1 < fstar.density.size(); ++i) {
            worst_rise = std::max(worst_rise, fstar.density[i + 1] - fstar.density[i]);
            peak = std::max(peak, fstar.density[i]);
        }
        out.push_back(make_check("optimal_pdf_decreasing", worst_rise / peak, 0.0,
                                 "largest relative rise between neighbors"));
    }

    // Oracle agreement on these parameters.
    {
        const double mn = mi_numeric(fstar, params);
        out.push_back(make_check("capacity_vs_mi_numeric_fstar", std::fabs(cap.C_bits - mn), 0.02,
                                 describe(cap.C_bits, mn)));
    }

    if (!full) return out;

    // Blahut-Arimoto on the default discretization.
    {
        const DiscreteChannel ch = discretize_channel(params, 512, 2048, 8.0);
        const BaResult ba = capacity_blahut_arimoto(ch, 1e-3, 20000);
        std::ostringstream det;
        det.precision(10);
        det << ba.capacity_bits << " vs " << cap.C_bits << " (iterations " << ba.iterations
            << ", gap " << ba.gap_bound << ")";
        out.push_back(make_check("blahut_arimoto_vs_closed_form",
                                 std::fabs(ba.capacity_bits - cap.C_bits), 0.05, det.str()));
    }

    // Analytic binary symmetric channel oracle.
    {
        DiscreteChannel bsc;
        bsc.input_grid = {0.0, 1.0};
        bsc.output_bins = {0.0, 1.0};
        bsc.transition_matrix = {{0.89, 0.11}, {0.11, 0.89}};
        const BaResult ba = capacity_blahut_arimoto(bsc, 1e-6, 20000);
        const double analytic = 1.0 + 0.11 * std::log2(0.11) + 0.89 * std::log2(0.89);
        out.push_back(make_check("bsc_blahut_arimoto", std::fabs(ba.capacity_bits - analytic),
                                 1e-3, describe(ba.capacity_bits, analytic)));
    }

    // Monte Carlo moments and normality at the upper end of the input range.
    {
        const std::size_t n = 100000;
        const SimResult sim = simulate_link(params, params.channel.Ntx_max, n, seed);
        const double se_mean = std::sqrt(sim.model_variance / static_cast<double>(n));
        const double se_var =
            sim.model_variance * std::sqrt(2.0 / static_cast<double>(n - 1));
        out.push_back(make_check("monte_carlo_mean_z",
                                 std::fabs(sim.mean - sim.model_mean) / se_mean, 5.0,
                                 describe(sim.mean, sim.model_mean)));
        out.push_back(make_check("monte_carlo_variance_z",
                                 std::fabs(sim.variance - sim.model_variance) / se_var, 5.0,
                                 describe(sim.variance, sim.model_variance)));
        out.push_back(make_check("normality_sup_distance", normality_check(sim.samples), 0.02,
                                 "fitted-Gaussian cdf distance"));
    }

    // Randomized parameter draws: K integrity and oracle agreement.
    {
        const std::vector<SystemParams> draws = random_param_draws(seed, 20);
        double worst_k = 0.0;
        double worst_mi = 0.0;
        std::size_t worst_k_at = 0;
        std::size_t worst_mi_at = 0;
        for (std::size_t i = 0; i < draws.size(); ++i) {
            const LinkModel dl(draws[i]);
            const double kq = k_norm_quadrature(dl);
            const double kc = k_norm_closed_form(dl, FormulaVariant::corrected);
            const double krel = std::fabs(kq - kc) / std::fabs(kc);
            if (krel > worst_k) {
                worst_k = krel;
                worst_k_at = i;
            }
            const CapacityResult dc = capacity_closed_form(dl);
            const double mn = mi_numeric(optimal_input_pdf(dl, 512), draws[i]);
            const double gap = std::fabs(dc.C_bits - mn);
            if (gap > worst_mi) {
                worst_mi = gap;
                worst_mi_at = i;
            }
        }
        out.push_back(make_check("k_norm_random_draws", worst_k, 1e-6,
                                 "worst of 20 draws at index " + std::to_string(worst_k_at)));
        out.push_back(make_check("mi_numeric_random_draws", worst_mi, 0.02,
                                 "worst of 20 draws at index " + std::to_string(worst_mi_at)));
    }

    return out;
}

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const CheckResult& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

}  // namespace mcfet
