#include "mcfet/capacity.hpp"

#include <cmath>
#include <stdexcept>

#include "mcfet/constants.hpp"
#include "mcfet/errors.hpp"
#include "mcfet/quadrature.hpp"

namespace mcfet {

namespace {

constexpr double kLog2e = 1.4426950408889634;

double log2_of(double x) { return std::log(x) * kLog2e; }

// Constants of the mean curve mu(x) = a*N_r*c*x/(c*x + km1).
struct ChainConsts {
    double c;    // alpha_ch * k1 (1/s per transmitted molecule)
    double km1;  // unbinding rate (1/s)
    double a;    // current per bound receptor (A)
    double N_r;  // receptor count
    double M;    // c * km1 * a, slope scale of mu'(x)
};

ChainConsts chain_consts(const LinkModel& link) {
    ChainConsts cc{};
    cc.c = link.gain().alpha_ch * link.params().receptor.k1;
    cc.km1 = link.params().receptor.k_m1;
    cc.a = link.current_per_ligand();
    cc.N_r = link.N_r();
    cc.M = cc.c * cc.km1 * cc.a;
    return cc;
}

}  // namespace

const char* to_string(FormulaVariant v) {
    return v == FormulaVariant::literal ? "literal" : "corrected";
}

double transition_pdf(double y, double Ntx, const LinkModel& link) {
    const double s2 = link.sigma2(Ntx);
    if (!(s2 > 0.0)) throw NumericError("transition_pdf: degenerate variance");
    const double d = y - link.mu(Ntx);
    return std::exp(-0.5 * d * d / s2) / std::sqrt(2.0 * pi * s2);
}

double transition_pdf(double y, double Ntx, const SystemParams& params) {
    return transition_pdf(y, Ntx, LinkModel(params));
}

double gaussian_entropy(double sigma2) {
    if (!(sigma2 > 0.0)) throw std::domain_error("gaussian_entropy: sigma2 must be > 0");
    return 0.5 * log2_of(2.0 * pi * std::exp(1.0) * sigma2);
}

double mi_taylor(const TabulatedPdf& input_pdf, const LinkModel& link) {
    const double residual = std::fabs(input_pdf.integral() - 1.0);
    if (residual > 1e-4) {
        throw std::domain_error("mi_taylor: input pdf is not normalized");
    }

    const ChainConsts cc = chain_consts(link);
    const double log2_NrM = log2_of(cc.N_r * cc.M);

    std::vector<double> integrand(input_pdf.grid.size());
    for (std::size_t i = 0; i < input_pdf.grid.size(); ++i) {
        const double q = input_pdf.density[i];
        if (q <= 0.0) {
            integrand[i] = 0.0;
            continue;
        }
        const double x = input_pdf.grid[i];
        const double rate = cc.c * x + cc.km1;
        const double slope_term = 2.0 * log2_of(rate) - log2_NrM;
        integrand[i] = q * (log2_of(q) + gaussian_entropy(link.sigma2(x)) + slope_term);
    }
    return -trapezoid(input_pdf.grid, integrand);
}

double mi_taylor(const TabulatedPdf& input_pdf, const SystemParams& params) {
    return mi_taylor(input_pdf, LinkModel(params));
}

double k_norm_quadrature(const LinkModel& link) {
    const ChainConsts cc = chain_consts(link);
    const auto integrand = [&](double x) {
        const double rate = cc.c * x + cc.km1;
        return 1.0 / (link.sigma(x) * rate * rate);
    };
    const QuadResult r = integrate(integrand, link.params().channel.Ntx_min,
                                   link.params().channel.Ntx_max);
    if (!r.converged) {
        throw NumericError("k_norm_quadrature: normalization integral did not converge");
    }
    return r.value;
}

namespace {

struct ArcsineTerms {
    double L;
    double hi;  // arcsine at Ntx_max
    double lo;  // arcsine at Ntx_min
};

ArcsineTerms arcsine_terms(const LinkModel& link, FormulaVariant variant) {
    const ChainConsts cc = chain_consts(link);
    const double a2Nr = cc.a * cc.a * cc.N_r;
    const double s2F = link.noise().sigma2_F;
    ArcsineTerms t{};
    t.L = std::sqrt(a2Nr / (4.0 * s2F + a2Nr));

    // Operating point of the binding curve: transmitted count at which the
    // received concentration equals the dissociation constant.
    const double r = cc.km1 / cc.c;
    const auto w = [r](double x) { return (x - r) / (x + r); };

    const double hi_arg = t.L * w(link.params().channel.Ntx_max);
    const double lo_arg =
        variant == FormulaVariant::corrected ? t.L * w(link.params().channel.Ntx_min) : t.L;
    if (std::fabs(hi_arg) > 1.0 || std::fabs(lo_arg) > 1.0) {
        throw NumericError("capacity: arcsine argument outside [-1, 1]");
    }
    t.hi = std::asin(hi_arg);
    t.lo = std::asin(lo_arg);
    return t;
}

}  // namespace

double k_norm_closed_form(const LinkModel& link, FormulaVariant variant) {
    const ChainConsts cc = chain_consts(link);
    const ArcsineTerms t = arcsine_terms(link, variant);
    return (t.hi - t.lo) / (cc.M * std::sqrt(cc.N_r));
}

CapacityResult capacity_closed_form(const LinkModel& link, FormulaVariant variant) {
    const ChainConsts cc = chain_consts(link);
    const ArcsineTerms t = arcsine_terms(link, variant);
    const double bracket = t.hi - t.lo;
    if (!(bracket > 0.0)) {
        throw NumericError("capacity_closed_form: arcsine bracket is not positive");
    }
    CapacityResult res{};
    res.L = t.L;
    res.M = cc.M;
    res.arcsin_hi = t.hi;
    res.arcsin_lo = t.lo;
    res.K_norm = bracket / (cc.M * std::sqrt(cc.N_r));
    res.C_bits = 0.5 * log2_of(cc.N_r / (2.0 * pi * std::exp(1.0))) + log2_of(bracket);
    res.formula_variant = variant;
    return res;
}

CapacityResult capacity_closed_form(const SystemParams& params, FormulaVariant variant) {
    return capacity_closed_form(LinkModel(params), variant);
}

TabulatedPdf optimal_input_pdf(const LinkModel& link, std::size_t grid_size) {
    if (grid_size < 64) {
        throw std::invalid_argument("optimal_input_pdf: grid_size must be at least 64");
    }
    const ChainConsts cc = chain_consts(link);
    const double K = k_norm_quadrature(link);
    const auto fstar = [&](double x) {
        const double rate = cc.c * x + cc.km1;
        return 1.0 / (K * link.sigma(x) * rate * rate);
    };
    return tabulate_pdf(fstar, link.params().channel.Ntx_min, link.params().channel.Ntx_max,
                        grid_size);
}

TabulatedPdf optimal_input_pdf(const SystemParams& params, std::size_t grid_size) {
    return optimal_input_pdf(LinkModel(params), grid_size);
}

}  // namespace mcfet
