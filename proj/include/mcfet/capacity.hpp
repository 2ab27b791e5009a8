#pragma once

#include <cstddef>

#include "mcfet/link.hpp"
#include "mcfet/pdf.hpp"

namespace mcfet {

// Which reading of the published capacity formula is in effect. The printed
// second arcsine argument reduces to 1 identically; the corrected form keeps
// the sign pattern of the first arcsine and matches the quadrature of K.
enum class FormulaVariant { literal, corrected };

const char* to_string(FormulaVariant v);

struct CapacityResult {
    double C_bits;      // capacity (bits/use)
    double L;           // flicker attenuation factor in (0, 1]
    double M;           // composite slope constant of the mean curve
    double K_norm;      // normalization constant of the optimal input pdf
    double arcsin_hi;   // arcsine term at Ntx_max
    double arcsin_lo;   // arcsine term at Ntx_min
    FormulaVariant formula_variant;
};

// Gaussian transition density p(y | Ntx).
double transition_pdf(double y, double Ntx, const LinkModel& link);
double transition_pdf(double y, double Ntx, const SystemParams& params);

// Differential entropy of a Gaussian, 0.5*log2(2*pi*e*sigma2), in bits.
double gaussian_entropy(double sigma2);

// Taylor-approximated mutual information of the link under the given input
// density, integrated by trapezoid on the pdf grid.
double mi_taylor(const TabulatedPdf& input_pdf, const LinkModel& link);
double mi_taylor(const TabulatedPdf& input_pdf, const SystemParams& params);

// Capacity-achieving input density 1/(K * sigma(x) * (alpha_ch*k1*x + k_m1)^2)
// tabulated on a uniform grid; K comes from adaptive quadrature.
TabulatedPdf optimal_input_pdf(const LinkModel& link, std::size_t grid_size);
TabulatedPdf optimal_input_pdf(const SystemParams& params, std::size_t grid_size);

// Normalization constant K by adaptive quadrature over the support.
double k_norm_quadrature(const LinkModel& link);

// K from the arcsine closed form under the chosen formula reading.
double k_norm_closed_form(const LinkModel& link, FormulaVariant variant);

CapacityResult capacity_closed_form(const SystemParams& params,
                                    FormulaVariant variant = FormulaVariant::corrected);
CapacityResult capacity_closed_form(const LinkModel& link,
                                    FormulaVariant variant = FormulaVariant::corrected);

}  // namespace mcfet
