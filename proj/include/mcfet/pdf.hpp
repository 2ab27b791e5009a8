#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace mcfet {

// Probability density tabulated on a strictly increasing grid. Densities are
// kept trapezoid-normalized; norm_residual records how far the raw tabulation
// was from unit mass before the on-grid renormalization.
struct TabulatedPdf {
    std::vector<double> grid;
    std::vector<double> density;
    double norm_residual = 0.0;

    // Linear interpolation between grid points, zero outside the support.
    double operator()(double x) const;

    // Trapezoid mass of the current tabulation.
    double integral() const;

    double lo() const { return grid.front(); }
    double hi() const { return grid.back(); }
};

// Samples f on a uniform n-point grid over [lo, hi] and renormalizes.
// Negative samples are clipped to zero before normalization.
TabulatedPdf tabulate_pdf(const std::function<double(double)>& f, double lo, double hi,
                          std::size_t n);

TabulatedPdf uniform_pdf(double lo, double hi, std::size_t n);

// Rescales density so the trapezoid integral is exactly one; updates
// norm_residual with the residual found.
void renormalize(TabulatedPdf& pdf);

}  // namespace mcfet
