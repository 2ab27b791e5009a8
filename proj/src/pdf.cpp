#include "mcfet/pdf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mcfet/errors.hpp"
#include "mcfet/quadrature.hpp"

namespace mcfet {

double TabulatedPdf::operator()(double x) const {
    if (grid.size() < 2 || x < grid.front() || x > grid.back()) return 0.0;
    auto it = std::upper_bound(grid.begin(), grid.end(), x);
    if (it == grid.end()) return density.back();
    const std::size_t hi = static_cast<std::size_t>(it - grid.begin());
    const std::size_t lo = hi - 1;
    const double t = (x - grid[lo]) / (grid[hi] - grid[lo]);
    return density[lo] + t * (density[hi] - density[lo]);
}

double TabulatedPdf::integral() const {
    return trapezoid(grid, density);
}

TabulatedPdf tabulate_pdf(const std::function<double(double)>& f, double lo, double hi,
                          std::size_t n) {
    if (n < 2) throw std::invalid_argument("tabulate_pdf: need at least two grid points");
    if (!(lo < hi)) throw std::invalid_argument("tabulate_pdf: empty support");

    TabulatedPdf pdf;
    pdf.grid.resize(n);
    pdf.density.resize(n);
    const double h = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = i + 1 == n ? hi : lo + h * static_cast<double>(i);
        pdf.grid[i] = x;
        pdf.density[i] = std::max(f(x), 0.0);
    }
    renormalize(pdf);
    return pdf;
}

TabulatedPdf uniform_pdf(double lo, double hi, std::size_t n) {
    const double level = 1.0 / (hi - lo);
    return tabulate_pdf([level](double) { return level; }, lo, hi, n);
}

void renormalize(TabulatedPdf& pdf) {
    const double mass = pdf.integral();
    if (!std::isfinite(mass) || mass <= 0.0) {
        throw NumericError("renormalize: density has no finite positive mass");
    }
    for (double& v : pdf.density) v /= mass;
    pdf.norm_residual = std::fabs(mass - 1.0);
}

}  // namespace mcfet
