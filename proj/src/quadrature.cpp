#include "mcfet/quadrature.hpp"

#include <stdexcept>

namespace mcfet {

double trapezoid(const std::vector<double>& grid, const std::vector<double>& values) {
    if (grid.size() != values.size())
        throw std::invalid_argument("trapezoid: grid/value size mismatch");
    if (grid.size() < 2) return 0.0;
    double sum = 0.0;
    for (size_t i = 0; i + 1 < grid.size(); ++i)
        sum += 0.5 * (grid[i + 1] - grid[i]) * (values[i] + values[i + 1]);
    return sum;
}

}  // namespace mcfet
