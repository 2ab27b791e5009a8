#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace mcfet {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;      // accumulated error estimate
    int evaluations = 0;
    bool converged = false;
};

namespace detail {

// Gauss 7 / Kronrod 15 abscissae (|x| on [0,1]) with Gauss and Kronrod weights.
inline constexpr double g7k15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0,               0.204432940075298},
    {0.586087235467691, 0.0,               0.169004726639267},
    {0.864864423359769, 0.0,               0.104790010322250},
    {0.991455371120813, 0.0,               0.022935322010529},
};

template <class F>
double quad_g7k15(const F& f, double a, double b, double& err) {
    const double x0 = 0.5 * (a + b);
    const double m = b - x0;

    const double y0 = f(x0);
    double g7 = g7k15[0][1] * y0;
    double k15 = g7k15[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = m * g7k15[i][0];
        const double yi = f(x0 + dx) + f(x0 - dx);
        g7 += g7k15[i][1] * yi;
        k15 += g7k15[i][2] * yi;
    }
    g7 *= m;
    k15 *= m;

    err = 200.0 * std::fabs(g7 - k15);
    err *= std::sqrt(err);
    return k15;
}

}  // namespace detail

// Adaptive bisection on an interval stack. The per-segment error budget is the
// total tolerance scaled by segment length, so acceptance is order-independent.
template <class F>
QuadResult integrate(const F& f, double a, double b, double abs_tol = 1e-10,
                     double rel_tol = 1e-8, int max_intervals = 20000) {
    QuadResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }

    double err0;
    const double whole = detail::quad_g7k15(f, a, b, err0);
    res.evaluations = 15;
    const double tol = std::max(abs_tol, rel_tol * std::fabs(whole));

    struct Seg {
        double a, b, value, error;
    };
    std::vector<Seg> stack{{a, b, whole, err0}};
    const double inv_len = 1.0 / std::fabs(b - a);

    int used = 1;
    res.converged = true;
    while (!stack.empty()) {
        const Seg s = stack.back();
        stack.pop_back();
        const double budget = tol * std::fabs(s.b - s.a) * inv_len;
        if (s.error <= budget || !(std::fabs(s.b - s.a) > 0)) {
            res.value += s.value;
            res.error += s.error;
            continue;
        }
        if (used + 2 > max_intervals) {
            // out of segments; keep the best estimate and flag non-convergence
            res.value += s.value;
            res.error += s.error;
            res.converged = false;
            continue;
        }
        const double mid = 0.5 * (s.a + s.b);
        double e1, e2;
        const double v1 = detail::quad_g7k15(f, s.a, mid, e1);
        const double v2 = detail::quad_g7k15(f, mid, s.b, e2);
        res.evaluations += 30;
        stack.push_back({s.a, mid, v1, e1});
        stack.push_back({mid, s.b, v2, e2});
        used += 2;
    }
    return res;
}

// Integral of tabulated values on a (not necessarily uniform) grid.
double trapezoid(const std::vector<double>& grid, const std::vector<double>& values);

}  // namespace mcfet
