#include "mcfet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "mcfet/capacity.hpp"
#include "mcfet/constants.hpp"
#include "mcfet/errors.hpp"
#include "mcfet/link.hpp"
#include "mcfet/quadrature.hpp"

namespace mcfet {

namespace {

constexpr double kLn2 = 0.6931471805599453;

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + (i + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Cubic Hermite interpolant on a uniform grid, slopes from centered
// differences. Clamps outside the grid.
struct HermiteTable {
    double lo = 0.0;
    double h = 1.0;
    std::vector<double> y;
    std::vector<double> dy;

    void build(double lo_in, double h_in, std::vector<double> values) {
        lo = lo_in;
        h = h_in;
        y = std::move(values);
        const std::size_t n = y.size();
        dy.resize(n);
        dy[0] = (y[1] - y[0]) / h;
        dy[n - 1] = (y[n - 1] - y[n - 2]) / h;
        for (std::size_t i = 1; i + 1 < n; ++i) dy[i] = (y[i + 1] - y[i - 1]) / (2.0 * h);
    }

    double operator()(double x) const {
        const std::size_t n = y.size();
        double s = (x - lo) / h;
        if (s <= 0.0) return y.front();
        if (s >= static_cast<double>(n - 1)) return y.back();
        const std::size_t i = static_cast<std::size_t>(s);
        const double t = s - static_cast<double>(i);
        const double t2 = t * t;
        const double t3 = t2 * t;
        const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        const double h10 = t3 - 2.0 * t2 + t;
        const double h01 = -2.0 * t3 + 3.0 * t2;
        const double h11 = t3 - t2;
        return h00 * y[i] + h10 * h * dy[i] + h01 * y[i + 1] + h11 * h * dy[i + 1];
    }
};

// Fixed 15-point Kronrod rule on [a, b]; used for integrands that are smooth
// within a single tabulation segment.
template <class F>
double kronrod15(const F& f, double a, double b) {
    double err;
    return detail::quad_g7k15(f, a, b, err);
}

}  // namespace

double mi_numeric(const TabulatedPdf& input_pdf, const SystemParams& params, double quad_tol) {
    const double residual = std::fabs(input_pdf.integral() - 1.0);
    if (residual > 1e-4) {
        throw std::domain_error("mi_numeric: input pdf is not normalized");
    }
    if (!(quad_tol > 0.0)) throw std::invalid_argument("mi_numeric: quad_tol must be > 0");

    const LinkModel link(params);
    const double xlo = input_pdf.lo();
    const double xhi = input_pdf.hi();
    const double mu_lo = link.mu(xlo);
    const double mu_hi = link.mu(xhi);

    // Output window wide enough that the discarded Gaussian mass is
    // negligible for every input in the support.
    double ylo = mu_lo;
    double yhi = mu_hi;
    for (int i = 0; i <= 64; ++i) {
        const double x = xlo + (xhi - xlo) * static_cast<double>(i) / 64.0;
        const double s = link.sigma(x);
        const double m = link.mu(x);
        ylo = std::min(ylo, m - 8.5 * s);
        yhi = std::max(yhi, m + 8.5 * s);
    }

    const double rel_tol = std::min(1e-8, quad_tol * 1e-2);
    const double abs_tol = 1e-9 / (yhi - ylo);

    // Marginal density on a dense grid. The x-integrand peaks where the mean
    // curve passes through y, so the domain is split there.
    const std::size_t n_nodes = 4097;
    const double hy = (yhi - ylo) / static_cast<double>(n_nodes - 1);
    std::vector<double> marginal(n_nodes);
    bool all_converged = true;
    double worst_error = 0.0;

    for (std::size_t k = 0; k < n_nodes; ++k) {
        const double y = ylo + hy * static_cast<double>(k);
        const auto integrand = [&](double x) {
            const double q = input_pdf(x);
            if (q <= 0.0) return 0.0;
            const double s2 = link.sigma2(x);
            const double d = y - link.mu(x);
            return q * std::exp(-0.5 * d * d / s2) / std::sqrt(2.0 * pi * s2);
        };

        QuadResult r;
        if (y > mu_lo && y < mu_hi) {
            const double u0 = link.mu_inverse(y);
            const QuadResult left = integrate(integrand, xlo, u0, abs_tol, rel_tol);
            const QuadResult right = integrate(integrand, u0, xhi, abs_tol, rel_tol);
            r.value = left.value + right.value;
            r.error = left.error + right.error;
            r.converged = left.converged && right.converged;
        } else {
            r = integrate(integrand, xlo, xhi, abs_tol, rel_tol);
        }
        marginal[k] = std::max(r.value, 0.0);
        all_converged = all_converged && r.converged;
        worst_error = std::max(worst_error, r.error);
    }
    if (!all_converged) {
        throw NumericError("mi_numeric: marginal quadrature did not converge (achieved +-" +
                           std::to_string(worst_error) + ")");
    }

    HermiteTable fy;
    fy.build(ylo, hy, std::move(marginal));

    // Output entropy, one Kronrod panel per tabulation segment.
    double h_out = 0.0;
    for (std::size_t k = 0; k + 1 < n_nodes; ++k) {
        const double a = ylo + hy * static_cast<double>(k);
        h_out -= kronrod15(
            [&](double y) {
                const double v = fy(y);
                return v > 0.0 ? v * std::log(v) : 0.0;
            },
            a, a + hy);
    }

    // Conditional entropy, one panel per input-grid segment.
    double h_cond = 0.0;
    const double two_pi_e = 2.0 * pi * std::exp(1.0);
    for (std::size_t k = 0; k + 1 < input_pdf.grid.size(); ++k) {
        h_cond += kronrod15(
            [&](double x) {
                const double q = input_pdf(x);
                return q > 0.0 ? q * 0.5 * std::log(two_pi_e * link.sigma2(x)) : 0.0;
            },
            input_pdf.grid[k], input_pdf.grid[k + 1]);
    }

    return (h_out - h_cond) / kLn2;
}

DiscreteChannel discretize_channel(const SystemParams& params, std::size_t n_in,
                                   std::size_t n_out, double y_span_sigmas) {
    if (n_in < 64) throw std::invalid_argument("discretize_channel: n_in must be >= 64");
    if (n_out < 128) throw std::invalid_argument("discretize_channel: n_out must be >= 128");
    if (!(y_span_sigmas >= 6.0)) {
        throw std::invalid_argument("discretize_channel: y_span_sigmas must be >= 6");
    }

    const LinkModel link(params);
    const double xlo = params.channel.Ntx_min;
    const double xhi = params.channel.Ntx_max;

    DiscreteChannel ch;
    ch.input_grid.resize(n_in);
    std::vector<double> mus(n_in);
    std::vector<double> sds(n_in);
    double ylo = 0.0;
    double yhi = 0.0;
    for (std::size_t i = 0; i < n_in; ++i) {
        const double x = xlo + (xhi - xlo) * static_cast<double>(i) / static_cast<double>(n_in - 1);
        ch.input_grid[i] = x;
        mus[i] = link.mu(x);
        sds[i] = link.sigma(x);
        const double lo_i = mus[i] - y_span_sigmas * sds[i];
        const double hi_i = mus[i] + y_span_sigmas * sds[i];
        if (i == 0 || lo_i < ylo) ylo = lo_i;
        if (i == 0 || hi_i > yhi) yhi = hi_i;
    }

    std::vector<double> edges(n_out + 1);
    for (std::size_t j = 0; j <= n_out; ++j) {
        edges[j] = ylo + (yhi - ylo) * static_cast<double>(j) / static_cast<double>(n_out);
    }
    ch.output_bins.resize(n_out);
    for (std::size_t j = 0; j < n_out; ++j) ch.output_bins[j] = 0.5 * (edges[j] + edges[j + 1]);

    ch.transition_matrix.assign(n_in, std::vector<double>(n_out));
    for (std::size_t i = 0; i < n_in; ++i) {
        std::vector<double>& row = ch.transition_matrix[i];
        double prev = normal_cdf((edges[0] - mus[i]) / sds[i]);
        const double first = prev;
        for (std::size_t j = 0; j < n_out; ++j) {
            const double next = normal_cdf((edges[j + 1] - mus[i]) / sds[i]);
            row[j] = next - prev;
            prev = next;
        }
        row[0] += first;
        row[n_out - 1] += 1.0 - prev;
    }
    return ch;
}

BaResult capacity_blahut_arimoto(const DiscreteChannel& channel, double tol_bits, int max_iter,
                                 const std::function<void(int, double)>& on_iteration) {
    const std::size_t n_in = channel.transition_matrix.size();
    if (n_in == 0) throw std::invalid_argument("capacity_blahut_arimoto: empty channel");
    const std::size_t n_out = channel.transition_matrix.front().size();

    // Per-row entropy terms sum_y P log P are iteration constants.
    std::vector<double> row_plogp(n_in, 0.0);
    for (std::size_t i = 0; i < n_in; ++i) {
        double acc = 0.0;
        for (double p : channel.transition_matrix[i]) {
            if (p > 0.0) acc += p * std::log(p);
        }
        row_plogp[i] = acc;
    }

    BaResult res;
    res.input_distribution.assign(n_in, 1.0 / static_cast<double>(n_in));
    res.converged = false;
    res.capacity_bits = 0.0;
    res.gap_bound = 0.0;
    res.iterations = 0;

    std::vector<double> q_out(n_out);
    std::vector<double> d_kl(n_in);

    for (int it = 1; it <= max_iter; ++it) {
        std::fill(q_out.begin(), q_out.end(), 0.0);
        for (std::size_t i = 0; i < n_in; ++i) {
            const double r = res.input_distribution[i];
            if (r <= 0.0) continue;
            const std::vector<double>& row = channel.transition_matrix[i];
            for (std::size_t j = 0; j < n_out; ++j) q_out[j] += r * row[j];
        }

        for (std::size_t i = 0; i < n_in; ++i) {
            const std::vector<double>& row = channel.transition_matrix[i];
            double cross = 0.0;
            for (std::size_t j = 0; j < n_out; ++j) {
                if (row[j] > 0.0) cross += row[j] * std::log(q_out[j]);
            }
            d_kl[i] = row_plogp[i] - cross;
        }

        double lower = 0.0;
        double upper = d_kl[0];
        for (std::size_t i = 0; i < n_in; ++i) {
            lower += res.input_distribution[i] * d_kl[i];
            upper = std::max(upper, d_kl[i]);
        }

        res.capacity_bits = lower / kLn2;
        res.gap_bound = (upper - lower) / kLn2;
        res.iterations = it;
        if (on_iteration) on_iteration(it, res.capacity_bits);
        if (res.gap_bound < tol_bits) {
            res.converged = true;
            break;
        }

        double norm = 0.0;
        for (std::size_t i = 0; i < n_in; ++i) {
            res.input_distribution[i] *= std::exp(d_kl[i] - upper);
            norm += res.input_distribution[i];
        }
        for (double& r : res.input_distribution) r /= norm;
    }
    return res;
}

double discrete_mi(const DiscreteChannel& channel, const std::vector<double>& input_dist) {
    const std::size_t n_in = channel.transition_matrix.size();
    if (input_dist.size() != n_in) {
        throw std::invalid_argument("discrete_mi: input distribution size mismatch");
    }
    const std::size_t n_out = channel.transition_matrix.front().size();
    const double total = std::accumulate(input_dist.begin(), input_dist.end(), 0.0);
    if (!(total > 0.0)) throw std::invalid_argument("discrete_mi: input distribution has no mass");

    std::vector<double> q_out(n_out, 0.0);
    for (std::size_t i = 0; i < n_in; ++i) {
        const double r = input_dist[i] / total;
        if (r <= 0.0) continue;
        for (std::size_t j = 0; j < n_out; ++j) q_out[j] += r * channel.transition_matrix[i][j];
    }
    double mi = 0.0;
    for (std::size_t i = 0; i < n_in; ++i) {
        const double r = input_dist[i] / total;
        if (r <= 0.0) continue;
        const std::vector<double>& row = channel.transition_matrix[i];
        double d = 0.0;
        for (std::size_t j = 0; j < n_out; ++j) {
            if (row[j] > 0.0) d += row[j] * std::log(row[j] / q_out[j]);
        }
        mi += r * d;
    }
    return mi / kLn2;
}

SimResult simulate_link(const SystemParams& params, double Ntx, std::size_t n_trials,
                        std::uint64_t seed, int n_workers) {
    if (n_trials < 1) throw std::invalid_argument("simulate_link: n_trials must be >= 1");
    const LinkModel link(params);
    const double P_b = link.bound_prob(Ntx);
    const double a = link.current_per_ligand();
    const double sigma_F = std::sqrt(link.noise().sigma2_F);
    const long long n_rec = std::llround(link.N_r());

    SimResult out;
    out.n_receptors = n_rec;
    out.model_mean = a * P_b * static_cast<double>(n_rec);
    out.model_variance =
        link.noise().sigma2_F + P_b * (1.0 - P_b) * static_cast<double>(n_rec) * a * a;
    out.samples.resize(n_trials);

    const auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            std::mt19937_64 eng(trial_seed(seed, i));
            long long n_b = 0;
            if (n_rec > 0 && P_b > 0.0) {
                std::binomial_distribution<long long> bin(n_rec, P_b);
                n_b = bin(eng);
            }
            double sample = a * static_cast<double>(n_b);
            if (sigma_F > 0.0) {
                std::normal_distribution<double> gauss(0.0, sigma_F);
                sample += gauss(eng);
            }
            out.samples[i] = sample;
        }
    };

    const std::size_t workers =
        std::min<std::size_t>(std::max(n_workers, 1), std::max<std::size_t>(n_trials, 1));
    if (workers <= 1) {
        run(0, n_trials);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (n_trials + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(n_trials, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(run, begin, end);
        }
        for (std::thread& t : pool) t.join();
    }

    // Moments always accumulate in index order, so worker count cannot
    // change the result.
    double sum = 0.0;
    for (double s : out.samples) sum += s;
    out.mean = sum / static_cast<double>(n_trials);
    double ss = 0.0;
    for (double s : out.samples) {
        const double d = s - out.mean;
        ss += d * d;
    }
    out.variance = n_trials > 1 ? ss / static_cast<double>(n_trials - 1) : 0.0;
    return out;
}

double normality_check(const std::vector<double>& samples) {
    const std::size_t n = samples.size();
    if (n < 10000) {
        throw std::invalid_argument("normality_check: need at least 1e4 samples");
    }
    double mean = 0.0;
    for (double s : samples) mean += s;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double s : samples) {
        const double d = s - mean;
        ss += d * d;
    }
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (!(sd > 0.0)) return 1.0;

    std::vector<double> sorted(samples);
    std::sort(sorted.begin(), sorted.end());
    double sup = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double z = normal_cdf((sorted[i] - mean) / sd);
        const double above = static_cast<double>(i + 1) / static_cast<double>(n) - z;
        const double below = z - static_cast<double>(i) / static_cast<double>(n);
        sup = std::max(sup, std::max(above, below));
    }
    return sup;
}

std::vector<SystemParams> random_param_draws(std::uint64_t master_seed, std::size_t count) {
    std::mt19937_64 eng(master_seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto scale = [&]() { return std::exp(std::log(0.25) + unit(eng) * std::log(16.0)); };

    const SystemParams base = default_params();
    std::vector<SystemParams> out;
    std::size_t attempts = 0;
    while (out.size() < count) {
        if (++attempts > 200 * (count + 1)) {
            throw NumericError("random_param_draws: rejection budget exhausted");
        }
        SystemParams p = base;
        p.channel.d *= scale();
        p.channel.Ntx_max *= scale();
        p.receptor.k1 *= scale();
        p.receptor.k_m1 *= scale();
        p.receptor.rho_SR *= scale();
        p.transducer.c_ion *= scale();
        p.noise.N_ot *= scale();

        if (has_errors(validate(p))) continue;
        if (p.N_r() < 1000.0) continue;
        try {
            const LinkModel link(p);
            const CapacityResult cr = capacity_closed_form(link);
            if (!std::isfinite(cr.C_bits)) continue;

            // The Taylor treatment needs the noise to stay small against the
            // output swing everywhere in the input range.
            const double swing = link.mu(p.channel.Ntx_max) - link.mu(p.channel.Ntx_min);
            double worst = 0.0;
            for (int i = 0; i <= 16; ++i) {
                const double x = p.channel.Ntx_min +
                                 (p.channel.Ntx_max - p.channel.Ntx_min) *
                                     static_cast<double>(i) / 16.0;
                worst = std::max(worst, link.sigma(x) / swing);
            }
            if (worst > 0.05) continue;
        } catch (const std::exception&) {
            continue;
        }
        out.push_back(p);
    }
    return out;
}

std::vector<TabulatedPdf> perturbation_family(const TabulatedPdf& base, std::size_t count,
                                              std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::uniform_real_distribution<double> amp_dist(0.05, 0.4);
    std::uniform_real_distribution<double> phase_dist(0.0, 2.0 * pi);
    std::uniform_int_distribution<int> freq_dist(1, 5);

    std::vector<TabulatedPdf> out;
    out.reserve(count);
    const double lo = base.lo();
    const double span = base.hi() - lo;
    for (std::size_t i = 0; i < count; ++i) {
        const int k = freq_dist(eng);
        const double amp = amp_dist(eng);
        const double phase = phase_dist(eng);
        TabulatedPdf q = base;
        for (std::size_t j = 0; j < q.grid.size(); ++j) {
            const double u = (q.grid[j] - lo) / span;
            const double factor = 1.0 + amp * std::sin(static_cast<double>(k) * pi * u + phase);
            q.density[j] = std::max(0.0, q.density[j] * factor);
        }
        renormalize(q);
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace mcfet
