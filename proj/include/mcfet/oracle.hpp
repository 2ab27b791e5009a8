#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "mcfet/params.hpp"
#include "mcfet/pdf.hpp"

namespace mcfet {

// Channel matrix obtained by binning the Gaussian transition density.
struct DiscreteChannel {
    std::vector<double> input_grid;   // transmitted counts
    std::vector<double> output_bins;  // bin centers (A)
    std::vector<std::vector<double>> transition_matrix;  // row-stochastic
};

struct BaResult {
    double capacity_bits;
    std::vector<double> input_distribution;  // over input_grid
    int iterations;
    bool converged;
    double gap_bound;  // duality gap at the last iteration (bits)
};

struct SimResult {
    double mean;      // empirical mean (A)
    double variance;  // unbiased empirical variance (A^2)
    std::vector<double> samples;

    // moment model evaluated at the integer receptor count actually simulated,
    // so oracle comparisons are free of rounding bias
    double model_mean;
    double model_variance;
    long long n_receptors;
};

// Mutual information by nested quadrature: the output marginal is tabulated
// on a dense grid (each node an adaptive integral over x, split at the mean
// curve preimage where the integrand peaks) and interpolated with a cubic
// Hermite spline; entropies are then integrated segment by segment.
double mi_numeric(const TabulatedPdf& input_pdf, const SystemParams& params,
                  double quad_tol = 1e-6);

// Bins p(y|x) over [min mu - span*sigma, max mu + span*sigma] using Gaussian
// cdf differences; out-of-range tails fold into the edge bins so every row
// sums to one.
DiscreteChannel discretize_channel(const SystemParams& params, std::size_t n_in,
                                   std::size_t n_out, double y_span_sigmas);

// Standard Blahut-Arimoto iteration with a duality-gap stopping rule. The
// optional observer sees (iteration, capacity lower bound in bits) once per
// iteration; the lower bound is nondecreasing.
BaResult capacity_blahut_arimoto(const DiscreteChannel& channel, double tol_bits = 1e-3,
                                 int max_iter = 20000,
                                 const std::function<void(int, double)>& on_iteration = {});

// Mutual information of a fixed input distribution on a discrete channel (bits).
double discrete_mi(const DiscreteChannel& channel, const std::vector<double>& input_dist);

// Draws N_b ~ Binomial(N_r, P_b) plus zero-mean Gaussian flicker per trial.
// Trial i derives its own generator seed from (seed, i), so the sample stream
// is identical for any worker count.
SimResult simulate_link(const SystemParams& params, double Ntx, std::size_t n_trials,
                        std::uint64_t seed, int n_workers = 1);

// Sup-norm distance between the empirical cdf and a Gaussian fitted to the
// sample moments. Requires at least 1e4 samples.
double normality_check(const std::vector<double>& samples);

// Log-uniform draws over [0.25x, 4x] of the defaults for the capacity-relevant
// parameters, rejecting combinations outside the model's validity envelope.
std::vector<SystemParams> random_param_draws(std::uint64_t master_seed, std::size_t count);

// Multiplicative sine perturbations of a base density, clipped and renormalized.
std::vector<TabulatedPdf> perturbation_family(const TabulatedPdf& base, std::size_t count,
                                              std::uint64_t seed);

inline constexpr std::uint64_t kMasterSeed = 0x6D63666574ULL;

}  // namespace mcfet
