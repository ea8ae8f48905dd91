#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hlvqmc/hlv_model.hpp"
#include "hlvqmc/option.hpp"
#include "hlvqmc/path_construction.hpp"
#include "hlvqmc/time_grid.hpp"
#include "hlvqmc/uniform_stream.hpp"

namespace hlvqmc {

enum class PathConstruction { incremental, bridge };

struct PriceEstimate {
    double value = 0.0;
    std::optional<double> std_error;  // pseudo-random streams only
    std::uint64_t paths = 0;
    double discount = 1.0;
};

// ---- simulation kernel -----------------------------------------------------
//
// One batched pass over paths. Every model variant is advanced through the
// same Wiener path (identical uniform points), and each output reads one
// variant at one (spot, strike). Pricing, Greeks and the convergence harness
// all run on this; path recycling falls out of the batching.

struct PayoffRequest {
    int model;     // index into SimBatch::models
    double spot;   // spot scale applied to the normalized path
    double strike;
    OptionStyle style = OptionStyle::geometric_asian_call;
};

struct SimBatch {
    TimeGrid grid;
    PathConstruction construction;
    std::vector<HlvParams> models;  // spot fields unused: all paths are normalized
    std::vector<PayoffRequest> outputs;
};

struct SimMoments {
    std::vector<double> sum;     // undiscounted payoff sums, one per output
    std::vector<double> sum_sq;
    std::uint64_t paths = 0;
};

// OpenMP kernel. Paths are processed in fixed 4096-path slices, one slice per
// task, and slice partials are combined in slice order, so the result is
// bit-identical for every thread count. Consumes exactly n_paths points.
SimMoments simulate_payoffs(const SimBatch& batch, UniformStream& stream, std::uint64_t n_paths);

// Plain serial loop over the same work; the reference the parallel kernel is
// tested and benchmarked against.
SimMoments simulate_payoffs_serial(const SimBatch& batch, UniformStream& stream,
                                   std::uint64_t n_paths);

// ---- pricing ----------------------------------------------------------------

// Discounted average payoff over n_paths simulated paths. The standard error
// of the discounted payoff (divided by sqrt(N)) is filled in for
// pseudo-random streams only; a low-discrepancy estimate has no i.i.d.
// variance to report.
PriceEstimate mc_price(const OptionSpec& spec, const HlvParams& params, UniformStream& stream,
                       PathConstruction construction, std::uint64_t n_paths);

double bs_european_call(double spot, double strike, double rate, double sigma, double maturity);

// Exact value of the geometric-average Asian call under Black-Scholes
// dynamics (beta = 1): the log-average is Gaussian with
//   mean = ln S0 + (r - nu^2/2) T (n+1) / (2n)
//   var  = nu^2 T (n+1)(2n+1) / (6 n^2).
// Used as the sampling-error oracle, since the log-Euler scheme is exact for
// constant volatility. Throws std::domain_error unless beta = 1 and the spec
// is a geometric-average Asian call.
double bs_geometric_asian_closed_form(const HlvParams& params, const OptionSpec& spec);

// Black-Scholes volatility reproducing a European call price; bracketed
// bisection on [1e-6, 5] with a Newton polish, |price error| < 1e-10 * spot.
// Throws std::domain_error for prices outside the no-arbitrage band.
double implied_vol(double price, double spot, double strike, double rate, double maturity);

struct SmilePoint {
    double strike;
    double implied_vol;  // NaN when the inversion failed
    bool ok;
};

// European calls priced by simulation at each strike (one shared set of
// paths), then inverted. Per-strike inversion failures are reported in the
// result, not thrown.
std::vector<SmilePoint> implied_vol_curve(const HlvParams& params, std::vector<double> strikes,
                                          double maturity, int steps, UniformStream& stream,
                                          PathConstruction construction, std::uint64_t n_paths);

}  // namespace hlvqmc
