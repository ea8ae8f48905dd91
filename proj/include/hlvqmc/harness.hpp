#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hlvqmc/greeks.hpp"
#include "hlvqmc/pricing.hpp"

namespace hlvqmc {

enum class Method { mc_incremental, mc_bridge, qmc_incremental, qmc_bridge };
enum class Quantity { price, delta, gamma, vega_nu, vega_beta };

const char* to_string(Method m);
const char* to_string(Quantity q);
Method parse_method(const std::string& name);      // "mc+incremental", "qmc+bridge", ...
Quantity parse_quantity(const std::string& name);  // "price", "delta", ...
SequenceKind method_sequence(Method m);
PathConstruction method_construction(Method m);

// Full description of one convergence study: L independent runs per cell,
// estimates on a grid of path counts, reference values from Sobol + bridge
// runs of reference_paths each. Every run takes a disjoint block of the
// underlying sequence (per-run generators on the pseudo-random side), with
// block size reference_paths so grid runs are prefixes of reference blocks.
struct ExperimentConfig {
    HlvParams params{0.3, 0.5, 0.03, 100.0};
    double maturity = 1.0;
    int steps = 256;
    std::vector<double> strikes{80.0, 100.0, 120.0};
    std::vector<Quantity> quantities{Quantity::price, Quantity::delta, Quantity::gamma,
                                     Quantity::vega_nu, Quantity::vega_beta};
    std::vector<Method> methods{Method::mc_incremental, Method::mc_bridge,
                                Method::qmc_incremental, Method::qmc_bridge};
    std::vector<std::uint64_t> path_grid{128, 256, 512, 1024, 2048, 4096, 8192, 16384};
    int runs = 10;
    std::uint64_t reference_paths = 262144;
    std::uint64_t seed = 42;
    double shift_spot_pct = 1.0;
    double shift_param_pct = 1.0;

    void validate() const;

    static ExperimentConfig from_json_text(const std::string& text);
    static ExperimentConfig from_json_file(const std::string& path);
    std::string to_json_text() const;
};

struct ReferenceValue {
    Quantity quantity;
    double strike;
    double value;
};

struct CurvePoint {
    std::uint64_t paths;
    double mean_estimate;  // average of the L run estimates
    double rmse;
};

struct RateFit {
    double alpha = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    int points_used = 0;
    bool valid = false;
};

struct ConvergenceCurve {
    Quantity quantity;
    double strike;
    Method method;
    std::vector<CurvePoint> points;
    RateFit fit;
};

struct ConvergenceReport {
    ExperimentConfig config;
    std::vector<ReferenceValue> references;  // one per (quantity, strike)
    std::vector<ConvergenceCurve> curves;    // one per (quantity, strike, method)

    const ReferenceValue& reference(Quantity q, double strike) const;
    const ConvergenceCurve& curve(Quantity q, double strike, Method m) const;
};

// sqrt(mean squared deviation of the run values from the reference).
double rmse(std::span<const double> values, double reference);

// Least squares of log eps on log N; alpha is the negated slope. Points with
// eps = 0 are excluded (points_used reports the survivors); fewer than three
// usable points raise std::domain_error ("insufficient data").
RateFit fit_convergence_rate(std::span<const std::pair<double, double>> n_eps_points);

// The L run estimates of one quantity at one cell. Run l draws from
// partition(stream, l, reference_paths).
std::vector<double> run_replications(const ExperimentConfig& config,
                                     const std::shared_ptr<const SobolDirections>& dirs,
                                     Quantity quantity, double strike, Method method,
                                     std::uint64_t n_paths);

// Average of L runs of reference_paths Sobol + bridge paths each.
double reference_value(const ExperimentConfig& config,
                       const std::shared_ptr<const SobolDirections>& dirs, Quantity quantity,
                       double strike);

// The whole study. Cells and runs execute in parallel; results are assembled
// in a fixed order and are bit-identical for every thread count.
ConvergenceReport run_study(const ExperimentConfig& config,
                            const std::shared_ptr<const SobolDirections>& dirs);

// One CSV per (quantity, strike) with columns method,N,mean_estimate,rmse,
// plus summary.csv with quantity,strike,method,alpha,r_squared,
// reference_value. Values carry 17 significant digits so parsing the files
// recovers the report exactly. Throws std::runtime_error on I/O failure.
void emit_report(const ConvergenceReport& report, const std::string& directory);

}  // namespace hlvqmc
