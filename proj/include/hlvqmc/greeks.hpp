#pragma once

#include <cstdint>

#include "hlvqmc/pricing.hpp"

namespace hlvqmc {

// Absolute finite-difference shifts. from_percent applies the usual sizing
// rule of about 1% of the current spot and of each volatility parameter.
struct GreekShifts {
    double spot;
    double nu;
    double beta;

    static GreekShifts from_percent(const HlvParams& params, double spot_pct, double param_pct);
};

struct GreekReport {
    double base_price;
    double delta;
    double gamma;
    double vega_nu;
    double vega_beta;
};

struct SpotGreekReport {
    double base_price;
    double delta;
    double gamma;
};

// Central-difference Delta, Gamma, nu-Vega and beta-Vega. The seven bumped
// parameter sets (base, spot +/-, nu +/-, beta +/-) are evaluated against the
// identical block of uniform points; spot bumps reuse the base simulation
// outright because the normalized path does not depend on the spot. Shifted
// parameters must stay in the model's domain -- in particular beta + shift
// may not exceed 1; the shift is never clipped, a std::domain_error asks for
// a smaller one instead. With recycle_paths = false every parameter set
// consumes its own block of points (kept to measure what recycling buys).
GreekReport greeks(const OptionSpec& spec, const HlvParams& params, UniformStream& stream,
                   PathConstruction construction, std::uint64_t n_paths, const GreekShifts& shifts,
                   bool recycle_paths = true);

// Delta and Gamma only. Usable where volatility bumps are not representable,
// e.g. beta = 1, where any upward beta shift leaves the domain.
SpotGreekReport spot_greeks(const OptionSpec& spec, const HlvParams& params, UniformStream& stream,
                            PathConstruction construction, std::uint64_t n_paths,
                            double spot_shift, bool recycle_paths = true);

}  // namespace hlvqmc
