#pragma once

#include <span>

namespace hlvqmc {

enum class OptionStyle { geometric_asian_call, european_call };

struct OptionSpec {
    double strike;
    double maturity;
    int fixings;  // equally spaced, coinciding with the simulation grid
    OptionStyle style = OptionStyle::geometric_asian_call;

    void validate() const;
};

// exp(mean of log fixings); the log form survives hundreds of fixings where
// the raw product would leave double range.
double geometric_average(std::span<const double> path);

// max(geometric_average - strike, 0)
double asian_payoff(std::span<const double> path, double strike);

}  // namespace hlvqmc
