#pragma once

#include <span>
#include <vector>

#include "hlvqmc/time_grid.hpp"

namespace hlvqmc {

// Parameters of the hyperbolic local-volatility diffusion
//     dS = r S dt + local_vol(S) dW.
// nu is the at-the-money volatility level, beta in (0,1] the skew parameter;
// beta = 1 collapses to Black-Scholes. Simulation always runs on the spot
// normalized by its initial value, so the hyperbolic shape is anchored at
// moneyness 1 whatever the spot scale; `spot` only rescales outputs.
struct HlvParams {
    double nu;
    double beta;
    double rate;
    double spot;

    void validate() const;  // std::invalid_argument on violations
};

// local_vol(s) for normalized spot s > 0. Equals nu at s = 1 and nu * s for
// beta = 1; strictly positive for every s > 0. Throws std::domain_error for
// non-positive s.
double local_vol(double s, double nu, double beta);

// Log-space diffusion coefficient local_vol(e^y) / e^y. Bounded: tends to
// nu / beta as y -> -inf, which is what keeps the origin unattainable.
double log_local_vol(double y, double nu, double beta);

// One Euler step of the log-spot recursion
//     y' = y + (r - sigma(y)^2 / 2) dt + sigma(y) dw.
inline double euler_log_step(double y, double dw, double dt, double nu, double beta,
                             double rate) {
    const double sig = log_local_vol(y, nu, beta);
    return y + (rate - 0.5 * sig * sig) * dt + sig * dw;
}

// Asset path S(t_1)..S(t_n) driven by a Wiener path on the same grid,
// simulated in log space so every value is strictly positive.
void euler_log_path(std::span<const double> w, const HlvParams& params, const TimeGrid& grid,
                    std::span<double> s_out);
std::vector<double> euler_log_path(std::span<const double> w, const HlvParams& params,
                                   const TimeGrid& grid);

}  // namespace hlvqmc
