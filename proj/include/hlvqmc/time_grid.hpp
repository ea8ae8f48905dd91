#pragma once

#include <stdexcept>

namespace hlvqmc {

// Equally spaced time grid t_i = i * maturity / steps, i = 0..steps.
struct TimeGrid {
    double maturity;
    int steps;

    TimeGrid(double maturity_years, int step_count)
        : maturity(maturity_years), steps(step_count) {
        if (!(maturity > 0.0)) throw std::invalid_argument("TimeGrid: maturity must be positive");
        if (steps < 1) throw std::invalid_argument("TimeGrid: at least one step required");
    }

    double dt() const noexcept { return maturity / steps; }

    double knot(int i) const noexcept {
        return i == steps ? maturity : dt() * i;  // keep t_n == maturity exact
    }
};

}  // namespace hlvqmc
