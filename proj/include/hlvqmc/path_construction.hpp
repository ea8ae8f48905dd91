#pragma once

#include <span>
#include <vector>

#include "hlvqmc/time_grid.hpp"

namespace hlvqmc {

// Standard construction of a discretized Wiener path from standard normals:
// W(t_i) = W(t_{i-1}) + sqrt(dt) * z_i, with z_i driving step i.
void incremental_path(std::span<const double> z, const TimeGrid& grid, std::span<double> w);
std::vector<double> incremental_path(std::span<const double> z, const TimeGrid& grid);

// Conditional-fill order for the Brownian bridge construction: the terminal
// value is drawn first, then midpoints by breadth-first bisection, so the
// leading Gaussian coordinates carry the bulk of the path variance. With a
// power-of-two step count this is the classical dyadic refinement order.
class BridgePlan {
  public:
    struct Entry {
        int target;           // index i in 1..n filled by this entry
        int left, right;      // bracketing indices l < i < m (0 for the terminal entry)
        double left_weight;   // 1 - gamma
        double right_weight;  // gamma = (i - l) / (m - l)
        double stddev;        // sqrt(gamma * (1 - gamma) * (m - l) * dt); sqrt(T) at the terminal
    };

    explicit BridgePlan(const TimeGrid& grid);

    int steps() const noexcept { return steps_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    // z_k drives the k-th plan entry; W(t_0) = 0 is implicit.
    void build_path(std::span<const double> z, std::span<double> w) const;

  private:
    int steps_;
    std::vector<Entry> entries_;
};

void bridge_path(std::span<const double> z, const BridgePlan& plan, std::span<double> w);
std::vector<double> bridge_path(std::span<const double> z, const BridgePlan& plan);

}  // namespace hlvqmc
