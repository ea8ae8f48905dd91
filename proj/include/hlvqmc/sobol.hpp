#pragma once

#include <cstdint>
#include <vector>

#include "hlvqmc/direction_numbers.hpp"

namespace hlvqmc {

inline constexpr int kSobolBits = 32;
inline constexpr std::uint64_t kSobolMaxPoints = std::uint64_t{1} << kSobolBits;

// Direction vectors v_{j,k}, k = 1..32, expanded from a table for a fixed
// dimension count. Values are stored scaled to 32 fractional bits, so a
// coordinate is an XOR of rows divided by 2^32. Immutable and shareable.
class SobolDirections {
  public:
    SobolDirections(const DirectionNumberTable& table, int dimension);

    int dimension() const noexcept { return dimension_; }

    // 32 direction integers for a zero-based dimension index.
    const std::uint32_t* row(int dim_index) const noexcept {
        return v_.data() + static_cast<std::size_t>(dim_index) * kSobolBits;
    }

  private:
    int dimension_;
    std::vector<std::uint32_t> v_;
};

// Point at a sequence index, Gray-code order: XOR of the direction vectors
// selected by the bits of index ^ (index >> 1). Index 0 is the origin point
// and is never emitted; valid indices are 1 .. 2^32 - 1.
void sobol_point(const SobolDirections& dirs, std::uint64_t index, double* out);
std::vector<double> sobol_point(const SobolDirections& dirs, std::uint64_t index);
std::vector<double> sobol_point(const DirectionNumberTable& table, std::uint64_t index, int dimension);

}  // namespace hlvqmc
