#include "hlvqmc/sobol.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace hlvqmc {

SobolDirections::SobolDirections(const DirectionNumberTable& table, int dimension)
    : dimension_(dimension) {
    if (dimension < 1) throw std::invalid_argument("SobolDirections: dimension must be positive");
    if (dimension > table.max_dimension())
        throw std::out_of_range("direction-number table supports " +
                                std::to_string(table.max_dimension()) + " dimensions, " +
                                std::to_string(dimension) + " requested");

    v_.resize(static_cast<std::size_t>(dimension) * kSobolBits);

    // dimension 1: plain radical inverse, v_k = 2^{-k}
    for (int k = 1; k <= kSobolBits; ++k) v_[static_cast<std::size_t>(k - 1)] = 1u << (kSobolBits - k);

    for (int dim = 2; dim <= dimension; ++dim) {
        const DirectionNumbers& row = table.row(dim);
        std::uint32_t* v = v_.data() + static_cast<std::size_t>(dim - 1) * kSobolBits;
        const int s = row.degree;
        for (int k = 1; k <= std::min(s, kSobolBits); ++k) v[k - 1] = row.m[k - 1] << (kSobolBits - k);
        // recurrence over the primitive polynomial:
        //   v_k = v_{k-s} ^ (v_{k-s} >> s) ^ XOR of v_{k-i} over flagged coefficients
        for (int k = s + 1; k <= kSobolBits; ++k) {
            std::uint32_t vk = v[k - s - 1] ^ (v[k - s - 1] >> s);
            for (int i = 1; i < s; ++i)
                if ((row.poly_coeffs >> (s - 1 - i)) & 1u) vk ^= v[k - i - 1];
            v[k - 1] = vk;
        }
    }
}

void sobol_point(const SobolDirections& dirs, std::uint64_t index, double* out) {
    if (index == 0)
        throw std::invalid_argument("sobol_point: indices start at 1 (index 0 is the origin)");
    if (index >= kSobolMaxPoints)
        throw std::out_of_range("sobol sequence exhausted: 2^32 points available");

    const std::uint64_t gray = index ^ (index >> 1);
    const int d = dirs.dimension();
    for (int j = 0; j < d; ++j) {
        const std::uint32_t* v = dirs.row(j);
        std::uint32_t x = 0;
        for (std::uint64_t g = gray; g != 0; g &= g - 1) {
            // lowest set bit of g selects one direction vector
            x ^= v[std::countr_zero(g)];
        }
        out[j] = static_cast<double>(x) * 0x1p-32;
    }
}

std::vector<double> sobol_point(const SobolDirections& dirs, std::uint64_t index) {
    std::vector<double> p(static_cast<std::size_t>(dirs.dimension()));
    sobol_point(dirs, index, p.data());
    return p;
}

std::vector<double> sobol_point(const DirectionNumberTable& table, std::uint64_t index,
                                int dimension) {
    return sobol_point(SobolDirections(table, dimension), index);
}

}  // namespace hlvqmc
