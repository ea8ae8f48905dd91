#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hlvqmc {

// Primitive-polynomial data for one Sobol dimension, as published in the
// Joe-Kuo direction-number tables: polynomial degree s, the encoded interior
// coefficients a, and the initial direction integers m_1..m_s (each odd and
// below 2^k).
struct DirectionNumbers {
    int degree = 0;
    std::uint32_t poly_coeffs = 0;
    std::vector<std::uint32_t> m;
};

// Table covering dimensions 2..max_dimension(). Dimension 1 is the plain
// radical-inverse sequence and carries no table data. Immutable once parsed
// and safe to share between threads.
class DirectionNumberTable {
  public:
    DirectionNumberTable() = default;

    // Parses the "d s a m_1 ... m_s" one-line-per-dimension format, with an
    // optional header line. Throws std::invalid_argument naming the offending
    // line on malformed input.
    static DirectionNumberTable parse(std::istream& in);

    // Reads a table from disk; std::runtime_error if the file cannot be read.
    static DirectionNumberTable load(const std::string& path);

    int max_dimension() const noexcept { return static_cast<int>(rows_.size()) + 1; }

    // dim must lie in [2, max_dimension()].
    const DirectionNumbers& row(int dim) const;

  private:
    std::vector<DirectionNumbers> rows_;
};

}  // namespace hlvqmc
