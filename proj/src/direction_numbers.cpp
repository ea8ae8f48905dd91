#include "hlvqmc/direction_numbers.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hlvqmc {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw std::invalid_argument("direction numbers, line " + std::to_string(line_no) + ": " +
                                what);
}

bool starts_with_digit(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
    }
    return false;
}

}  // namespace

DirectionNumberTable DirectionNumberTable::parse(std::istream& in) {
    DirectionNumberTable table;
    std::string line;
    int line_no = 0;
    bool first_content = true;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        if (first_content && !starts_with_digit(line)) {
            first_content = false;  // header line ("d s a m_i")
            continue;
        }
        first_content = false;

        std::istringstream fields(line);
        long long dim = 0, degree = 0, coeffs = 0;
        if (!(fields >> dim >> degree >> coeffs)) fail(line_no, "expected \"d s a m_1 ... m_s\"");

        const int expected_dim = table.max_dimension() + 1;
        if (dim != expected_dim)
            fail(line_no, "dimension " + std::to_string(dim) + " out of order (expected " +
                              std::to_string(expected_dim) + ")");
        if (degree < 1 || degree > 31) fail(line_no, "polynomial degree out of range");
        if (coeffs < 0 || (degree > 1 && (coeffs >> (degree - 1)) != 0) ||
            (degree == 1 && coeffs != 0))
            fail(line_no, "coefficient code does not fit the polynomial degree");

        DirectionNumbers row;
        row.degree = static_cast<int>(degree);
        row.poly_coeffs = static_cast<std::uint32_t>(coeffs);
        row.m.reserve(static_cast<std::size_t>(degree));
        for (int k = 1; k <= degree; ++k) {
            long long mk = 0;
            if (!(fields >> mk)) fail(line_no, "expected " + std::to_string(degree) +
                                                   " direction integers");
            if (mk <= 0 || mk % 2 == 0)
                fail(line_no, "direction integer m_" + std::to_string(k) + "=" +
                                  std::to_string(mk) + " must be odd and positive");
            if (mk >= (1LL << k))
                fail(line_no, "direction integer m_" + std::to_string(k) + "=" +
                                  std::to_string(mk) + " must be below 2^" + std::to_string(k));
            row.m.push_back(static_cast<std::uint32_t>(mk));
        }
        long long extra = 0;
        if (fields >> extra) fail(line_no, "trailing tokens after the direction integers");

        table.rows_.push_back(std::move(row));
    }
    return table;
}

DirectionNumberTable DirectionNumberTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open direction-number file: " + path);
    return parse(in);
}

const DirectionNumbers& DirectionNumberTable::row(int dim) const {
    if (dim < 2 || dim > max_dimension())
        throw std::out_of_range("direction-number table has no dimension " + std::to_string(dim));
    return rows_[static_cast<std::size_t>(dim - 2)];
}

}  // namespace hlvqmc
