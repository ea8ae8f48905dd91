#include "hlvqmc/uniform_stream.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace hlvqmc {

namespace {
constexpr std::uint64_t kNoLimit = std::numeric_limits<std::uint64_t>::max();
}

UniformStream::UniformStream(SequenceKind kind, int dimension, std::uint64_t first,
                             std::uint64_t limit)
    : first_(first), limit_(limit), cursor_(first), kind_(kind), dimension_(dimension) {
    if (dimension < 1) throw std::invalid_argument("UniformStream: dimension must be positive");
}

void UniformStream::next_point(double* out) {
    if (cursor_ >= limit_)
        throw std::out_of_range("uniform stream exhausted at cursor " + std::to_string(cursor_));
    generate(out);
    ++cursor_;
}

std::vector<double> UniformStream::next_point() {
    std::vector<double> p(static_cast<std::size_t>(dimension()));
    next_point(p.data());
    return p;
}

void UniformStream::seek(std::uint64_t cursor) {
    if (cursor < first_ || cursor > limit_)
        throw std::out_of_range("seek to cursor " + std::to_string(cursor) +
                                " outside the stream window");
    cursor_ = cursor;
    moved();
}

std::unique_ptr<UniformStream> UniformStream::at_offset(std::uint64_t offset) const {
    auto copy = clone();
    copy->seek(cursor_ + offset);
    return copy;
}

// ---- Sobol ------------------------------------------------------------------

SobolStream::SobolStream(std::shared_ptr<const SobolDirections> dirs, std::uint64_t first,
                         std::uint64_t limit)
    : UniformStream(SequenceKind::sobol, dirs ? dirs->dimension() : 0, first, limit),
      dirs_(std::move(dirs)),
      state_(static_cast<std::size_t>(dimension())) {
    if (!dirs_) throw std::invalid_argument("SobolStream: direction vectors required");
    if (first_ == 0) throw std::invalid_argument("SobolStream: the origin point is never emitted");
    if (limit_ > kSobolMaxPoints || first_ > limit_)
        throw std::out_of_range("SobolStream: window beyond the 2^32-point sequence");
}

void SobolStream::generate(double* out) {
    const int d = dimension();
    if (!state_synced_) {
        // direct evaluation at the cursor: XOR of direction vectors over the
        // set bits of the Gray-coded index
        const std::uint64_t gray = cursor_ ^ (cursor_ >> 1);
        for (int j = 0; j < d; ++j) {
            const std::uint32_t* v = dirs_->row(j);
            std::uint32_t x = 0;
            for (std::uint64_t g = gray; g != 0; g &= g - 1) x ^= v[std::countr_zero(g)];
            state_[static_cast<std::size_t>(j)] = x;
        }
        state_synced_ = true;
    }
    for (int j = 0; j < d; ++j) out[j] = static_cast<double>(state_[static_cast<std::size_t>(j)]) * 0x1p-32;

    // advance the state to the next index; consecutive Gray codes differ in
    // the bit position given by the trailing ones of the current index
    const int flip = std::countr_one(static_cast<std::uint32_t>(cursor_));
    if (flip < kSobolBits) {
        for (int j = 0; j < d; ++j) state_[static_cast<std::size_t>(j)] ^= dirs_->row(j)[flip];
    } else {
        state_synced_ = false;
    }
}

std::unique_ptr<UniformStream> SobolStream::clone() const {
    return std::unique_ptr<UniformStream>(new SobolStream(*this));
}

std::unique_ptr<UniformStream> SobolStream::partition(std::uint64_t run_index,
                                                      std::uint64_t block_size) const {
    if (block_size == 0) throw std::invalid_argument("partition: block_size must be positive");
    if (run_index > (kSobolMaxPoints - 1) / block_size)
        throw std::out_of_range("partition: run block beyond the 2^32-point Sobol sequence");
    const std::uint64_t first = 1 + run_index * block_size;
    const std::uint64_t limit = std::min(first + block_size, kSobolMaxPoints);
    if (first >= kSobolMaxPoints)
        throw std::out_of_range("partition: run block beyond the 2^32-point Sobol sequence");
    return std::unique_ptr<UniformStream>(new SobolStream(dirs_, first, limit));
}

// ---- pseudo-random ----------------------------------------------------------

PseudoRandomStream::PseudoRandomStream(int dimension, std::uint64_t seed)
    : PseudoRandomStream(dimension, seed, 0, kNoLimit) {}

PseudoRandomStream::PseudoRandomStream(int dimension, std::uint64_t seed, std::uint64_t substream,
                                       std::uint64_t limit)
    : UniformStream(SequenceKind::pseudo_random, dimension, 0, limit),
      seed_(seed),
      substream_(substream),
      engine_block_(kNoLimit) {}

void PseudoRandomStream::position_engine() {
    const std::uint64_t block = cursor_ / kStreamBlockPoints;
    const std::uint64_t pos = cursor_ % kStreamBlockPoints;
    if (engine_block_ != block || engine_drawn_ > pos) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                          static_cast<std::uint32_t>(substream_),
                          static_cast<std::uint32_t>(substream_ >> 32),
                          static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
        engine_.seed(seq);
        engine_block_ = block;
        engine_drawn_ = 0;
    }
    if (engine_drawn_ < pos) {
        engine_.discard((pos - engine_drawn_) * static_cast<std::uint64_t>(dimension()));
        engine_drawn_ = pos;
    }
}

void PseudoRandomStream::generate(double* out) {
    position_engine();
    const int d = dimension();
    for (int j = 0; j < d; ++j) {
        // 53 uniform bits; the zero draw is nudged to the smallest interior
        // value so the inverse-CDF transform stays finite
        double u = static_cast<double>(engine_() >> 11) * 0x1p-53;
        if (u <= 0.0) u = 0x1p-53;
        out[j] = u;
    }
    ++engine_drawn_;
}

std::unique_ptr<UniformStream> PseudoRandomStream::clone() const {
    return std::unique_ptr<UniformStream>(new PseudoRandomStream(*this));
}

std::unique_ptr<UniformStream> PseudoRandomStream::partition(std::uint64_t run_index,
                                                             std::uint64_t block_size) const {
    if (block_size == 0) throw std::invalid_argument("partition: block_size must be positive");
    return std::unique_ptr<UniformStream>(
        new PseudoRandomStream(dimension(), seed_, run_index + 1, block_size));
}

std::unique_ptr<UniformStream> make_stream(SequenceKind kind, int dimension, std::uint64_t seed,
                                           std::shared_ptr<const SobolDirections> dirs) {
    if (kind == SequenceKind::sobol) {
        if (!dirs) throw std::invalid_argument("make_stream: Sobol streams need direction vectors");
        if (dirs->dimension() != dimension)
            throw std::invalid_argument("make_stream: direction vectors cover dimension " +
                                        std::to_string(dirs->dimension()) + ", stream wants " +
                                        std::to_string(dimension));
        return std::unique_ptr<UniformStream>(new SobolStream(std::move(dirs)));
    }
    return std::unique_ptr<UniformStream>(new PseudoRandomStream(dimension, seed));
}

}  // namespace hlvqmc
