#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "hlvqmc/sobol.hpp"

namespace hlvqmc {

enum class SequenceKind { pseudo_random, sobol };

// Pseudo-random points are produced in fixed-size blocks, each block from a
// Mersenne Twister seeded by (seed, substream, block index). Any block can
// therefore be regenerated on its own, which is what lets the simulation
// kernels fan one logical stream out across threads without changing its
// contents.
inline constexpr std::uint64_t kStreamBlockPoints = 4096;

// Single-consumer source of d-dimensional points strictly inside (0,1)^d.
// Replaying a cursor range reproduces identical points. Streams obtained
// from partition() or at_offset() are independent objects and may be
// consumed concurrently; a single stream must not be shared between threads.
class UniformStream {
  public:
    virtual ~UniformStream() = default;

    SequenceKind kind() const noexcept { return kind_; }
    int dimension() const noexcept { return dimension_; }
    std::uint64_t cursor() const noexcept { return cursor_; }

    // Emits the point at the cursor and advances by one; std::out_of_range
    // once the stream's window is used up.
    void next_point(double* out);
    std::vector<double> next_point();

    // Repositions the cursor inside the stream's window.
    void seek(std::uint64_t cursor);

    virtual std::unique_ptr<UniformStream> clone() const = 0;

    // Clone positioned at cursor() + offset; used to hand disjoint slices of
    // one stream to worker threads.
    std::unique_ptr<UniformStream> at_offset(std::uint64_t offset) const;

    // The run_index'th block of block_size points of the underlying sequence.
    // Blocks with distinct run indices never overlap: Sobol blocks are
    // consecutive index ranges starting at 1 + run_index * block_size, and
    // pseudo-random blocks come from generators keyed by the run index.
    virtual std::unique_ptr<UniformStream> partition(std::uint64_t run_index,
                                                     std::uint64_t block_size) const = 0;

  protected:
    UniformStream(SequenceKind kind, int dimension, std::uint64_t first, std::uint64_t limit);

    // Writes the point at cursor() and leaves any internal state ready for
    // the next index.
    virtual void generate(double* out) = 0;
    // Cursor was repositioned by seek().
    virtual void moved() {}

    std::uint64_t first_;
    std::uint64_t limit_;
    std::uint64_t cursor_;

  private:
    SequenceKind kind_;
    int dimension_;
};

class SobolStream final : public UniformStream {
  public:
    explicit SobolStream(std::shared_ptr<const SobolDirections> dirs,
                         std::uint64_t first = 1, std::uint64_t limit = kSobolMaxPoints);

    std::unique_ptr<UniformStream> clone() const override;
    std::unique_ptr<UniformStream> partition(std::uint64_t run_index,
                                             std::uint64_t block_size) const override;

  private:
    void generate(double* out) override;
    void moved() override { state_synced_ = false; }

    std::shared_ptr<const SobolDirections> dirs_;
    std::vector<std::uint32_t> state_;
    bool state_synced_ = false;
};

class PseudoRandomStream final : public UniformStream {
  public:
    PseudoRandomStream(int dimension, std::uint64_t seed);

    std::unique_ptr<UniformStream> clone() const override;
    std::unique_ptr<UniformStream> partition(std::uint64_t run_index,
                                             std::uint64_t block_size) const override;

  private:
    PseudoRandomStream(int dimension, std::uint64_t seed, std::uint64_t substream,
                       std::uint64_t limit);

    void generate(double* out) override;
    void position_engine();

    std::uint64_t seed_;
    std::uint64_t substream_;  // 0 for a base stream, run_index + 1 after partition
    std::mt19937_64 engine_;
    std::uint64_t engine_block_;
    std::uint64_t engine_drawn_ = 0;  // points already taken from engine_'s block
};

std::unique_ptr<UniformStream> make_stream(SequenceKind kind, int dimension, std::uint64_t seed,
                                           std::shared_ptr<const SobolDirections> dirs = nullptr);

}  // namespace hlvqmc
