#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace pla {

// Counter-based stream RNG (Philox-4x32-10). A stream is identified by
// (master_seed, stream_id); the generator is a pure function of
// (seed, stream, block counter), so trial i produces the same samples no
// matter which thread runs it or in which order.
class RngStream {
  public:
    RngStream() : RngStream(0, 0) {}
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

    // Child stream with an id mixed from this stream's id and the given words.
    // Used to key sub-experiments: (seed, grid point, hypothesis, trial).
    RngStream derive(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) const;

    std::uint64_t master_seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_; }

    std::uint64_t next_u64();
    double next_uniform();        // (0, 1]
    double next_gaussian();       // N(0, 1)
    // One CSCG sample with E|z|^2 = variance.
    std::complex<double> next_cgaussian(double variance);

  private:
    void refill();

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buf_{};
    int avail_ = 0;
    double spare_gauss_ = 0.0;
    bool have_spare_ = false;
};

// SplitMix64 finalizer; also used to mix stream ids.
std::uint64_t mix64(std::uint64_t x);

}  // namespace pla
