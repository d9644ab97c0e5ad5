#pragma once

#include <cstdint>
#include <vector>

#include "pla/common.hpp"

namespace pla {

struct PolarCodeConfig {
    std::size_t block_length = 64;           // N, power of two
    double rate = 0.5;                       // K = N * rate
    std::vector<std::uint32_t> frozen_set;   // sorted, |frozen| = N - K
    std::size_t list_size = 8;

    std::size_t info_length() const { return block_length - frozen_set.size(); }
};

// Frozen set from Gaussian-approximation density evolution of the BPSK LLR
// means at the given design SNR (Es/N0 in dB).
PolarCodeConfig make_polar_config(std::size_t block_length, double rate,
                                  std::size_t list_size = 8, double design_snr_db = 2.0);

// 0 -> +1, 1 -> -1.
ComplexVec bpsk_modulate(const std::vector<std::uint8_t>& bits);

// LLRs for equalized samples: positive favours bit 0. Per-sample equalized
// noise variance is sigma_sq / |h_est|^2.
std::vector<double> bpsk_demodulate_llr(const ComplexVec& y, cplx h_est, double sigma_sq);

std::vector<std::uint8_t> polar_encode(const std::vector<std::uint8_t>& info_bits,
                                       const PolarCodeConfig& cfg);

// Successive-cancellation list decoder. Holds per-instance scratch; use one
// instance per worker thread.
class PolarDecoder {
  public:
    explicit PolarDecoder(PolarCodeConfig cfg);

    const PolarCodeConfig& config() const { return cfg_; }

    // Channel LLRs (length N) -> info-bit estimate (length K). Always returns
    // the best list candidate; there is no decode failure.
    std::vector<std::uint8_t> decode(const std::vector<double>& llrs);

  private:
    struct Path {
        std::vector<std::vector<double>> llr;            // llr[level][idx]
        std::vector<std::vector<std::uint8_t>> bits;     // bits[level][2*idx+parity]
        std::vector<std::uint8_t> decided;               // u in internal order
        double metric = 0.0;
    };

    void calc_llr(Path& p, int level, std::size_t phase) const;
    void propagate_bits(Path& p, int level, std::size_t phase) const;

    PolarCodeConfig cfg_;
    int stages_;
    std::vector<std::uint8_t> frozen_internal_;  // 1 if internal index frozen
    std::vector<std::uint32_t> info_public_;     // public info indices, ascending
    std::vector<Path> pool_;
};

}  // namespace pla
