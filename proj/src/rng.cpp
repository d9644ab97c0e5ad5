#include "pla/rng.hpp"

#include <cmath>

namespace pla {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::uint32_t ctr[4], const std::uint32_t key[2]) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * ctr[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    const std::uint32_t n0 = hi1 ^ ctr[1] ^ key[0];
    const std::uint32_t n2 = hi0 ^ ctr[3] ^ key[1];
    ctr[0] = n0;
    ctr[1] = lo1;
    ctr[2] = n2;
    ctr[3] = lo0;
}

// Philox-4x32-10: 128-bit counter = (block, stream id), 64-bit key = seed.
inline void philox_block(std::uint64_t seed, std::uint64_t stream, std::uint64_t block,
                         std::uint64_t out[2]) {
    std::uint32_t ctr[4] = {
        static_cast<std::uint32_t>(block),
        static_cast<std::uint32_t>(block >> 32),
        static_cast<std::uint32_t>(stream),
        static_cast<std::uint32_t>(stream >> 32),
    };
    std::uint32_t key[2] = {
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
    };
    for (int r = 0; r < 10; ++r) {
        philox_round(ctr, key);
        key[0] += kPhiloxW0;
        key[1] += kPhiloxW1;
    }
    out[0] = (static_cast<std::uint64_t>(ctr[1]) << 32) | ctr[0];
    out[1] = (static_cast<std::uint64_t>(ctr[3]) << 32) | ctr[2];
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : seed_(master_seed), stream_(stream_id) {}

RngStream RngStream::derive(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
    std::uint64_t id = stream_;
    id = mix64(id ^ mix64(a ^ 0xA5A5A5A5A5A5A5A5ull));
    id = mix64(id ^ mix64(b ^ 0x3C3C3C3C3C3C3C3Cull));
    id = mix64(id ^ mix64(c ^ 0x0F0F0F0F0F0F0F0Full));
    return RngStream(seed_, id);
}

void RngStream::refill() {
    philox_block(seed_, stream_, block_++, buf_.data());
    avail_ = 2;
}

std::uint64_t RngStream::next_u64() {
    if (avail_ == 0) refill();
    return buf_[--avail_];
}

double RngStream::next_uniform() {
    // 53-bit mantissa, shifted into (0, 1] so log() is always finite.
    const std::uint64_t r = next_u64() >> 11;
    return (static_cast<double>(r) + 1.0) * (1.0 / 9007199254740992.0);
}

double RngStream::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_gauss_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * M_PI * u2;
    spare_gauss_ = mag * std::sin(ang);
    have_spare_ = true;
    return mag * std::cos(ang);
}

std::complex<double> RngStream::next_cgaussian(double variance) {
    if (variance == 0.0) return {0.0, 0.0};
    const double s = std::sqrt(variance / 2.0);
    const double re = next_gaussian();
    const double im = next_gaussian();
    return {s * re, s * im};
}

}  // namespace pla
