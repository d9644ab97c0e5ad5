#include "pla/keytag.hpp"

#include <openssl/hmac.h>

#include <algorithm>
#include <cstring>
#include <numeric>

namespace pla {

namespace {

// HMAC-SHA256 expanded in counter mode: block k = HMAC(key, context || k).
class PrfStream {
  public:
    PrfStream(const std::vector<std::uint8_t>& key, std::vector<std::uint8_t> context)
        : key_(key), ctx_(std::move(context)) {}

    std::uint8_t next_byte() {
        if (pos_ == block_.size()) refill();
        return block_[pos_++];
    }

    std::uint64_t next_u64() {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | next_byte();
        return v;
    }

    // Uniform on [0, bound) by rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        for (;;) {
            const std::uint64_t v = next_u64();
            if (v < limit) return v % bound;
        }
    }

    int next_bit() {
        if (bitpos_ == 8) {
            bitbuf_ = next_byte();
            bitpos_ = 0;
        }
        return (bitbuf_ >> bitpos_++) & 1;
    }

  private:
    void refill() {
        std::vector<std::uint8_t> msg = ctx_;
        for (int i = 7; i >= 0; --i) msg.push_back(static_cast<std::uint8_t>(counter_ >> (8 * i)));
        ++counter_;
        unsigned int out_len = 0;
        block_.resize(32);
        HMAC(EVP_sha256(), key_.data(), static_cast<int>(key_.size()), msg.data(), msg.size(),
             block_.data(), &out_len);
        block_.resize(out_len);
        pos_ = 0;
    }

    const std::vector<std::uint8_t>& key_;
    std::vector<std::uint8_t> ctx_;
    std::vector<std::uint8_t> block_;
    std::size_t pos_ = 0;
    std::uint64_t counter_ = 0;
    std::uint8_t bitbuf_ = 0;
    int bitpos_ = 8;
};

// Sign-quantize a complex vector: one bit per sample, negative real part -> 1.
// Gen() therefore depends on the pilot's symbol content, not on the noise
// riding on top of it.
std::vector<std::uint8_t> sign_bits(const ComplexVec& v) {
    std::vector<std::uint8_t> out((v.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i].real() < 0.0) out[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
    return out;
}

std::vector<std::uint8_t> make_context(const char* label, const ComplexVec& pilot) {
    std::vector<std::uint8_t> ctx(label, label + std::strlen(label));
    const std::uint64_t n = pilot.size();
    for (int i = 7; i >= 0; --i) ctx.push_back(static_cast<std::uint8_t>(n >> (8 * i)));
    auto bits = sign_bits(pilot);
    ctx.insert(ctx.end(), bits.begin(), bits.end());
    return ctx;
}

}  // namespace

SecretKey::SecretKey(std::vector<std::uint8_t> bytes, KeyPurpose purpose)
    : bytes_(std::move(bytes)), purpose_(purpose) {
    require(bytes_.size() >= 16, "SecretKey: need at least 16 bytes");
}

SecretKey SecretKey::from_hex(const std::string& hex, KeyPurpose purpose) {
    require(hex.size() % 2 == 0, "SecretKey::from_hex: odd hex length");
    std::vector<std::uint8_t> out;
    out.reserve(hex.size() / 2);
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw ParamError("SecretKey::from_hex: invalid hex digit");
    };
    for (std::size_t i = 0; i < hex.size(); i += 2)
        out.push_back(static_cast<std::uint8_t>(nib(hex[i]) * 16 + nib(hex[i + 1])));
    return SecretKey(std::move(out), purpose);
}

Permutation::Permutation(std::vector<std::uint32_t> mapping) : map_(std::move(mapping)) {
    std::vector<bool> seen(map_.size(), false);
    for (auto idx : map_) {
        require(idx < map_.size() && !seen[idx], "Permutation: mapping is not a bijection");
        seen[idx] = true;
    }
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> inv(map_.size());
    for (std::uint32_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
    return Permutation(std::move(inv));
}

ComplexVec gen_tag(const ComplexVec& pilot, const SecretKey& key, std::size_t length) {
    require(key.purpose() == KeyPurpose::tag, "gen_tag: key purpose must be 'tag'");
    PrfStream prf(key.bytes(), make_context("tag", pilot));
    ComplexVec t(length);
    for (auto& z : t) z = prf.next_bit() ? cplx{-1.0, 0.0} : cplx{1.0, 0.0};
    return t;
}

ComplexVec gen_series_tag_deinterleaved(const ComplexVec& pilot, const SecretKey& key,
                                        std::size_t half_length) {
    require(key.purpose() == KeyPurpose::tag, "gen_series_tag: key purpose must be 'tag'");
    require(half_length >= 2 && half_length % 2 == 0,
            "gen_series_tag: half_length must be even and >= 2");
    const std::size_t L = half_length;
    PrfStream prf(key.bytes(), make_context("series-tag", pilot));

    ComplexVec t(2 * L);
    for (std::size_t i = 0; i < L; ++i)
        t[i] = prf.next_bit() ? cplx{-1.0, 0.0} : cplx{1.0, 0.0};

    // Keyed choice of exactly L/2 positions whose fold pair adds coherently.
    std::vector<std::uint32_t> idx(L);
    std::iota(idx.begin(), idx.end(), 0u);
    for (std::size_t i = L - 1; i > 0; --i)
        std::swap(idx[i], idx[prf.next_below(i + 1)]);
    std::vector<bool> match(L, false);
    for (std::size_t i = 0; i < L / 2; ++i) match[idx[i]] = true;

    for (std::size_t i = 0; i < L; ++i) t[L + i] = match[i] ? t[i] : -t[i];
    return t;
}

Permutation gen_interleaver(const SecretKey& key, std::size_t size) {
    require(key.purpose() == KeyPurpose::interleaver,
            "gen_interleaver: key purpose must be 'interleaver'");
    require(size >= 2 && size % 2 == 0, "gen_interleaver: size must be even and >= 2");
    const char* label = "interleaver";
    std::vector<std::uint8_t> ctx(label, label + std::strlen(label));
    for (int i = 7; i >= 0; --i)
        ctx.push_back(static_cast<std::uint8_t>(static_cast<std::uint64_t>(size) >> (8 * i)));
    PrfStream prf(key.bytes(), std::move(ctx));
    std::vector<std::uint32_t> map(size);
    std::iota(map.begin(), map.end(), 0u);
    for (std::size_t i = size - 1; i > 0; --i)
        std::swap(map[i], map[prf.next_below(i + 1)]);
    return Permutation(std::move(map));
}

ComplexVec interleave(const ComplexVec& v, const Permutation& p) {
    require_shape(v.size() == p.size(), "interleave: length mismatch");
    ComplexVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[p.mapping()[i]];
    return out;
}

ComplexVec deinterleave(const ComplexVec& v, const Permutation& p) {
    require_shape(v.size() == p.size(), "deinterleave: length mismatch");
    ComplexVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[p.mapping()[i]] = v[i];
    return out;
}

}  // namespace pla
