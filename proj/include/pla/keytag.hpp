#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pla/common.hpp"

namespace pla {

enum class KeyPurpose { tag, interleaver };

// Secret key material, type-tagged by purpose so a tag key can never be fed
// to the interleaver generator and vice versa.
class SecretKey {
  public:
    SecretKey(std::vector<std::uint8_t> bytes, KeyPurpose purpose);
    static SecretKey from_hex(const std::string& hex, KeyPurpose purpose);

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    KeyPurpose purpose() const { return purpose_; }

  private:
    std::vector<std::uint8_t> bytes_;
    KeyPurpose purpose_;
};

// Bijection on 0..n-1. interleave() gathers: out[i] = in[mapping[i]].
class Permutation {
  public:
    explicit Permutation(std::vector<std::uint32_t> mapping);

    std::size_t size() const { return map_.size(); }
    const std::vector<std::uint32_t>& mapping() const { return map_; }
    Permutation inverse() const;

  private:
    std::vector<std::uint32_t> map_;
};

// Keyed PRF expansion (HMAC-SHA256 in counter mode) over the sign bits of the
// conditioning signal. Output bit 0 -> +1, bit 1 -> -1, so ||t||^2 == L exactly.
ComplexVec gen_tag(const ComplexVec& pilot, const SecretKey& key, std::size_t length);

// Tag for the series-cancellation scheme, defined in the deinterleaved domain:
// the second half repeats the first half's signs on a keyed exact-half subset
// and flips them elsewhere. Folding halves then gives |T_i| in {0,2} with
// P(T_i=+-2)=1/4, P(T_i=0)=1/2 per position and sum |T_i|^2 = 2L exactly, so
// the matched-filter statistic keeps a constant mean of L across tags.
ComplexVec gen_series_tag_deinterleaved(const ComplexVec& pilot, const SecretKey& key,
                                        std::size_t half_length);

// Keyed Fisher-Yates permutation of 0..size-1 (size even).
Permutation gen_interleaver(const SecretKey& key, std::size_t size);

ComplexVec interleave(const ComplexVec& v, const Permutation& p);
ComplexVec deinterleave(const ComplexVec& v, const Permutation& p);

}  // namespace pla
