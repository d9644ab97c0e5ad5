#pragma once

#include "pla/common.hpp"
#include "pla/rng.hpp"

namespace pla {

// One block-fading realization together with the receiver's estimate of it.
// h_true == h_est + delta_h holds exactly by construction.
struct ChannelDraw {
    cplx h_true;
    cplx h_est;
    cplx delta_h;
    double sigma_h_sq = 1.0;
    double eta_e_sq = 0.0;
};

// One h ~ CN(0, sigma_h_sq); each quadrature carries sigma_h_sq/2.
cplx draw_rayleigh_block(double sigma_h_sq, RngStream& rng);

// length i.i.d. CSCG samples with per-sample variance sigma_sq.
ComplexVec awgn(std::size_t length, double sigma_sq, RngStream& rng);

// Element-wise h * x + noise.
ComplexVec apply_channel(const ComplexVec& x, cplx h, const ComplexVec& noise);

// Statistical CSI error model: delta_h ~ CN(0, eta_e_sq * sigma_h_sq) drawn
// independently, h_est = h_true - delta_h.
ChannelDraw perturb_csi(cplx h_true, double eta_e_sq, double sigma_h_sq, RngStream& rng);

// Random BPSK vector (+/-1 on the real axis), unit power per symbol.
ComplexVec random_bpsk(std::size_t length, RngStream& rng);

bool all_finite(const ComplexVec& v);

inline double real_correlation(const ComplexVec& a, const ComplexVec& b) {
    require_shape(a.size() == b.size(), "real_correlation: length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += (std::conj(a[i]) * b[i]).real();
    return acc;
}

inline double power(const ComplexVec& v) {
    double acc = 0.0;
    for (const auto& z : v) acc += std::norm(z);
    return acc;
}

}  // namespace pla
