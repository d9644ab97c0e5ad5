#include "pla/sigcore.hpp"

#include <cmath>

namespace pla {

cplx draw_rayleigh_block(double sigma_h_sq, RngStream& rng) {
    require(sigma_h_sq >= 0.0, "draw_rayleigh_block: sigma_h_sq must be >= 0");
    return rng.next_cgaussian(sigma_h_sq);
}

ComplexVec awgn(std::size_t length, double sigma_sq, RngStream& rng) {
    require(length >= 1, "awgn: length must be >= 1");
    require(sigma_sq >= 0.0, "awgn: sigma_sq must be >= 0");
    ComplexVec w(length);
    for (auto& z : w) z = rng.next_cgaussian(sigma_sq);
    return w;
}

ComplexVec apply_channel(const ComplexVec& x, cplx h, const ComplexVec& noise) {
    require_shape(x.size() == noise.size(), "apply_channel: x/noise length mismatch");
    ComplexVec y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = h * x[i] + noise[i];
    return y;
}

ChannelDraw perturb_csi(cplx h_true, double eta_e_sq, double sigma_h_sq, RngStream& rng) {
    require(eta_e_sq >= 0.0 && eta_e_sq < 1.0, "perturb_csi: eta_e_sq must be in [0, 1)");
    ChannelDraw d;
    d.sigma_h_sq = sigma_h_sq;
    d.eta_e_sq = eta_e_sq;
    d.h_true = h_true;
    d.delta_h = (eta_e_sq == 0.0) ? cplx{0.0, 0.0}
                                  : rng.next_cgaussian(eta_e_sq * sigma_h_sq);
    d.h_est = h_true - d.delta_h;
    return d;
}

ComplexVec random_bpsk(std::size_t length, RngStream& rng) {
    ComplexVec v(length);
    for (auto& z : v) z = (rng.next_u64() & 1ull) ? cplx{-1.0, 0.0} : cplx{1.0, 0.0};
    return v;
}

bool all_finite(const ComplexVec& v) {
    for (const auto& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

}  // namespace pla
