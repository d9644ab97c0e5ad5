#include "pla/polar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pla {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Gaussian-approximation phi and its inverse (piecewise fit).
double ga_phi(double x) {
    if (x <= 0.0) return 1.0;
    if (x < 10.0) return std::exp(-0.4527 * std::pow(x, 0.86) + 0.0218);
    return std::sqrt(M_PI / x) * std::exp(-x / 4.0) * (1.0 - 10.0 / (7.0 * x));
}

double ga_phi_inv(double y) {
    if (y >= 1.0) return 0.0;
    double lo = 1e-12, hi = 1.0;
    while (ga_phi(hi) > y) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (ga_phi(mid) > y) ? lo = mid : hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Exact boxplus via min-sum plus Jacobian correction.
inline double f_op(double a, double b) {
    const double s = std::copysign(1.0, a) * std::copysign(1.0, b);
    const double m = std::min(std::fabs(a), std::fabs(b));
    return s * m + std::log1p(std::exp(-std::fabs(a + b))) -
           std::log1p(std::exp(-std::fabs(a - b)));
}

inline double g_op(double a, double b, std::uint8_t u) { return u ? b - a : b + a; }

// Exact path-metric penalty for deciding bit u against decision LLR l.
inline double pm_penalty(double llr, std::uint8_t u) {
    const double s = u ? llr : -llr;
    if (s > 40.0) return s;
    return std::log1p(std::exp(s));
}

}  // namespace

PolarCodeConfig make_polar_config(std::size_t block_length, double rate,
                                  std::size_t list_size, double design_snr_db) {
    require(is_pow2(block_length), "polar: block length must be a power of two");
    require(rate > 0.0 && rate <= 1.0, "polar: rate must be in (0, 1]");
    require(list_size >= 1, "polar: list size must be >= 1");
    const std::size_t N = block_length;
    const std::size_t K =
        static_cast<std::size_t>(std::llround(rate * static_cast<double>(N)));
    require(K >= 1, "polar: rate too low for this block length");

    // LLR means per bit-channel in internal (Arikan natural) order.
    std::vector<double> mean{4.0 * db_to_linear(design_snr_db)};
    while (mean.size() < N) {
        std::vector<double> next(mean.size() * 2);
        for (std::size_t j = 0; j < mean.size(); ++j) {
            next[2 * j] = ga_phi_inv(1.0 - (1.0 - ga_phi(mean[j])) * (1.0 - ga_phi(mean[j])));
            next[2 * j + 1] = 2.0 * mean[j];
        }
        mean = std::move(next);
    }

    // Public index i corresponds to internal index N-1-i.
    std::vector<std::uint32_t> order(N);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return mean[N - 1 - a] < mean[N - 1 - b];
    });

    PolarCodeConfig cfg;
    cfg.block_length = N;
    cfg.rate = rate;
    cfg.list_size = list_size;
    cfg.frozen_set.assign(order.begin(), order.begin() + (N - K));
    std::sort(cfg.frozen_set.begin(), cfg.frozen_set.end());
    return cfg;
}

ComplexVec bpsk_modulate(const std::vector<std::uint8_t>& bits) {
    ComplexVec out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        out[i] = bits[i] ? cplx{-1.0, 0.0} : cplx{1.0, 0.0};
    return out;
}

std::vector<double> bpsk_demodulate_llr(const ComplexVec& y, cplx h_est, double sigma_sq) {
    std::vector<double> llr(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        llr[i] = 4.0 * (std::conj(h_est) * y[i]).real() / sigma_sq;
    return llr;
}

std::vector<std::uint8_t> polar_encode(const std::vector<std::uint8_t>& info_bits,
                                       const PolarCodeConfig& cfg) {
    const std::size_t N = cfg.block_length;
    require_shape(info_bits.size() == cfg.info_length(),
                  "polar_encode: wrong info length for configuration");

    std::vector<std::uint8_t> u_pub(N, 0);
    std::size_t next = 0;
    std::vector<bool> frozen(N, false);
    for (auto f : cfg.frozen_set) frozen[f] = true;
    for (std::size_t i = 0; i < N; ++i)
        if (!frozen[i]) u_pub[i] = info_bits[next++];

    std::vector<std::uint8_t> x(N);
    for (std::size_t j = 0; j < N; ++j) x[j] = u_pub[N - 1 - j];
    for (std::size_t step = 1; step < N; step <<= 1)
        for (std::size_t i = 0; i < N; ++i)
            if (!(i & step)) x[i] ^= x[i + step];
    std::reverse(x.begin(), x.end());
    return x;
}

PolarDecoder::PolarDecoder(PolarCodeConfig cfg) : cfg_(std::move(cfg)) {
    const std::size_t N = cfg_.block_length;
    require(is_pow2(N), "polar: block length must be a power of two");
    stages_ = 0;
    while ((1u << stages_) < N) ++stages_;
    frozen_internal_.assign(N, 0);
    std::vector<bool> frozen_pub(N, false);
    for (auto f : cfg_.frozen_set) {
        require(f < N, "polar: frozen index out of range");
        frozen_pub[f] = true;
        frozen_internal_[N - 1 - f] = 1;
    }
    for (std::size_t i = 0; i < N; ++i)
        if (!frozen_pub[i]) info_public_.push_back(static_cast<std::uint32_t>(i));
}

void PolarDecoder::calc_llr(Path& p, int level, std::size_t phase) const {
    if (level == 0) return;
    const std::size_t psi = phase >> 1;
    if ((phase & 1) == 0) calc_llr(p, level - 1, psi);
    const std::size_t width = cfg_.block_length >> level;
    auto& cur = p.llr[level];
    const auto& prev = p.llr[level - 1];
    if ((phase & 1) == 0) {
        for (std::size_t b = 0; b < width; ++b)
            cur[b] = f_op(prev[2 * b], prev[2 * b + 1]);
    } else {
        const auto& cb = p.bits[level];
        for (std::size_t b = 0; b < width; ++b)
            cur[b] = g_op(prev[2 * b], prev[2 * b + 1], cb[2 * b]);
    }
}

void PolarDecoder::propagate_bits(Path& p, int level, std::size_t phase) const {
    const std::size_t psi = phase >> 1;
    const std::size_t width = cfg_.block_length >> level;
    auto& cb = p.bits[level];
    auto& pb = p.bits[level - 1];
    for (std::size_t b = 0; b < width; ++b) {
        pb[2 * (2 * b) + (psi & 1)] = cb[2 * b] ^ cb[2 * b + 1];
        pb[2 * (2 * b + 1) + (psi & 1)] = cb[2 * b + 1];
    }
    if (psi & 1) propagate_bits(p, level - 1, psi);
}

std::vector<std::uint8_t> PolarDecoder::decode(const std::vector<double>& llrs) {
    const std::size_t N = cfg_.block_length;
    require_shape(llrs.size() == N, "polar decode: LLR length must equal block length");
    const std::size_t list = cfg_.list_size;

    pool_.clear();
    Path seed;
    seed.llr.resize(stages_ + 1);
    seed.bits.resize(stages_ + 1);
    for (int lv = 0; lv <= stages_; ++lv) {
        seed.llr[lv].assign(N >> lv, 0.0);
        seed.bits[lv].assign(2 * (N >> lv), 0);
    }
    // Channel LLRs arrive in public order; the engine runs in internal order.
    for (std::size_t b = 0; b < N; ++b) seed.llr[0][b] = llrs[N - 1 - b];
    seed.decided.assign(N, 0);
    pool_.push_back(std::move(seed));

    struct Cand {
        std::size_t parent;
        std::uint8_t bit;
        double metric;
    };
    std::vector<Cand> cands;

    for (std::size_t phase = 0; phase < N; ++phase) {
        for (auto& p : pool_) calc_llr(p, stages_, phase);

        if (frozen_internal_[phase]) {
            for (auto& p : pool_) {
                const double l = p.llr[stages_][0];
                p.metric += pm_penalty(l, 0);
                p.decided[phase] = 0;
                p.bits[stages_][phase & 1] = 0;
            }
        } else {
            cands.clear();
            for (std::size_t pi = 0; pi < pool_.size(); ++pi) {
                const double l = pool_[pi].llr[stages_][0];
                cands.push_back({pi, 0, pool_[pi].metric + pm_penalty(l, 0)});
                cands.push_back({pi, 1, pool_[pi].metric + pm_penalty(l, 1)});
            }
            if (cands.size() > list) {
                std::nth_element(cands.begin(), cands.begin() + list, cands.end(),
                                 [](const Cand& a, const Cand& b) { return a.metric < b.metric; });
                cands.resize(list);
            }
            std::vector<Path> next;
            next.reserve(cands.size());
            for (const auto& c : cands) {
                next.push_back(pool_[c.parent]);
                Path& p = next.back();
                p.metric = c.metric;
                p.decided[phase] = c.bit;
                p.bits[stages_][phase & 1] = c.bit;
            }
            pool_ = std::move(next);
        }

        if (phase & 1)
            for (auto& p : pool_) propagate_bits(p, stages_, phase);
    }

    const auto best = std::min_element(pool_.begin(), pool_.end(),
                                       [](const Path& a, const Path& b) {
                                           return a.metric < b.metric;
                                       });
    std::vector<std::uint8_t> info(info_public_.size());
    for (std::size_t k = 0; k < info_public_.size(); ++k)
        info[k] = best->decided[N - 1 - info_public_[k]];
    return info;
}

}  // namespace pla
