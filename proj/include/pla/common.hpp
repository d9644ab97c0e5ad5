#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pla {

using cplx = std::complex<double>;
using ComplexVec = std::vector<cplx>;

// Parameter out of its documented domain (negative variance, epsilon outside
// (0, 0.5), odd interleaver size, ...).
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Vector length / dimension mismatch between operands.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// |h_est| below the usable floor; callers resample the trial and count it.
struct SingularChannelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// Noise variance seen by a receiver whose SNR is `snr_db` when the incident
// signal power is sigma_h_sq * (unit symbol power).
inline double noise_var_for_snr(double snr_db, double sigma_h_sq = 1.0) {
    return sigma_h_sq / db_to_linear(snr_db);
}

// Sign convention shared by the closed-form expressions: sign(0) = 0, which
// makes the detection probability exactly 1/2 when the threshold sits on the
// distribution mean.
inline double sign0(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

inline void require(bool cond, const char* msg) {
    if (!cond) throw ParamError(msg);
}

inline void require_shape(bool cond, const char* msg) {
    if (!cond) throw ShapeError(msg);
}

}  // namespace pla
