#pragma once

#include <complex>

namespace cfhyp {

using cplx = std::complex<double>;

// log Gamma(z) for complex z, Lanczos (g = 607/128, 15 terms) with reflection
// for Re z < 1/2. Relative accuracy ~1e-14 on the principal expressions we
// exponentiate; branch offsets of 2*pi*i cancel in every Gamma^C ratio.
cplx log_gamma(cplx z);

// sin(pi z) computed via argument reduction at the nearest integer to Re z;
// keeps full accuracy near the zeros, where the naive product pi*z loses it.
cplx sin_pi(cplx z);

// log|Gamma(x)| and the sign of Gamma(x) for real x (any x off the poles).
struct SignedLogGamma {
    double log_abs;
    double sign;  // +1 or -1; sign 0 marks a pole
};
SignedLogGamma log_gamma_signed(double x);

// distance from x to the nearest integer <= 0 (for pole detection)
double dist_to_nonpositive_int(cplx x);
// distance from x to the nearest integer >= 1 (zeros of 1/Gamma(1-.) patterns)
double dist_to_positive_int(cplx x);

}  // namespace cfhyp
