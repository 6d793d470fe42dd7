#include "cfhyp/complex_gamma.hpp"

#include <cmath>
#include <limits>

namespace cfhyp {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogTwoPiHalf = 0.91893853320467274178;  // log(2*pi)/2

// Lanczos coefficients, g = 607/128
constexpr double kG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

cplx log_gamma_core(cplx z) {
    // valid for Re z >= 1/2
    const cplx zz = z - 1.0;
    cplx s = kLanczos[0];
    for (int k = 1; k < 15; ++k) s += kLanczos[k] / (zz + double(k));
    const cplx t = zz + (kG + 0.5);
    return kLogTwoPiHalf + (zz + 0.5) * std::log(t) - t + std::log(s);
}

}  // namespace

cplx sin_pi(cplx z) {
    const double n = std::round(z.real());
    const cplx r = z - n;
    const cplx s = std::sin(kPi * r);
    const long parity = static_cast<long>(n) & 1L;
    return parity ? -s : s;
}

namespace {

// log(sin(pi z)) without overflow for large |Im z|; the branch may differ
// from the principal one by 2*pi*i, which cancels wherever we exponentiate.
cplx log_sin_pi(cplx z) {
    if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
    if (z.imag() <= 1.0) {
        const double n = std::round(z.real());
        const cplx s = std::sin(kPi * (z - n));
        const cplx ls = std::log(s);
        return (static_cast<long>(n) & 1L) ? ls + cplx(0.0, kPi) : ls;
    }
    // sin(pi z) = -e^{-i pi z} (1 - e^{2 i pi z}) / (2i), |e^{2 i pi z}| < 1
    const cplx i_pi_z = cplx(0.0, kPi) * z;
    return -i_pi_z + std::log(1.0 - std::exp(2.0 * i_pi_z)) +
           cplx(-0.69314718055994530942, 0.5 * kPi);
}

}  // namespace

cplx log_gamma(cplx z) {
    if (z.real() >= 0.5) return log_gamma_core(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(kPi) - log_sin_pi(z) - log_gamma_core(1.0 - z);
}

SignedLogGamma log_gamma_signed(double x) {
    if (x > 0.0) return {std::lgamma(x), 1.0};
    const double r = x - std::round(x);
    if (r == 0.0) return {std::numeric_limits<double>::infinity(), 0.0};
    // |Gamma(x)| = pi / (|sin(pi x)| * |Gamma(1-x)|), sign from sin(pi x)
    const double n = std::round(x);
    const double s = (static_cast<long>(n) & 1L) ? -std::sin(kPi * r) : std::sin(kPi * r);
    const double log_abs = std::log(kPi) - std::log(std::abs(s)) - std::lgamma(1.0 - x);
    return {log_abs, s > 0.0 ? 1.0 : -1.0};
}

double dist_to_nonpositive_int(cplx x) {
    double n = std::round(x.real());
    if (n > 0.0) n = 0.0;
    return std::abs(x - cplx(n, 0.0));
}

double dist_to_positive_int(cplx x) {
    double n = std::round(x.real());
    if (n < 1.0) n = 1.0;
    return std::abs(x - cplx(n, 0.0));
}

}  // namespace cfhyp
