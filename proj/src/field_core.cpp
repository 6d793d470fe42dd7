#include "cfhyp/field_core.hpp"

#include <cmath>

namespace cfhyp {

namespace {
constexpr double kPi = 3.14159265358979323846;

// i^n for integer n
cplx i_pow(long n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}
}  // namespace

cplx GammaValue::value() const {
    if (is_pole()) throw std::domain_error("GammaValue: evaluating a pole");
    if (is_zero()) return {0.0, 0.0};
    return std::exp(log_modulus_) * phase_;
}

GammaValue GammaValue::operator*(const GammaValue& o) const {
    if (is_pole() || o.is_pole()) {
        // pole*zero is indeterminate at this level; keep the pole marker loud
        return pole(is_pole() ? pole_at_ : o.pole_at_);
    }
    if (is_zero() || o.is_zero()) return zero();
    return finite(log_modulus_ + o.log_modulus_, phase_ * o.phase_);
}

GammaValue GammaValue::operator/(const GammaValue& o) const {
    if (is_pole() || o.is_pole()) {
        if (o.is_pole() && !is_pole()) return zero();  // finite / pole
        return pole(pole_at_);
    }
    if (o.is_zero()) return pole(cplx(0.0, 0.0));
    if (is_zero()) return zero();
    return finite(log_modulus_ - o.log_modulus_, phase_ / o.phase_);
}

GammaValue GammaValue::operator*(cplx c) const {
    if (is_pole()) return *this;
    if (is_zero() || c == cplx(0.0, 0.0)) return zero();
    return finite(log_modulus_ + std::log(std::abs(c)), phase_ * (c / std::abs(c)));
}

cplx field_power(cplx z, const FieldExponent& e) {
    if (z == cplx(0.0, 0.0)) throw std::domain_error("field_power: z = 0");
    const cplx log_mod(std::log(std::abs(z)), 0.0);
    return std::exp(e.sum() * log_mod + cplx(0.0, double(e.delta) * std::arg(z)));
}

GammaValue gamma_field(const FieldExponent& e) {
    const cplx a = e.a;
    const cplx ap = e.aprime();
    const double da = dist_to_nonpositive_int(a);
    const double dap = dist_to_nonpositive_int(ap);
    if (da < kPoleTolerance && dap < kPoleTolerance) return GammaValue::pole(a);
    // exact zeros (both arguments positive integers); near-misses evaluate
    // honestly in log space through the branch selection below
    if (dist_to_positive_int(a) == 0.0 && dist_to_positive_int(ap) == 0.0)
        return GammaValue::zero();
    // pick the expression whose Gamma arguments stay off the poles
    if (da >= kPoleTolerance && dist_to_nonpositive_int(1.0 - ap) >= kPoleTolerance) {
        const cplx lg = log_gamma(a) - log_gamma(1.0 - ap);
        return GammaValue::finite(lg.real(), i_pow(e.delta) * std::exp(cplx(0.0, lg.imag())));
    }
    const cplx lg = log_gamma(ap) - log_gamma(1.0 - a);
    return GammaValue::finite(lg.real(), i_pow(-e.delta) * std::exp(cplx(0.0, lg.imag())));
}

cplx log_gamma_field(const FieldExponent& e) {
    const GammaValue g = gamma_field(e);
    if (!g.is_finite()) throw std::domain_error("log_gamma_field: zero or pole");
    return {g.log_modulus(), std::arg(g.phase())};
}

GammaValue beta_field(const FieldExponent& e1, const FieldExponent& e2) {
    return gamma_field(e1) * gamma_field(e2) / gamma_field(e1 + e2);
}

bool beta_integral_converges(const FieldExponent& e1, const FieldExponent& e2) {
    const double b1 = e1.bracket(), b2 = e2.bracket();
    return b1 > 0.0 && b2 > 0.0 && b1 + b2 < 1.0;
}

cplx gamma_asymptotic(const FieldExponent& base, const SpectralPoint& pt) {
    const cplx lam = pt.lambda();
    if (lam == cplx(0.0, 0.0)) throw std::domain_error("gamma_asymptotic: lambda = 0");
    // i^{delta + k}: both integers, so the power is single-valued
    const cplx ph = i_pow(base.delta + pt.k);
    // lambda^{-1/2+a | -1/2+a'}: index difference is still base.delta
    const FieldExponent shifted{base.a - 0.5, base.delta};
    const cplx fp = field_power(lam, shifted);
    // lambda^lambda conj(lambda)^{-conj lambda} = exp(2i Im(lambda log lambda)),
    // independent of the log branch because lambda + conj(lambda) = k (integer)
    const cplx core = std::exp(cplx(0.0, 2.0 * std::imag(lam * std::log(lam))));
    // e^{-lambda + conj lambda} = e^{-is}
    const cplx damp = std::exp(cplx(0.0, -2.0 * lam.imag()));
    return ph * fp * core * damp;
}

double gamma_decay_exponent(const FieldExponent& base) { return -1.0 + base.sum().real(); }

bool in_theorem_domain(cplx a1, cplx a2, cplx a3, cplx a4) {
    const bool pos = a1.real() > 0.0 && a2.real() > 0.0 && a3.real() > 0.0 && a4.real() > 0.0;
    return pos && (a1 + a2 + a3 + a4).real() < 1.0;
}

bool in_theorem_domain_real(double a1, double a2, double a3, double a4) {
    return a1 > 0.0 && a2 > 0.0 && a3 > 0.0 && a4 > 0.0 && (a1 + a2 + a3 + a4) < 1.0;
}

}  // namespace cfhyp
