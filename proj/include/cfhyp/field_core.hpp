#pragma once

#include <complex>
#include <stdexcept>

#include "cfhyp/complex_gamma.hpp"

namespace cfhyp {

// A point a|a' of Lambda_C, the parameter space of all complex-field
// functions. Only a and the integer index difference delta = a - a' are
// stored; a' is derived, so a - a' is an integer exactly.
struct FieldExponent {
    cplx a{};
    long delta = 0;

    FieldExponent() = default;
    FieldExponent(cplx a_, long delta_) : a(a_), delta(delta_) {}
    FieldExponent(double re_a, long delta_) : a(re_a, 0.0), delta(delta_) {}

    cplx aprime() const { return a - double(delta); }

    // [a|a'] = Re(a + a')/2 = Re(a) - delta/2
    double bracket() const { return a.real() - 0.5 * double(delta); }

    cplx sum() const { return 2.0 * a - double(delta); }  // a + a'

    FieldExponent operator+(const FieldExponent& o) const { return {a + o.a, delta + o.delta}; }
    FieldExponent operator-(const FieldExponent& o) const { return {a - o.a, delta - o.delta}; }
    FieldExponent operator-() const { return {-a, -delta}; }
    FieldExponent operator+(double c) const { return {a + c, delta}; }
    FieldExponent operator-(double c) const { return {a - c, delta}; }
};

inline FieldExponent operator+(double c, const FieldExponent& e) { return e + c; }

// A point (k, s) of the unitary spectrum Lambda ~ Z x R:
// lambda = (k+is)/2, lambda' = (-k+is)/2, so lambda' = -conj(lambda).
struct SpectralPoint {
    long k = 0;
    double s = 0.0;

    cplx lambda() const { return {0.5 * double(k), 0.5 * s}; }
    cplx lambda_prime() const { return {-0.5 * double(k), 0.5 * s}; }

    FieldExponent to_exponent() const { return {lambda(), k}; }
    SpectralPoint negated() const { return {-k, -s}; }
};

// Overflow-safe value of a Gamma^C product: value = exp(log_modulus) * phase,
// with |phase| = 1, plus explicit zero/pole markers. Poles carry the
// offending nonpositive-integer argument.
class GammaValue {
  public:
    enum class Kind { finite, zero, pole };

    static GammaValue finite(double log_modulus, cplx phase) {
        GammaValue v;
        v.kind_ = Kind::finite;
        v.log_modulus_ = log_modulus;
        v.phase_ = phase;
        return v;
    }
    static GammaValue from_log(cplx log_value) {
        return finite(log_value.real(), std::exp(cplx(0.0, log_value.imag())));
    }
    static GammaValue zero() {
        GammaValue v;
        v.kind_ = Kind::zero;
        return v;
    }
    static GammaValue pole(cplx at) {
        GammaValue v;
        v.kind_ = Kind::pole;
        v.pole_at_ = at;
        return v;
    }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_zero() const { return kind_ == Kind::zero; }
    bool is_pole() const { return kind_ == Kind::pole; }
    cplx pole_argument() const { return pole_at_; }

    double log_modulus() const { return log_modulus_; }
    cplx phase() const { return phase_; }

    cplx value() const;  // 0 for zero; throws domain_error on a pole

    GammaValue operator*(const GammaValue& o) const;
    GammaValue operator/(const GammaValue& o) const;
    GammaValue operator*(cplx c) const;

  private:
    Kind kind_ = Kind::finite;
    double log_modulus_ = 0.0;
    cplx phase_{1.0, 0.0};
    cplx pole_at_{};
};

// z^{a|a'} = |z|^{a+a'} e^{i delta arg z}; single-valued on C\{0}.
cplx field_power(cplx z, const FieldExponent& e);

// Gamma^C(a|a') = i^{a-a'} Gamma(a)/Gamma(1-a') = i^{a'-a} Gamma(a')/Gamma(1-a).
// Arguments within 1e-9 of a pole (a and a' both nonpositive integers) are
// reported as a pole marker; both-positive-integer pairs give an exact zero.
GammaValue gamma_field(const FieldExponent& e);

// B^C(e1, e2) = Gamma^C(e1) Gamma^C(e2) / Gamma^C(e1+e2) (meromorphic
// continuation of the defining plane integral).
GammaValue beta_field(const FieldExponent& e1, const FieldExponent& e2);

// Whether the defining integral (1/pi) Int t^{e1-1} (1-t)^{e2-1} converges
// absolutely: [e1] > 0, [e2] > 0 and [e1] + [e2] < 1.
bool beta_integral_converges(const FieldExponent& e1, const FieldExponent& e2);

// Leading term of Gamma^C(a+lambda | a'+lambda') as |lambda| -> infinity:
// i^{a-a'+lambda+conj(lambda)} lambda^{-1/2+a|-1/2+a'} lambda^lambda
// conj(lambda)^{-conj(lambda)} e^{-lambda+conj(lambda)}.
cplx gamma_asymptotic(const FieldExponent& base, const SpectralPoint& pt);

// |Gamma^C(base + lambda)| ~ |lambda|^{-1+Re(base sum)}: the modulus decay
// exponent used by tail models.
double gamma_decay_exponent(const FieldExponent& base);

// Re a_alpha > 0 for all alpha and Re(sum a_alpha) < 1.
bool in_theorem_domain(cplx a1, cplx a2, cplx a3, cplx a4);
// real-parameter hypothesis: a_alpha > 0 real, sum < 1
bool in_theorem_domain_real(double a1, double a2, double a3, double a4);

// log Gamma^C as a complex log (log_modulus + i*phase_angle), finite case only;
// throws on pole/zero. Used by the log-space accumulation paths.
cplx log_gamma_field(const FieldExponent& e);

constexpr double kPoleTolerance = 1e-9;

}  // namespace cfhyp
