#include <cmath>
#include <random>

#include "cfhyp/field_core.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cfhyp;

namespace {
double rel_diff(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
}  // namespace

TEST_SUITE("complex_gamma") {
    TEST_CASE("lanczos log-gamma vs stirling oracle at 10^4 random points") {
        auto gen = oracle::rng(20240811);
        std::uniform_real_distribution<double> ux(0.5, 40.0), uy(-40.0, 40.0);
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const cplx z{ux(gen), uy(gen)};
            const cplx mine = log_gamma(z);
            const cplx ref = oracle::lgamma_stirling(z);
            worst = std::max(worst, std::abs(mine - ref) / std::max(1.0, std::abs(ref)));
        }
        CHECK(worst < 1e-13);
    }

    TEST_CASE("reflection region accuracy") {
        auto gen = oracle::rng(7);
        std::uniform_real_distribution<double> ux(-30.0, 0.5), uy(0.05, 30.0);
        double worst = 0.0;
        for (int i = 0; i < 2000; ++i) {
            const cplx z{ux(gen), uy(gen)};
            // compare exp-values; individual branches may differ by 2*pi*i
            const cplx mine = std::exp(log_gamma(z) - oracle::lgamma_stirling(z + 4.0) +
                                       std::log(z) + std::log(z + 1.0) + std::log(z + 2.0) +
                                       std::log(z + 3.0));
            worst = std::max(worst, std::abs(mine - 1.0));
        }
        CHECK(worst < 1e-12);
    }

    TEST_CASE("signed real log-gamma") {
        auto g = log_gamma_signed(-0.5);
        CHECK(g.sign == -1.0);
        CHECK(std::exp(g.log_abs) == doctest::Approx(3.5449077018110320546).epsilon(1e-12));
        CHECK(log_gamma_signed(-1.0).sign == 0.0);
        CHECK(log_gamma_signed(4.0).log_abs == doctest::Approx(std::log(6.0)).epsilon(1e-14));
    }
}

TEST_SUITE("field_power") {
    TEST_CASE("integer exponents on negative reals") {
        // (-1)^3 * (-1)^1 = 1
        const FieldExponent e{cplx(3.0, 0.0), 2};
        CHECK(rel_diff(field_power({-1.0, 0.0}, e), {1.0, 0.0}) < 1e-15);
    }
    TEST_CASE("unit modulus on the unitary spectrum") {
        auto gen = oracle::rng(11);
        std::uniform_real_distribution<double> us(-8.0, 8.0), ur(0.05, 20.0), ua(-3.1, 3.1);
        std::uniform_int_distribution<long> uk(-9, 9);
        for (int i = 0; i < 500; ++i) {
            const SpectralPoint pt{uk(gen), us(gen)};
            const cplx z = std::polar(ur(gen), ua(gen));
            CHECK(std::abs(std::abs(field_power(z, pt.to_exponent())) - 1.0) < 1e-15);
        }
    }
    TEST_CASE("half-integer pair at z = i") {
        const FieldExponent e{cplx(0.5, 0.0), 1};  // 1/2 | -1/2
        CHECK(rel_diff(field_power({0.0, 1.0}, e), {0.0, 1.0}) < 1e-15);
    }
    TEST_CASE("z = 0 rejected") {
        CHECK_THROWS_AS(field_power({0.0, 0.0}, FieldExponent{cplx(1.0, 0.0), 0}),
                        std::domain_error);
    }
    TEST_CASE("single-valued across the negative axis") {
        const FieldExponent e{cplx(0.3, 0.2), 3};
        const cplx above = field_power({-2.0, 1e-14}, e);
        const cplx below = field_power({-2.0, -1e-14}, e);
        CHECK(rel_diff(above, below) < 1e-10);
    }
}

TEST_SUITE("gamma_field") {
    TEST_CASE("identity pairs") {
        CHECK(rel_diff(gamma_field({cplx(0.5, 0.0), 0}).value(), {1.0, 0.0}) < 1e-14);
        CHECK(gamma_field({cplx(1.0, 0.0), 0}).is_zero());  // 1/Gamma(0)
        CHECK(gamma_field({cplx(1.0, 0.0), 0}).value() == cplx(0.0, 0.0));
    }
    TEST_CASE("quarter point vs high-precision value") {
        // Gamma(1/4)/Gamma(3/4), precomputed with mpmath at 22 digits
        const cplx v = gamma_field({cplx(0.25, 0.0), 0}).value();
        CHECK(rel_diff(v, {2.958675119188638892311, 0.0}) < 1e-13);
    }
    TEST_CASE("imaginary argument vs oracle") {
        // Gamma(i)/Gamma(1-i), delta = 0
        const cplx v = gamma_field({cplx(0.0, 1.0), 0}).value();
        const cplx ref = std::exp(oracle::lgamma_stirling({0.0, 1.0}) -
                                  oracle::lgamma_stirling({1.0, -1.0}));
        CHECK(rel_diff(v, ref) < 1e-13);
        CHECK(rel_diff(v, {-0.5673470598324076168507, -0.8234787876439334801429}) < 1e-13);
        // on Lambda at k=0, s=2 the modulus of Gamma^C is not constrained to 1,
        // but conjugate symmetry pins |Gamma(i)| = sqrt(pi/sinh(pi))
        CHECK(std::abs(v) == doctest::Approx(1.0).epsilon(1e-12));
    }
    TEST_CASE("pole marker at nonpositive integer pairs") {
        const auto g = gamma_field({cplx(-2.0, 0.0), -1});  // -2 | -1
        CHECK(g.is_pole());
        CHECK_THROWS_AS(g.value(), std::domain_error);
        CHECK(gamma_field({cplx(0.0, 0.0), 0}).is_pole());
        // within the pole tolerance ball
        CHECK(gamma_field({cplx(-2.0 + 1e-12, 0.0), -1}).is_pole());
    }
    TEST_CASE("mixed integer pairs stay finite") {
        // a = -1, a' = 2 (delta = -3): finite, equals i^{3} Gamma(2)/Gamma(2)
        const auto g = gamma_field({cplx(-1.0, 0.0), -3});
        REQUIRE(g.is_finite());
        CHECK(rel_diff(g.value(), {0.0, -1.0}) < 1e-13);
    }

    TEST_CASE("two-expression consistency") {
        auto gen = oracle::rng(23);
        std::uniform_real_distribution<double> ux(-4.0, 4.0), uy(-6.0, 6.0);
        std::uniform_int_distribution<long> ud(-6, 6);
        int tested = 0;
        double worst = 0.0;
        while (tested < 1000) {
            const FieldExponent e{cplx(ux(gen), uy(gen)), ud(gen)};
            if (dist_to_nonpositive_int(e.a) < 0.1 || dist_to_nonpositive_int(e.aprime()) < 0.1)
                continue;
            ++tested;
            const cplx expr1 = std::exp(log_gamma(e.a) - log_gamma(1.0 - e.aprime()));
            const cplx expr2 = std::exp(log_gamma(e.aprime()) - log_gamma(1.0 - e.a));
            const cplx i_delta = std::polar(1.0, 1.57079632679489661923 * double(e.delta));
            worst = std::max(worst, rel_diff(i_delta * expr1, expr2 / i_delta));
        }
        CHECK(worst < 1e-12);
    }

    TEST_CASE("reflection identity at 1000 random points") {
        auto gen = oracle::rng(31);
        std::uniform_real_distribution<double> ux(-4.0, 4.0), uy(-6.0, 6.0);
        std::uniform_int_distribution<long> ud(-6, 6);
        int tested = 0;
        double worst = 0.0;
        while (tested < 1000) {
            const FieldExponent e{cplx(ux(gen), uy(gen)), ud(gen)};
            const FieldExponent r{1.0 - e.a, -e.delta};  // 1-a | 1-a'
            if (dist_to_nonpositive_int(e.a) < 0.1 || dist_to_nonpositive_int(e.aprime()) < 0.1 ||
                dist_to_nonpositive_int(r.a) < 0.1 || dist_to_nonpositive_int(r.aprime()) < 0.1)
                continue;
            ++tested;
            const cplx prod = (gamma_field(e) * gamma_field(r)).value();
            const cplx expect = (e.delta % 2 == 0) ? cplx(1.0, 0.0) : cplx(-1.0, 0.0);
            worst = std::max(worst, rel_diff(prod, expect));
        }
        CHECK(worst < 1e-12);
    }

    TEST_CASE("derived product equals 1/((k+is)(k-is))") {
        double worst = 0.0;
        for (long k = -20; k <= 20; ++k) {
            for (double s : {-10.0, -1.0, -0.1, 0.1, 1.0, 10.0}) {
                const FieldExponent e1{cplx(double(k), s), 2 * k};    // k+is | -k+is
                const FieldExponent e2{cplx(double(-k), -s), -2 * k}; // -k-is | k-is
                const cplx prod = (gamma_field(e1) * gamma_field(e2)).value();
                const cplx ref = 1.0 / (cplx(double(k), s) * cplx(double(k), -s));
                worst = std::max(worst, rel_diff(prod, ref));
            }
        }
        CHECK(worst < 1e-12);
    }

    TEST_CASE("modulus symmetry under lambda -> -lambda for real base") {
        auto gen = oracle::rng(47);
        std::uniform_real_distribution<double> ua(0.02, 0.98), us(-15.0, 15.0);
        std::uniform_int_distribution<long> uk(-12, 12);
        double worst = 0.0;
        for (int i = 0; i < 500; ++i) {
            const double a = ua(gen);
            const SpectralPoint pt{uk(gen), us(gen)};
            const FieldExponent base{cplx(a, 0.0), 0};
            const auto plus = gamma_field(base + pt.to_exponent());
            const auto minus = gamma_field(base - pt.to_exponent());
            worst = std::max(worst, std::abs(plus.log_modulus() - minus.log_modulus()));
        }
        CHECK(worst < 1e-12);
    }
}

TEST_SUITE("beta_field") {
    TEST_CASE("pole through a zero denominator") {
        const FieldExponent h{cplx(0.5, 0.0), 0};
        CHECK(beta_field(h, h).is_pole());  // Gamma^C(1|1) = 0 downstairs
    }
    TEST_CASE("quarter-quarter value") {
        const FieldExponent q{cplx(0.25, 0.0), 0};
        CHECK(rel_diff(beta_field(q, q).value(), {8.753758460905906555347, 0.0}) < 1e-13);
    }
    TEST_CASE("convergence predicate") {
        CHECK(beta_integral_converges({cplx(0.3, 0.0), 0}, {cplx(0.3, 0.0), 0}));
        CHECK_FALSE(beta_integral_converges({cplx(-0.1, 0.0), 0}, {cplx(0.3, 0.0), 0}));
        CHECK_FALSE(beta_integral_converges({cplx(0.6, 0.0), 0}, {cplx(0.55, 0.0), 0}));
    }
}

TEST_SUITE("gamma_asymptotic") {
    TEST_CASE("ratio tends to one along rays") {
        const FieldExponent base{cplx(0.3, 0.0), 0};
        for (auto [k, s] : {std::pair<long, double>{0, 2000.0}, {1000, 1000.0}, {-500, 800.0}}) {
            const SpectralPoint pt{k, s};
            const cplx g = gamma_field(base + pt.to_exponent()).value();
            const cplx asym = gamma_asymptotic(base, pt);
            CHECK(rel_diff(g, asym) < 1e-3);
        }
    }
    TEST_CASE("modulus law |lambda|^{-1+Re(a+a')}") {
        const FieldExponent base{cplx(0.7, 0.1), 1};
        const SpectralPoint pt{1000, 1000};
        const double lam_abs = std::abs(pt.lambda());
        const double expo = gamma_decay_exponent(base);
        const double ratio =
            std::exp(gamma_field(base + pt.to_exponent()).log_modulus()) / std::pow(lam_abs, expo);
        CHECK(std::abs(ratio - 1.0) < 1e-3);
    }
    TEST_CASE("branch invariance is structural") {
        // lambda + conj(lambda) = k, so exp(2i Im(lambda log lambda)) is
        // branch-free; spot check against a manual 2*pi shifted evaluation
        const SpectralPoint pt{3, 7.0};
        const cplx lam = pt.lambda();
        const cplx direct = std::exp(cplx(0.0, 2.0 * std::imag(lam * std::log(lam))));
        const cplx shifted_log = std::log(lam) + cplx(0.0, 6.28318530717958647692);
        const cplx shifted =
            std::exp(lam * shifted_log - std::conj(lam * shifted_log)) *
            std::exp(cplx(0.0, -6.28318530717958647692 * double(pt.k)));
        CHECK(rel_diff(direct, shifted) < 1e-12);
    }
    TEST_CASE("lambda = 0 rejected") {
        CHECK_THROWS_AS(gamma_asymptotic({cplx(0.3, 0.0), 0}, {0, 0.0}), std::domain_error);
    }
}

TEST_SUITE("in_theorem_domain") {
    TEST_CASE("examples") {
        CHECK(in_theorem_domain_real(0.2, 0.2, 0.2, 0.2));
        CHECK_FALSE(in_theorem_domain_real(0.25, 0.25, 0.25, 0.25));  // sum = 1 excluded
        CHECK(in_theorem_domain({0.3, 0.1}, {0.2, -0.05}, {0.1, 0.0}, {0.2, 0.0}));
        CHECK_FALSE(in_theorem_domain({-0.1, 0.0}, {0.2, 0.0}, {0.2, 0.0}, {0.2, 0.0}));
    }
}
