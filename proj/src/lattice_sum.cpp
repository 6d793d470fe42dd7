#include "cfhyp/lattice_sum.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace cfhyp {

namespace {

// integrate F(k, .) over [lo, hi] (0 <= lo < hi) with dyadic panels
cplx slice_integral(const LatticeFunction2D& F, long k, double lo, double hi, double rel_tol,
                    double abs_tol, int max_subdiv, double* err_out) {
    KahanSum acc;
    double err = 0.0;
    auto fpos = [&](double s) { return F(k, s); };
    double a = lo;
    double step = std::max(0.5, 0.5 * lo);
    while (a < hi) {
        const double b = std::min(hi, a + step);
        auto [v, e] =
            integrate_segment_adaptive(fpos, a, b, rel_tol, abs_tol, max_subdiv);
        acc.add(v);
        err += e;
        a = b;
        step = std::max(step * 2.0, 1e-6);
    }
    if (err_out) *err_out += err;
    return acc.sum;
}

// full line integral of slice k over [-S, S]
cplx slice_full(const LatticeFunction2D& F, long k, double S, const QuadSpec& spec,
                double* err_out) {
    const cplx pos = slice_integral(F, k, 0.0, S, spec.rel_tol * 0.1, spec.abs_tol * 0.1,
                                    spec.max_subdivisions, err_out);
    auto fneg = [&](long kk, double s) { return F(kk, -s); };
    const cplx neg = slice_integral(fneg, k, 0.0, S, spec.rel_tol * 0.1, spec.abs_tol * 0.1,
                                    spec.max_subdivisions, err_out);
    return pos + neg;
}

double sample_tail_constant(const LatticeFunction2D& F, double R, double p) {
    double C = 0.0;
    for (double radius : {R, 2.0 * R}) {
        const long kr = std::lround(radius * 0.7071);
        const double sr = radius * 0.7071;
        for (auto [k, s] : {std::pair<long, double>{0, radius},
                            {std::lround(radius), 0.0},
                            {kr, sr},
                            {-kr, sr},
                            {kr, -sr}}) {
            const double r2 = double(k) * double(k) + s * s;
            if (r2 <= 0.0) continue;
            C = std::max(C, std::abs(F(k, s)) * std::pow(r2, -0.5 * p));
        }
    }
    return C;
}

}  // namespace

std::pair<cplx, ErrorBudget> sum_integral_lattice(const LatticeFunction2D& F,
                                                  const QuadSpec& spec) {
    const double p = spec.decay_exponent;
    if (!(p < -2.0))
        throw QuadratureError("sum_integral_lattice: joint decay exponent must be < -2");
    const long K = spec.lattice_cutoff;
    const double S = spec.line_cutoff;
    const int workers = resolve_worker_count(spec);

    std::vector<cplx> slice(2 * K + 1);
    std::vector<double> serr(2 * K + 1, 0.0);
    parallel_for_index(std::size_t(2 * K + 1), workers, [&](std::size_t i) {
        const long k = long(i) - K;
        slice[i] = slice_full(F, k, S, spec, &serr[i]);
    });

    // fixed-order compensated reduction: k = 0, +-1, +-2, ...
    KahanSum total;
    double qerr = 0.0;
    total.add(slice[std::size_t(K)]);
    qerr += serr[std::size_t(K)];
    for (long k = 1; k <= K; ++k) {
        total.add(slice[std::size_t(K + k)] + slice[std::size_t(K - k)]);
        qerr += serr[std::size_t(K + k)] + serr[std::size_t(K - k)];
    }

    constexpr double kTwoPi = 6.28318530717958647692;
    const double R = std::min(double(K), S);
    const double C = sample_tail_constant(F, R, p);
    ErrorBudget budget;
    budget.quadrature_error = qerr;
    budget.tail_error = 2.0 * kTwoPi * C * std::pow(R, p + 2.0) / std::abs(p + 2.0);
    budget.rounding_estimate = std::abs(total.sum) * 1e-15 * std::sqrt(double(2 * K + 1));
    return {total.sum, budget};
}

std::pair<cplx, ErrorBudget> sum_integral_lattice_extrapolated(const LatticeFunction2D& F,
                                                               const QuadSpec& spec) {
    const double p = spec.decay_exponent;
    if (!(p < -2.0))
        throw QuadratureError("sum_integral_lattice_extrapolated: decay exponent must be < -2");
    const double Rmax = double(spec.lattice_cutoff);
    int levels = 6;  // partial sums at Rmax / 2^(levels-1) .. Rmax
    double R0 = Rmax / double(1 << (levels - 1));
    if (R0 < 40.0) {
        levels = std::max(2, int(std::floor(std::log2(Rmax / 40.0))) + 1);
        R0 = Rmax / double(1 << (levels - 1));
    }
    std::vector<double> radii(std::size_t(levels), 0.0);
    for (int m = 0; m < levels; ++m) radii[std::size_t(m)] = R0 * double(1 << m);

    const long Kmax = long(std::floor(radii.back()));
    const int workers = resolve_worker_count(spec);

    // per-slice contributions to each annulus (disk m minus disk m-1)
    std::vector<std::vector<cplx>> ann(std::size_t(levels),
                                       std::vector<cplx>(std::size_t(2 * Kmax + 1)));
    std::vector<double> serr(std::size_t(2 * Kmax + 1), 0.0);
    parallel_for_index(std::size_t(2 * Kmax + 1), workers, [&](std::size_t i) {
        const long k = long(i) - Kmax;
        const double k2 = double(k) * double(k);
        double lo = 0.0;
        for (int m = 0; m < levels; ++m) {
            const double R = radii[std::size_t(m)];
            if (k2 >= R * R) continue;
            const double hi = std::sqrt(R * R - k2);
            auto fneg = [&](long kk, double s) { return F(kk, -s); };
            cplx v = slice_integral(F, k, lo, hi, spec.rel_tol * 0.01, spec.abs_tol * 0.01,
                                    spec.max_subdivisions, &serr[i]);
            v += slice_integral(fneg, k, lo, hi, spec.rel_tol * 0.01, spec.abs_tol * 0.01,
                                spec.max_subdivisions, &serr[i]);
            ann[std::size_t(m)][i] = v;
            lo = hi;
        }
    });

    // fixed-order reduction of each annulus, then cumulative partials
    std::vector<cplx> partial(std::size_t(levels), cplx{});
    double qerr = 0.0;
    {
        cplx run{0.0, 0.0};
        for (int m = 0; m < levels; ++m) {
            KahanSum s;
            s.add(ann[std::size_t(m)][std::size_t(Kmax)]);
            for (long k = 1; k <= Kmax; ++k) {
                s.add(ann[std::size_t(m)][std::size_t(Kmax + k)] +
                      ann[std::size_t(m)][std::size_t(Kmax - k)]);
            }
            run += s.sum;
            partial[std::size_t(m)] = run;
        }
        for (double e : serr) qerr += e;
    }

    // Richardson elimination on the ladder R^{q}, R^{q-1}, ... (q = p + 2)
    std::vector<cplx> T = partial;
    std::vector<cplx> stage_estimates{T.back()};
    for (int j = 0; j + 1 < levels; ++j) {
        const double e = (p + 2.0) - double(j);
        const double w = std::pow(2.0, e);
        for (int m = 0; m + 1 < int(T.size()); ++m)
            T[std::size_t(m)] =
                T[std::size_t(m + 1)] + (T[std::size_t(m + 1)] - T[std::size_t(m)]) * (w / (1.0 - w));
        T.pop_back();
        stage_estimates.push_back(T.back());
    }
    const cplx result = T.front();
    const cplx prev_estimate = stage_estimates[stage_estimates.size() - 2];

    ErrorBudget budget;
    budget.quadrature_error = qerr * 8.0;  // elimination amplifies slice noise
    budget.tail_error = 2.0 * std::abs(result - prev_estimate);
    budget.rounding_estimate = std::abs(result) * 1e-14;
    return {result, budget};
}

}  // namespace cfhyp
