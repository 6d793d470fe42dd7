#include "cfhyp/plane_integral.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace cfhyp {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Rect {
    double r0, r1, t0, t1;
};

// evaluate one rectangle of one chart with the tanh-sinh product rule;
// g(r, theta) must already include the chart jacobian
cplx rect_level(const std::function<cplx(double, double)>& g, const Rect& rc, int level,
                long* clipped) {
    const TanhSinhRule& rule = tanh_sinh_rule(level);
    KahanSum acc;
    const double jac = 0.25 * (rc.r1 - rc.r0) * (rc.t1 - rc.t0);
    for (const TanhSinhNode& ni : rule.nodes) {
        const double r = ts_map(ni, rc.r0, rc.r1);
        KahanSum row;
        for (const TanhSinhNode& nj : rule.nodes) {
            const double w2 = ni.w * nj.w;
            if (w2 < 1e-30) continue;
            const double th = ts_map(nj, rc.t0, rc.t1);
            const cplx v = g(r, th);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                ++*clipped;
                continue;
            }
            row.add(v * w2);
        }
        acc.add(row.sum);
    }
    return acc.sum * jac;
}

// split [lo, hi] at the given interior cut values
std::vector<Rect> make_rects(const std::vector<double>& rcuts_in, const std::vector<double>& tcuts_in) {
    std::vector<Rect> rects;
    for (std::size_t i = 0; i + 1 < rcuts_in.size(); ++i)
        for (std::size_t j = 0; j + 1 < tcuts_in.size(); ++j)
            rects.push_back({rcuts_in[i], rcuts_in[i + 1], tcuts_in[j], tcuts_in[j + 1]});
    return rects;
}

std::vector<double> cuts(double lo, double hi, const std::vector<double>& interior) {
    std::set<double> s{lo, hi};
    for (double v : interior)
        if (v > lo + 1e-12 && v < hi - 1e-12) s.insert(v);
    return {s.begin(), s.end()};
}

}  // namespace

std::pair<cplx, ErrorBudget> integrate_plane(const std::function<cplx(cplx)>& f,
                                             std::vector<PlaneSingularity> singularities,
                                             double decay_exponent, const QuadSpec& spec) {
    for (const auto& s : singularities)
        if (!(s.exponent > -2.0))
            throw QuadratureError("integrate_plane: non-integrable singularity exponent " +
                                  std::to_string(s.exponent));
    if (!(decay_exponent < -2.0))
        throw QuadratureError("integrate_plane: decay exponent must be < -2, got " +
                              std::to_string(decay_exponent));
    // deduplicate coincident singular points
    std::vector<PlaneSingularity> sing;
    for (const auto& s : singularities) {
        bool merged = false;
        for (auto& t : sing)
            if (std::abs(t.point - s.point) < 1e-12) {
                t.exponent += s.exponent;  // merged singularities multiply
                merged = true;
            }
        if (!merged) sing.push_back(s);
    }

    // chart descriptors: inner disk and inverted exterior
    struct Chart {
        std::function<cplx(double, double)> g;
        std::vector<double> radii;   // interior radial cuts
        std::vector<double> angles;  // interior angular cuts
    };
    Chart inner, outer;
    inner.g = [&f](double r, double th) -> cplx {
        if (r <= 0.0) return {0.0, 0.0};
        return f(std::polar(r, th)) * r;
    };
    outer.g = [&f](double rho, double ph) -> cplx {
        if (rho <= 0.0) return {0.0, 0.0};
        const cplx w = std::polar(rho, ph);
        return f(1.0 / w) / (rho * rho * rho);
    };
    for (const auto& s : sing) {
        const double m = std::abs(s.point);
        if (m <= 1.0 + 1e-12 && m > 1e-12) {
            inner.radii.push_back(std::min(m, 1.0));
            inner.angles.push_back(std::arg(s.point));
        }
        if (m >= 1.0 - 1e-12) {
            outer.radii.push_back(std::min(1.0 / m, 1.0));
            outer.angles.push_back(std::arg(1.0 / s.point));
        }
    }

    // assemble the rectangle worklist (fixed order: inner chart then outer)
    struct Job {
        const Chart* chart;
        Rect rect;
    };
    std::vector<Job> jobs;
    for (const Chart* c : {&inner, &outer}) {
        auto rc = cuts(0.0, 1.0, c->radii);
        auto tc = cuts(-kPi, kPi, c->angles);
        for (const Rect& r : make_rects(rc, tc)) jobs.push_back({c, r});
    }

    const int workers = resolve_worker_count(spec);
    const int level0 = 4;
    std::vector<cplx> val(jobs.size());
    std::vector<long> clipped(jobs.size(), 0);
    parallel_for_index(jobs.size(), workers, [&](std::size_t i) {
        val[i] = rect_level(jobs[i].chart->g, jobs[i].rect, level0, &clipped[i]);
    });
    double scale = 0.0;
    for (const cplx& v : val) scale += std::abs(v);

    std::vector<double> err(jobs.size(), 0.0);
    const double tol_rect =
        std::max(spec.abs_tol, spec.rel_tol * std::max(scale, 1e-300)) / double(2 * jobs.size());
    parallel_for_index(jobs.size(), workers, [&](std::size_t i) {
        cplx prev = val[i];
        for (int level = level0 + 1; level <= spec.plane_max_level; ++level) {
            const cplx cur = rect_level(jobs[i].chart->g, jobs[i].rect, level, &clipped[i]);
            err[i] = std::abs(cur - prev);
            prev = cur;
            if (err[i] <= tol_rect) break;
        }
        val[i] = prev;
    });

    KahanSum total;
    ErrorBudget budget;
    long clip_total = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        total.add(val[i]);
        budget.quadrature_error += err[i];
        clip_total += clipped[i];
    }
    // clipped nodes sit within ~1e-290-weight regions of integrable corners;
    // charge them conservatively against the result scale
    budget.rounding_estimate =
        std::abs(total.sum) * 1e-15 * std::sqrt(double(jobs.size())) + double(clip_total) * 1e-120;
    return {total.sum, budget};
}

}  // namespace cfhyp
