#include "cfhyp/numerics.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

namespace cfhyp {

namespace {

// Gauss-Kronrod 7-15 nodes/weights (QUADPACK dqk15)
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

}  // namespace

SegmentResult gk15(const std::function<cplx(double)>& f, double a, double b) {
    const double hl = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    const cplx fc = f(c);
    cplx resk = fc * kWgk[7];
    cplx resg = fc * kWg[3];
    double resabs = std::abs(fc) * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = hl * kXgk[j];
        const cplx f1 = f(c - dx);
        const cplx f2 = f(c + dx);
        resk += (f1 + f2) * kWgk[j];
        resabs += (std::abs(f1) + std::abs(f2)) * kWgk[j];
        if (j % 2 == 1) resg += (f1 + f2) * kWg[j / 2];
    }
    const cplx value = resk * hl;
    const double diff = std::abs(resk - resg) * std::abs(hl);
    // QUADPACK-style sharpening against the total-variation scale
    double err = diff;
    const double scale = resabs * std::abs(hl);
    if (scale > 0.0 && diff > 0.0) {
        const double r = std::pow(200.0 * diff / scale, 1.5);
        if (r < 1.0) err = scale * r;
        err = std::min(err, diff);
    }
    return {value, err};
}

std::pair<cplx, double> integrate_segment_adaptive(const std::function<cplx(double)>& f,
                                                   double a, double b, double rel_tol,
                                                   double abs_tol, int max_subdivisions) {
    struct Panel {
        double a, b;
        cplx value;
        double err;
    };
    std::vector<Panel> done;
    std::vector<Panel> work;
    double scale = 0.0;  // running sum of |panel values|, for the relative test
    {
        const SegmentResult r = gk15(f, a, b);
        work.push_back({a, b, r.value, r.err});
        scale = std::abs(r.value);
    }
    int splits = 0;
    while (!work.empty()) {
        // deterministic: always process the last pushed panel (depth-first)
        Panel p = work.back();
        work.pop_back();
        const double tol = std::max(abs_tol, rel_tol * scale);
        const double local = tol * std::max(1e-3, (p.b - p.a) / (b - a));
        if (p.err <= local || (p.b - p.a) < 1e-14 * (std::abs(p.a) + std::abs(p.b) + 1.0)) {
            done.push_back(p);
            continue;
        }
        if (++splits > max_subdivisions)
            throw QuadratureError("integrate_segment_adaptive: no convergence; worst panel [" +
                                  std::to_string(p.a) + ", " + std::to_string(p.b) +
                                  "] err=" + std::to_string(p.err));
        const double m = 0.5 * (p.a + p.b);
        const SegmentResult r1 = gk15(f, p.a, m);
        const SegmentResult r2 = gk15(f, m, p.b);
        scale += std::abs(r1.value) + std::abs(r2.value) - std::abs(p.value);
        work.push_back({m, p.b, r2.value, r2.err});
        work.push_back({p.a, m, r1.value, r1.err});
    }
    std::sort(done.begin(), done.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    KahanSum s;
    double err = 0.0;
    for (const auto& p : done) {
        s.add(p.value);
        err += p.err;
    }
    return {s.sum, err};
}

namespace {

// dyadic panel edges covering [lo, hi], refined toward lo (assumed ~0 scale)
std::vector<double> dyadic_edges(double lo, double hi) {
    std::vector<double> e{lo};
    double step = std::max(0.5, lo * 0.5);
    double x = lo + step;
    while (x < hi) {
        e.push_back(x);
        step = x;  // next panel doubles
        x += step;
    }
    e.push_back(hi);
    return e;
}

}  // namespace

std::pair<cplx, ErrorBudget> integrate_line(const std::function<cplx(double)>& f,
                                            const QuadSpec& spec) {
    const double S = spec.line_cutoff;
    const double p = spec.decay_exponent;
    if (!(p < -1.0))
        throw QuadratureError("integrate_line: tail model requires decay exponent p < -1");
    // [-S, S] as symmetric dyadic panels around 0
    const std::vector<double> edges = dyadic_edges(0.0, S);
    KahanSum total;
    double qerr = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        for (int sign : {+1, -1}) {
            const double a = sign > 0 ? edges[i] : -edges[i + 1];
            const double b = sign > 0 ? edges[i + 1] : -edges[i];
            auto [v, e] = integrate_segment_adaptive(f, a, b, spec.rel_tol, spec.abs_tol,
                                                     spec.max_subdivisions);
            total.add(v);
            qerr += e;
        }
    }
    // tail model per side: f ~ c s^p beyond S with c fitted at |s| = S, so
    // int_S^inf = c S^{p+1}/(-p-1); the correction is applied signed and the
    // budget carries the spread against the |s| = 2S fit
    cplx tail_correction{0.0, 0.0};
    double tail_err = 0.0;
    for (int sign : {+1, -1}) {
        const cplx cS = f(sign * S) * std::pow(S, -p);
        const cplx c2S = f(sign * 2.0 * S) * std::pow(2.0 * S, -p);
        const cplx est = cS * std::pow(S, p + 1.0) / (-p - 1.0);
        const cplx est2 = c2S * std::pow(S, p + 1.0) / (-p - 1.0);
        tail_correction += est;
        tail_err += std::abs(est - est2) + 0.25 * std::abs(est2);
    }
    ErrorBudget budget;
    budget.quadrature_error = qerr;
    budget.tail_error = tail_err;
    budget.rounding_estimate = std::abs(total.sum) * 1e-15 * std::sqrt(double(edges.size()));
    return {total.sum + tail_correction, budget};
}

std::pair<cplx, ErrorBudget> sum_bilateral(const std::function<cplx(long)>& term,
                                           const QuadSpec& spec) {
    const long K = spec.lattice_cutoff;
    const double p = spec.decay_exponent;
    if (!(p < -1.0))
        throw QuadratureError("sum_bilateral: tail model requires decay exponent p < -1");
    KahanSum s;
    s.add(term(0));
    for (long k = 1; k <= K; ++k) s.add(term(k) + term(-k));
    if (std::abs(term(K)) > 0.0) {
        const double ratio =
            (std::abs(term(2 * K)) + std::abs(term(-2 * K))) /
            (std::abs(term(K)) + std::abs(term(-K)));
        if (ratio > 0.9) throw QuadratureError("sum_bilateral: terms do not decay");
    }
    // signed tail model per side: term ~ c k^p, sum_{k>K} ~ c K^{p+1}/(-p-1)
    cplx tail_correction{0.0, 0.0};
    double tail_err = 0.0;
    for (int sign : {+1, -1}) {
        const cplx cK = term(sign * K) * std::pow(double(K), -p);
        const cplx c2K = term(sign * 2 * K) * std::pow(2.0 * double(K), -p);
        const cplx est = cK * std::pow(double(K), p + 1.0) / (-p - 1.0);
        const cplx est2 = c2K * std::pow(double(K), p + 1.0) / (-p - 1.0);
        tail_correction += est;
        tail_err += std::abs(est - est2) + 0.25 * std::abs(est2);
    }
    ErrorBudget budget;
    budget.tail_error = tail_err;
    budget.rounding_estimate = std::abs(s.sum) * 1e-15 * std::sqrt(double(2 * K + 1));
    return {s.sum + tail_correction, budget};
}

int resolve_worker_count(const QuadSpec& spec) {
    if (spec.workers > 0) return spec.workers;
    if (const char* env = std::getenv("CFHYP_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

void parallel_for_index(std::size_t n, int workers,
                        const std::function<void(std::size_t)>& body) {
    if (n == 0) return;
    const int w = std::max(1, std::min<int>(workers, int(n)));
    if (w == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(w));
    for (int t = 0; t < w; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                body(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

const TanhSinhRule& tanh_sinh_rule(int level) {
    static std::map<int, TanhSinhRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(level);
    if (it != cache.end()) return it->second;
    TanhSinhRule rule;
    const double h = std::ldexp(1.0, -level);
    const double pi_half = 1.57079632679489661923;
    // |u| <= 4.8: 1-|x| reaches ~1e-83, weights ~1e-80; deep enough for any
    // integrable corner exponent sigma > -1.98 at 1e-14 tolerances
    const long kmax = long(std::ceil(4.8 / h));
    for (long k = -kmax; k <= kmax; ++k) {
        const double u = double(k) * h;
        const double sh = std::sinh(u);
        const double esh = std::exp(-2.0 * pi_half * std::abs(sh));
        // 1 - |tanh(y)| = 2 e^{-2y} / (1 + e^{-2y}), y = pi/2 |sinh u|
        const double d = 2.0 * esh / (1.0 + esh);
        const double w = h * pi_half * std::cosh(u) / std::pow(std::cosh(pi_half * sh), 2);
        if (w < 1e-290 || d <= 0.0) continue;
        const int side = k < 0 ? -1 : +1;
        rule.nodes.push_back({side, k == 0 ? 1.0 : d, w});
    }
    return cache.emplace(level, std::move(rule)).first->second;
}

}  // namespace cfhyp
