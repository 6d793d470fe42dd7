#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cfhyp {

using cplx = std::complex<double>;

// Precision/truncation policy shared by the line, plane and lattice engines.
// decay_exponent is the algebraic tail model |f| ~ C |t|^p (p per axis for
// lattice sums); p < -1 is required for line tails, p < -2 for joint 2D tails.
struct QuadSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 4000;
    double line_cutoff = 1.0e3;   // S
    long lattice_cutoff = 1000;   // K
    double decay_exponent = -6.0; // p
    int plane_max_level = 7;      // tanh-sinh refinement cap for plane patches
    int workers = 0;              // 0 = CFHYP_WORKERS env or hardware default
};

struct ErrorBudget {
    double quadrature_error = 0.0;
    double tail_error = 0.0;
    double rounding_estimate = 0.0;
    double total() const { return quadrature_error + tail_error + rounding_estimate; }
    ErrorBudget& operator+=(const ErrorBudget& o) {
        quadrature_error += o.quadrature_error;
        tail_error += o.tail_error;
        rounding_estimate += o.rounding_estimate;
        return *this;
    }
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Compensated (Kahan) accumulator; reduction order is fixed by the callers.
struct KahanSum {
    cplx sum{0.0, 0.0};
    cplx comp{0.0, 0.0};
    void add(cplx x) {
        const cplx y = x - comp;
        const cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// Gauss-Kronrod 7-15 on one segment; err is the embedded-rule estimate.
struct SegmentResult {
    cplx value;
    double err;
};
SegmentResult gk15(const std::function<cplx(double)>& f, double a, double b);

// Adaptive GK on [a, b] to max(abs_tol, rel_tol * |I|); deterministic
// (fixed worklist order). Throws QuadratureError after max_subdivisions,
// naming the worst panel.
std::pair<cplx, double> integrate_segment_adaptive(const std::function<cplx(double)>& f,
                                                   double a, double b, double rel_tol,
                                                   double abs_tol, int max_subdivisions);

// Adaptive quadrature of f over [-S, S] with an algebraic tail bound
// C S^{p+1}/|p+1|, C estimated from samples at |s| = S and 2S.
std::pair<cplx, ErrorBudget> integrate_line(const std::function<cplx(double)>& f,
                                            const QuadSpec& spec);

// sum_{|k| <= K} term(k) with symmetric-limit semantics (k paired outward
// from 0) and a sampled algebraic tail bound.
std::pair<cplx, ErrorBudget> sum_bilateral(const std::function<cplx(long)>& term,
                                           const QuadSpec& spec);

// Deterministic parallel map: results land in index-ordered slots; any
// reduction done by the caller is order-independent of the worker count.
int resolve_worker_count(const QuadSpec& spec);
void parallel_for_index(std::size_t n, int workers, const std::function<void(std::size_t)>& body);

// tanh-sinh abscissas/weights on (-1, 1) at level m (h = 2^-m); cached.
// Nodes are stored as (side, d) with d = 1 - |x| kept to full precision, so
// evaluation points can approach an endpoint to ~1e-300 without cancellation.
struct TanhSinhNode {
    int side;   // -1: node in [-1,0), +1: node in [0,1)
    double d;   // 1 - |x|, in (0, 1]
    double w;
};
struct TanhSinhRule {
    std::vector<TanhSinhNode> nodes;
};
const TanhSinhRule& tanh_sinh_rule(int level);

// map a tanh-sinh node into [lo, hi]; stable toward both endpoints
inline double ts_map(const TanhSinhNode& n, double lo, double hi) {
    return n.side < 0 ? lo + (hi - lo) * (0.5 * n.d) : hi - (hi - lo) * (0.5 * n.d);
}
// distance of the mapped point to the endpoint it is near
inline double ts_dist(const TanhSinhNode& n, double lo, double hi) {
    return (hi - lo) * 0.5 * n.d;
}

}  // namespace cfhyp
