#pragma once

#include <functional>
#include <vector>

#include "cfhyp/numerics.hpp"

namespace cfhyp {

// Declared algebraic singularity: f ~ |t - point|^exponent e^{i m arg(t-point)}
// near the point. With m = 0 the exponent must be > -2 (absolute
// integrability); a nonzero angular index m buys one extra power through
// angular cancellation, so the iterated polar integral needs only
// exponent > -2 - |m|.
struct PlaneSingularity {
    cplx point;
    double exponent;
    long angular_index = 0;
};

// Integral of f over the whole complex plane (Lebesgue measure dRe dIm).
//
// The plane is covered exactly by two polar charts: the closed unit disk
// (t = r e^{i theta}) and the inversion chart t = 1/w for |t| > 1, which maps
// the exterior onto the punctured unit disk with jacobian |w|^{-4}. Each
// chart is cut into (r, theta) rectangles at the singular radii and angles,
// so every declared singularity sits at rectangle corners; rectangles are
// integrated with nested tanh-sinh product rules. There is no truncation at
// infinity: decay_exponent (|f| ~ |t|^p, p < -2) only controls the w = 0
// corner treatment and the integrability check.
std::pair<cplx, ErrorBudget> integrate_plane(const std::function<cplx(cplx)>& f,
                                             std::vector<PlaneSingularity> singularities,
                                             double decay_exponent, const QuadSpec& spec);

}  // namespace cfhyp
