#pragma once

#include <functional>

#include "cfhyp/numerics.hpp"

namespace cfhyp {

// F evaluated at a lattice point (k, s) of Z x R.
using LatticeFunction2D = std::function<cplx(long, double)>;

// sum_{|k| <= K} int_{|s| <= S} F(k, s) ds with the symmetric-truncation
// semantics; k-slices may be evaluated concurrently but are always reduced
// in fixed k order with compensated summation, so the result is bit-stable
// under any worker count. The 2D algebraic tail |F| <= C (k^2+s^2)^{p/2}
// (p = spec.decay_exponent < -2) is bounded with C sampled on two rings.
std::pair<cplx, ErrorBudget> sum_integral_lattice(const LatticeFunction2D& F,
                                                  const QuadSpec& spec);

// Disk-truncated partial sums Sigma(R_m), R_m = R0 2^m, extrapolated in R
// on the known exponent ladder R^{q-j} (q = decay + 2, algebraic tails in
// integer steps). Reaches far below plain-truncation accuracy for slowly
// decaying integrands at fixed cost; deterministic like the box engine.
// spec.lattice_cutoff is the largest disk radius; spec.decay_exponent the
// joint decay p.
std::pair<cplx, ErrorBudget> sum_integral_lattice_extrapolated(const LatticeFunction2D& F,
                                                               const QuadSpec& spec);

}  // namespace cfhyp
