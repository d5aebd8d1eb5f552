// Entanglement measures for two-mode states: logarithmic negativity from the
// partial transpose and Wootters concurrence from the spin-flipped product,
// plus the X-state closed forms and the shortcut relations that tie the two
// measures together on the families this library evolves.
#pragma once

#include "entdyn/qstate.hpp"

namespace entdyn {

// The two one-excitation initial families: noon states live on |01>, |10>
// and keep the rho23 coherence, phi states live on |00>, |11> and keep
// rho14.
enum class Family { noon, phi };

struct MeasurePair {
    double log_negativity = 0.0;
    double concurrence = 0.0;
};

// (sigma_y tensor sigma_y) conj(m) (sigma_y tensor sigma_y); in this basis
// the flip reverses both indices and applies signs (-1, 1, 1, -1).
Mat4 spin_flip(const Mat4 &m);

// log2(1 + 2|sum of negative partial-transpose eigenvalues|), where
// "negative" means below -1e-12; returns 0 when no eigenvalue qualifies.
double log_negativity(const DensityMatrix &rho);

// max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)) over the descending
// eigenvalues of rho * spin_flip(rho), clamped to be nonnegative.
double concurrence(const DensityMatrix &rho);

// Closed form for X states (only diagonal plus the two anti-diagonal
// coherences rho23 and rho14 may be nonzero; off-X entries above 1e-10 raise
// NotXState):
//   C = max(0, 2(|rho23| - sqrt(rho11 rho44)), 2(|rho14| - sqrt(rho22 rho33)))
double concurrence_x(const DensityMatrix &rho);

// Closed form for single-family X states.  With only rho23 present:
//   N = max(0, log2(1 - rho11 - rho44 + sqrt((rho11 - rho44)^2 + 4|rho23|^2)))
// and the mirrored expression when only rho14 is present.  Raises NotXState
// off the X pattern and AmbiguousFamily when both coherences exceed 1e-10.
double log_negativity_x(const DensityMatrix &rho);

// Measures of a one-excitation-family pure state at time zero:
//   a0|00> + a3|11> family: C = 2|a0 a3|;  a1|01> + a2|10> family: C = 2|a1 a2|
// with N = log2(1 + C) in both cases.  Other states raise NotEprFamily.
MeasurePair initial_measures(const PureState &psi);

// For X states with only the rho23 coherence and empty |11> population
// (rho44, rho14 below 1e-10; otherwise PatternMismatch):
//   C = 2|rho23|,  N = max(0, log2(1 - rho11 + sqrt(rho11^2 + C^2))).
MeasurePair relation_noon_vacuum(const DensityMatrix &rho);

// For X states with only the rho14 coherence and rho22 = rho33 within 1e-10
// (otherwise PatternMismatch), in terms of Ct = 2(|rho14| - rho22):
//   C = max(0, Ct),  N = max(0, log2(1 + Ct)).
MeasurePair relation_phi(const DensityMatrix &rho);

} // namespace entdyn
