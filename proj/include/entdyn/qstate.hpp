// State types for a pair of two-level cavity-field modes and the 4x4
// eigenvalue routines built on them.
//
// Basis ordering throughout the library, using 0-based storage indices:
//   index 0 = |00>, index 1 = |01>, index 2 = |10>, index 3 = |11>
// where the first slot is mode A and the second is mode B.  In formulas and
// comments the conventional 1-based labels rho11..rho44 refer to the same
// ordering (rho11 = (0,0) entry and so on).
#pragma once

#include <array>

#include "entdyn/errors.hpp"
#include "entdyn/mat4.hpp"

namespace entdyn {

// Normalized state vector a0|00> + a1|01> + a2|10> + a3|11>.
class PureState {
  public:
    // Strict constructor: amplitudes must already satisfy sum |a_i|^2 = 1
    // within 1e-9.  Throws ZeroNorm if all amplitudes vanish, NotNormalized
    // otherwise on a bad norm.
    PureState(cxd a0, cxd a1, cxd a2, cxd a3);

    // Scales the amplitudes by 1/norm.  Throws ZeroNorm when the input is
    // numerically the zero vector.
    static PureState normalized(cxd a0, cxd a1, cxd a2, cxd a3);

    const std::array<cxd, 4> &amplitudes() const { return a_; }
    cxd amp(int i) const { return a_[i]; }

  private:
    struct no_check_tag {};
    PureState(const std::array<cxd, 4> &a, no_check_tag) : a_(a) {}

    std::array<cxd, 4> a_;
};

// 4x4 density matrix.  The validating constructor enforces
//   Hermiticity within 1e-10 elementwise,
//   trace 1 within 1e-9,
//   smallest eigenvalue >= -1e-8,
// and finite entries.  assume_positive() keeps the cheap checks but skips
// the eigenvalue test; the integrators use it per sample and positivity is
// covered separately by the property tests.
class DensityMatrix {
  public:
    explicit DensityMatrix(const Mat4 &m);

    static DensityMatrix assume_positive(const Mat4 &m);

    // Re-runs the full invariant check (including positivity); throws
    // NotDensityMatrix on violation.
    void validate() const;

    const Mat4 &matrix() const { return m_; }
    cxd operator()(int i, int j) const { return m_(i, j); }
    // Diagonal entry as a real number.
    double population(int i) const { return m_(i, i).real(); }

  private:
    struct no_check_tag {};
    DensityMatrix(const Mat4 &m, no_check_tag) : m_(m) {}

    Mat4 m_;
};

// rho = |psi><psi|.
DensityMatrix density_from_pure(const PureState &psi);

// Re tr(rho^2); 1 for pure states.
double purity(const DensityMatrix &rho);

// Transposes the second mode only: result[(i,j),(k,l)] = m[(i,l),(k,j)] in
// the composite index (i,j) -> 2i+j.  An involution that preserves trace and
// Hermiticity but not positivity.
Mat4 partial_transpose_b(const Mat4 &m);
Mat4 partial_transpose_b(const DensityMatrix &rho);

// Four eigenvalues sorted descending plus the solver residual actually
// achieved (max_i ||M v_i - lambda_i v_i|| for the Hermitian path, scaled
// characteristic-polynomial magnitude for the general path).
struct Spectrum {
    std::array<double, 4> values{};
    double residual = 0.0;
};

// Eigenvalues of a Hermitian 4x4 matrix by cyclic complex Jacobi rotations.
// Throws NotHermitian if the input deviates from Hermiticity by more than
// 1e-10, Error if the accumulated eigenvector residual ends up above
// 1e-10 * max(1, ||M||_F).
Spectrum hermitian_eigenvalues(const Mat4 &m);

// Real eigenvalues of a general (possibly non-Hermitian) 4x4 matrix via its
// characteristic polynomial.  Coefficients come from principal-minor sums so
// structurally zero rows/columns yield exactly zero trailing coefficients,
// which are deflated into exact zero eigenvalues before the remaining roots
// are found (stable quadratic formula for degree 2, Durand-Kerner plus a
// Newton polish for degree 3 and 4).  A multiple root comes back from the
// iteration as a scattered cluster of approximations; those are collapsed to
// their centroid, which stays accurate when the individual members are not.
// Eigenvalues with imaginary part above 1e-8 raise ComplexSpectrum; imaginary
// dust below that is dropped, negative real dust in [-1e-8, 0) is clamped to
// 0, and roots below 1e-13 times the largest root magnitude are snapped to 0
// so rounding dust cannot leak through later square roots.
Spectrum general_eigenvalues(const Mat4 &m);

} // namespace entdyn
