// Exception types thrown by the entdyn library.  Every domain error derives
// from entdyn::Error so callers can catch the whole family at once.
#pragma once

#include <stdexcept>
#include <string>

namespace entdyn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// pure_state: all amplitudes numerically zero, nothing to normalize.
struct ZeroNorm : Error {
    using Error::Error;
};

// pure_state (strict): squared amplitudes do not sum to 1 within tolerance.
struct NotNormalized : Error {
    using Error::Error;
};

// Matrix handed to the Hermitian eigensolver is not Hermitian.
struct NotHermitian : Error {
    using Error::Error;
};

// Matrix fails a density-matrix invariant (trace, Hermiticity, positivity).
struct NotDensityMatrix : Error {
    using Error::Error;
};

// General eigensolve produced eigenvalues with imaginary part above tolerance
// where a real spectrum was required.
struct ComplexSpectrum : Error {
    using Error::Error;
};

// State is not in X form (an off-X entry exceeds tolerance).
struct NotXState : Error {
    using Error::Error;
};

// X state carries both coherence families at once; the single-family
// closed forms do not apply.
struct AmbiguousFamily : Error {
    using Error::Error;
};

// Pure state is in neither one-excitation family (a2/a3 only or a1/a4 only).
struct NotEprFamily : Error {
    using Error::Error;
};

// Density matrix does not match the pattern a closed-form relation assumes.
struct PatternMismatch : Error {
    using Error::Error;
};

// Requested integrator step exceeds the stability bound for the given rates.
struct StepTooLarge : Error {
    using Error::Error;
};

} // namespace entdyn
