// Small value type for 4x4 complex matrices plus the handful of operations
// the rest of the library needs.  Row-major storage, 0-based indexing.
#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace entdyn {

using cxd = std::complex<double>;

struct Mat4 {
    std::array<cxd, 16> e{};

    cxd &operator()(int i, int j) { return e[4 * i + j]; }
    const cxd &operator()(int i, int j) const { return e[4 * i + j]; }

    static Mat4 zero() { return Mat4{}; }

    static Mat4 identity() {
        Mat4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }
};

inline Mat4 operator+(const Mat4 &a, const Mat4 &b) {
    Mat4 r;
    for (int k = 0; k < 16; ++k) r.e[k] = a.e[k] + b.e[k];
    return r;
}

inline Mat4 operator-(const Mat4 &a, const Mat4 &b) {
    Mat4 r;
    for (int k = 0; k < 16; ++k) r.e[k] = a.e[k] - b.e[k];
    return r;
}

inline Mat4 operator*(double s, const Mat4 &a) {
    Mat4 r;
    for (int k = 0; k < 16; ++k) r.e[k] = s * a.e[k];
    return r;
}

inline Mat4 operator*(const cxd &s, const Mat4 &a) {
    Mat4 r;
    for (int k = 0; k < 16; ++k) r.e[k] = s * a.e[k];
    return r;
}

inline Mat4 operator*(const Mat4 &a, const Mat4 &b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cxd s = 0.0;
            for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

inline Mat4 adjoint(const Mat4 &a) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

// (a + a^dagger)/2, the Hermitian part.
inline Mat4 hermitize(const Mat4 &a) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return r;
}

inline cxd trace(const Mat4 &a) { return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3); }

inline double frobenius_norm(const Mat4 &a) {
    double s = 0.0;
    for (const cxd &x : a.e) s += std::norm(x);
    return std::sqrt(s);
}

// Largest entry magnitude.
inline double max_abs(const Mat4 &a) {
    double m = 0.0;
    for (const cxd &x : a.e) m = std::max(m, std::abs(x));
    return m;
}

inline double max_abs_diff(const Mat4 &a, const Mat4 &b) {
    double m = 0.0;
    for (int k = 0; k < 16; ++k) m = std::max(m, std::abs(a.e[k] - b.e[k]));
    return m;
}

// Largest deviation from Hermiticity, max_ij |a_ij - conj(a_ji)|.
inline double hermiticity_defect(const Mat4 &a) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

inline bool all_finite(const Mat4 &a) {
    for (const cxd &x : a.e)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return true;
}

} // namespace entdyn
