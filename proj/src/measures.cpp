#include "entdyn/measures.hpp"

#include <algorithm>
#include <cmath>

namespace entdyn {

namespace {

constexpr double kXTol = 1e-10;
constexpr double kNegTol = -1e-12;

// Off-X entries: (0,1), (0,2), (1,3), (2,3) and their mirrors.
double max_off_x(const Mat4 &m) {
    double v = 0.0;
    v = std::max(v, std::abs(m(0, 1)));
    v = std::max(v, std::abs(m(0, 2)));
    v = std::max(v, std::abs(m(1, 3)));
    v = std::max(v, std::abs(m(2, 3)));
    v = std::max(v, std::abs(m(1, 0)));
    v = std::max(v, std::abs(m(2, 0)));
    v = std::max(v, std::abs(m(3, 1)));
    v = std::max(v, std::abs(m(3, 2)));
    return v;
}

double pop(const Mat4 &m, int i) { return std::max(0.0, m(i, i).real()); }

} // namespace

Mat4 spin_flip(const Mat4 &m) {
    static const double sign[4] = {-1.0, 1.0, 1.0, -1.0};
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r(i, j) = sign[i] * sign[j] * std::conj(m(3 - i, 3 - j));
    return r;
}

double log_negativity(const DensityMatrix &rho) {
    const Spectrum s = hermitian_eigenvalues(partial_transpose_b(rho));
    double neg = 0.0;
    for (double v : s.values)
        if (v < kNegTol) neg += v;
    if (neg >= 0.0) return 0.0;
    return std::log2(1.0 + 2.0 * (-neg));
}

double concurrence(const DensityMatrix &rho) {
    const Mat4 m = rho.matrix() * spin_flip(rho.matrix());
    const Spectrum s = general_eigenvalues(m);
    double c = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double root = std::sqrt(std::max(0.0, s.values[i]));
        c += (i == 0) ? root : -root;
    }
    return std::max(0.0, c);
}

double concurrence_x(const DensityMatrix &rho) {
    const Mat4 &m = rho.matrix();
    if (max_off_x(m) > kXTol) throw NotXState("concurrence_x: state is not in X form");
    const double p1 = pop(m, 0), p2 = pop(m, 1), p3 = pop(m, 2), p4 = pop(m, 3);
    const double inner = 2.0 * (std::abs(m(1, 2)) - std::sqrt(p1 * p4));
    const double outer = 2.0 * (std::abs(m(0, 3)) - std::sqrt(p2 * p3));
    return std::max({0.0, inner, outer});
}

double log_negativity_x(const DensityMatrix &rho) {
    const Mat4 &m = rho.matrix();
    if (max_off_x(m) > kXTol) throw NotXState("log_negativity_x: state is not in X form");
    const double z23 = std::abs(m(1, 2));
    const double z14 = std::abs(m(0, 3));
    if (z23 > kXTol && z14 > kXTol)
        throw AmbiguousFamily("log_negativity_x: both coherence families present");
    const double p1 = pop(m, 0), p2 = pop(m, 1), p3 = pop(m, 2), p4 = pop(m, 3);
    double arg;
    if (z23 >= z14)
        arg = 1.0 - p1 - p4 + std::sqrt((p1 - p4) * (p1 - p4) + 4.0 * z23 * z23);
    else
        arg = 1.0 - p2 - p3 + std::sqrt((p2 - p3) * (p2 - p3) + 4.0 * z14 * z14);
    if (arg <= 0.0) return 0.0;
    return std::max(0.0, std::log2(arg));
}

MeasurePair initial_measures(const PureState &psi) {
    const std::array<cxd, 4> &a = psi.amplitudes();
    const double tol = kXTol;
    double c;
    if (std::abs(a[0]) <= tol && std::abs(a[3]) <= tol)
        c = 2.0 * std::abs(a[1]) * std::abs(a[2]);
    else if (std::abs(a[1]) <= tol && std::abs(a[2]) <= tol)
        c = 2.0 * std::abs(a[0]) * std::abs(a[3]);
    else
        throw NotEprFamily("initial_measures: state is in neither one-excitation family");
    return MeasurePair{std::log2(1.0 + c), c};
}

MeasurePair relation_noon_vacuum(const DensityMatrix &rho) {
    const Mat4 &m = rho.matrix();
    if (max_off_x(m) > kXTol)
        throw PatternMismatch("relation_noon_vacuum: state is not in X form");
    if (std::abs(m(0, 3)) > kXTol)
        throw PatternMismatch("relation_noon_vacuum: rho14 coherence present");
    if (m(3, 3).real() > kXTol)
        throw PatternMismatch("relation_noon_vacuum: |11> population present");
    const double p1 = pop(m, 0);
    const double c = 2.0 * std::abs(m(1, 2));
    const double n = std::max(0.0, std::log2(1.0 - p1 + std::sqrt(p1 * p1 + c * c)));
    return MeasurePair{n, c};
}

MeasurePair relation_phi(const DensityMatrix &rho) {
    const Mat4 &m = rho.matrix();
    if (max_off_x(m) > kXTol) throw PatternMismatch("relation_phi: state is not in X form");
    if (std::abs(m(1, 2)) > kXTol)
        throw PatternMismatch("relation_phi: rho23 coherence present");
    if (std::abs(m(1, 1).real() - m(2, 2).real()) > kXTol)
        throw PatternMismatch("relation_phi: rho22 and rho33 differ");
    const double ct = 2.0 * (std::abs(m(0, 3)) - pop(m, 1));
    const double c = std::max(0.0, ct);
    double n = 0.0;
    if (1.0 + ct > 0.0) n = std::max(0.0, std::log2(1.0 + ct));
    return MeasurePair{n, c};
}

} // namespace entdyn
