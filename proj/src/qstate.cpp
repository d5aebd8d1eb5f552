#include "entdyn/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace entdyn {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-9;
constexpr double kMinEig = -1e-8;

double norm_sq(const std::array<cxd, 4> &a) {
    return std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]) + std::norm(a[3]);
}

} // namespace

PureState::PureState(cxd a0, cxd a1, cxd a2, cxd a3) : a_{a0, a1, a2, a3} {
    for (const cxd &x : a_)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
            throw NotNormalized("pure state: non-finite amplitude");
    const double n2 = norm_sq(a_);
    if (n2 < 1e-24) throw ZeroNorm("pure state: all amplitudes are zero");
    if (std::abs(n2 - 1.0) > 1e-9)
        throw NotNormalized("pure state: squared amplitudes sum to " + std::to_string(n2));
}

PureState PureState::normalized(cxd a0, cxd a1, cxd a2, cxd a3) {
    std::array<cxd, 4> a{a0, a1, a2, a3};
    for (const cxd &x : a)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
            throw NotNormalized("pure state: non-finite amplitude");
    const double n2 = norm_sq(a);
    if (n2 < 1e-24) throw ZeroNorm("pure state: all amplitudes are zero");
    const double inv = 1.0 / std::sqrt(n2);
    for (cxd &x : a) x *= inv;
    return PureState(a, no_check_tag{});
}

namespace {

void check_density_cheap(const Mat4 &m) {
    if (!all_finite(m)) throw NotDensityMatrix("density matrix: non-finite entry");
    if (hermiticity_defect(m) > kHermTol)
        throw NotDensityMatrix("density matrix: Hermiticity defect above 1e-10");
    if (std::abs(trace(m) - cxd(1.0)) > kTraceTol)
        throw NotDensityMatrix("density matrix: trace deviates from 1 by more than 1e-9");
}

} // namespace

DensityMatrix::DensityMatrix(const Mat4 &m) : m_(m) {
    check_density_cheap(m_);
    const Spectrum s = hermitian_eigenvalues(m_);
    if (s.values[3] < kMinEig)
        throw NotDensityMatrix("density matrix: eigenvalue below -1e-8");
}

DensityMatrix DensityMatrix::assume_positive(const Mat4 &m) {
    check_density_cheap(m);
    return DensityMatrix(m, no_check_tag{});
}

void DensityMatrix::validate() const {
    check_density_cheap(m_);
    const Spectrum s = hermitian_eigenvalues(m_);
    if (s.values[3] < kMinEig)
        throw NotDensityMatrix("density matrix: eigenvalue below -1e-8");
}

DensityMatrix density_from_pure(const PureState &psi) {
    const std::array<cxd, 4> &a = psi.amplitudes();
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = a[i] * std::conj(a[j]);
    return DensityMatrix(m);
}

double purity(const DensityMatrix &rho) {
    double s = 0.0;
    for (const cxd &x : rho.matrix().e) s += std::norm(x);
    return s;
}

Mat4 partial_transpose_b(const Mat4 &m) {
    Mat4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r(2 * i + j, 2 * k + l) = m(2 * i + l, 2 * k + j);
    return r;
}

Mat4 partial_transpose_b(const DensityMatrix &rho) { return partial_transpose_b(rho.matrix()); }

// ---------------------------------------------------------------------------
// Hermitian path: cyclic complex Jacobi.

Spectrum hermitian_eigenvalues(const Mat4 &m) {
    if (!all_finite(m)) throw NotHermitian("hermitian_eigenvalues: non-finite entry");
    if (hermiticity_defect(m) > kHermTol)
        throw NotHermitian("hermitian_eigenvalues: Hermiticity defect above 1e-10");

    Mat4 a = hermitize(m);
    Mat4 v = Mat4::identity();
    const double scale = frobenius_norm(a);

    for (int sweep = 0; sweep < 50; ++sweep) {
        double off2 = 0.0;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) off2 += 2.0 * std::norm(a(p, q));
        if (std::sqrt(off2) <= 1e-15 * scale) break;

        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const double beta = std::abs(a(p, q));
                if (beta == 0.0) continue;
                // Unitary plane rotation in (p, q) chosen to zero a(p, q).
                // With the pivot written as |a(p,q)| * w, the rotation angle
                // satisfies tan(2 theta) = 2|a(p,q)| / (a(p,p) - a(q,q)).
                const cxd w = a(p, q) / beta;
                const double alpha = a(p, p).real();
                const double delta = a(q, q).real();
                const double tau = (delta - alpha) / (2.0 * beta);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                Mat4 j = Mat4::identity();
                j(p, p) = c;
                j(p, q) = s * w;
                j(q, p) = -s * std::conj(w);
                j(q, q) = c;

                a = adjoint(j) * a * j;
                v = v * j;
            }
        }
    }

    std::array<int, 4> order{0, 1, 2, 3};
    std::array<double, 4> diag{a(0, 0).real(), a(1, 1).real(), a(2, 2).real(), a(3, 3).real()};
    std::sort(order.begin(), order.end(), [&](int x, int y) { return diag[x] > diag[y]; });

    Spectrum out;
    double residual = 0.0;
    for (int i = 0; i < 4; ++i) {
        const int col = order[i];
        const double lambda = diag[col];
        out.values[i] = lambda;
        double r2 = 0.0;
        for (int row = 0; row < 4; ++row) {
            cxd mv = 0.0;
            for (int k = 0; k < 4; ++k) mv += m(row, k) * v(k, col);
            r2 += std::norm(mv - lambda * v(row, col));
        }
        residual = std::max(residual, std::sqrt(r2));
    }
    out.residual = residual;
    if (residual > kHermTol * std::max(1.0, scale))
        throw Error("hermitian_eigenvalues: residual above tolerance");
    return out;
}

// ---------------------------------------------------------------------------
// General path: characteristic polynomial from principal minors.

namespace {

cxd det2(const Mat4 &m, int r0, int r1, int c0, int c1) {
    return m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
}

cxd det3(const Mat4 &m, int r0, int r1, int r2, int c0, int c1, int c2) {
    return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) -
           m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0)) +
           m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
}

cxd det4(const Mat4 &m) {
    return m(0, 0) * det3(m, 1, 2, 3, 1, 2, 3) - m(0, 1) * det3(m, 1, 2, 3, 0, 2, 3) +
           m(0, 2) * det3(m, 1, 2, 3, 0, 1, 3) - m(0, 3) * det3(m, 1, 2, 3, 0, 1, 2);
}

// Same cofactor sums over entry magnitudes with no cancellation, bounding
// the terms that the signed versions may cancel away.
double det2_mag(const double a[4][4], int r0, int r1, int c0, int c1) {
    return a[r0][c0] * a[r1][c1] + a[r0][c1] * a[r1][c0];
}

double det3_mag(const double a[4][4], int r0, int r1, int r2, int c0, int c1, int c2) {
    return a[r0][c0] * (a[r1][c1] * a[r2][c2] + a[r1][c2] * a[r2][c1]) +
           a[r0][c1] * (a[r1][c0] * a[r2][c2] + a[r1][c2] * a[r2][c0]) +
           a[r0][c2] * (a[r1][c0] * a[r2][c1] + a[r1][c1] * a[r2][c0]);
}

double det4_mag(const double a[4][4]) {
    return a[0][0] * det3_mag(a, 1, 2, 3, 1, 2, 3) + a[0][1] * det3_mag(a, 1, 2, 3, 0, 2, 3) +
           a[0][2] * det3_mag(a, 1, 2, 3, 0, 1, 3) + a[0][3] * det3_mag(a, 1, 2, 3, 0, 1, 2);
}

cxd poly_eval(const cxd *c, int degree, cxd z) {
    cxd p = c[0];
    for (int i = 1; i <= degree; ++i) p = p * z + c[i];
    return p;
}

cxd poly_deriv_eval(const cxd *c, int degree, cxd z) {
    cxd p = c[0] * static_cast<double>(degree);
    for (int i = 1; i < degree; ++i) p = p * z + c[i] * static_cast<double>(degree - i);
    return p;
}

// Simultaneous iteration for all roots of a monic polynomial.  Simple roots
// converge to full precision; a multiple root comes back as a cluster of
// approximations scattered around it, cleaned up afterwards by
// merge_unresolved_clusters.
void durand_kerner(const cxd *c, int degree, cxd *roots) {
    double radius = 0.0;
    for (int i = 1; i <= degree; ++i) radius = std::max(radius, std::abs(c[i]));
    radius += 1.0;

    for (int k = 0; k < degree; ++k) {
        const double angle = 2.0 * M_PI * k / degree + 0.4;
        roots[k] = radius * cxd(std::cos(angle), std::sin(angle));
    }

    for (int iter = 0; iter < 400; ++iter) {
        double max_step = 0.0;
        for (int k = 0; k < degree; ++k) {
            cxd den = 1.0;
            for (int j = 0; j < degree; ++j)
                if (j != k) den *= roots[k] - roots[j];
            if (std::abs(den) < 1e-300) den = 1e-300;
            const cxd step = poly_eval(c, degree, roots[k]) / den;
            roots[k] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step <= 1e-15 * radius) break;
    }

    // Guarded Newton polish, a few steps per root, each kept only while it
    // lowers |p|.  Simple roots tighten to machine precision; members of a
    // multiple-root cluster settle onto the evaluation-noise attractor
    // instead of the wider orbit the simultaneous iteration can stall on.
    for (int k = 0; k < degree; ++k) {
        for (int step = 0; step < 12; ++step) {
            const cxd pd = poly_deriv_eval(c, degree, roots[k]);
            if (std::abs(pd) < 1e-300) break;
            const cxd cand = roots[k] - poly_eval(c, degree, roots[k]) / pd;
            if (std::abs(poly_eval(c, degree, cand)) >=
                std::abs(poly_eval(c, degree, roots[k])))
                break;
            roots[k] = cand;
        }
    }
}

// A root of multiplicity m responds to coefficient noise of size delta by
// splitting into m approximations spread over a disk of radius about
// (delta / q)^(1/m), where q is the product of distances to the remaining
// roots.  The scatter directions nearly cancel, so the cluster centroid
// recovers the root to O(delta) even though no single member does.  Merges
// groups of approximations whose spread is consistent with that scatter
// radius and replaces each member by its group centroid.  Genuinely separate
// roots are left alone: their distance exceeds the scatter radius by orders
// of magnitude.  cs bounds the rounding noise per coefficient, aligned with
// the coefficient array handed to durand_kerner.
void merge_unresolved_clusters(const double *cs, int degree, cxd *roots) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double inf = std::numeric_limits<double>::infinity();

    std::array<int, 4> group{};
    std::array<double, 4> group_blur{};
    for (int k = 0; k < degree; ++k) group[k] = k;

    for (;;) {
        std::array<int, 4> count{};
        for (int k = 0; k < degree; ++k) ++count[group[k]];

        // Among all group pairs pick the one whose combined spread is
        // smallest relative to its scatter radius; stop once no pair sits
        // within the merge band.
        int ga = -1;
        int gb = -1;
        double best = 3.0;
        double best_blur = 0.0;
        for (int a = 0; a < degree; ++a) {
            if (count[a] == 0) continue;
            for (int b = a + 1; b < degree; ++b) {
                if (count[b] == 0) continue;
                cxd z = 0.0;
                int m = 0;
                for (int k = 0; k < degree; ++k)
                    if (group[k] == a || group[k] == b) {
                        z += roots[k];
                        ++m;
                    }
                z /= static_cast<double>(m);
                double spread = 0.0;
                for (int k = 0; k < degree; ++k)
                    if (group[k] == a || group[k] == b)
                        spread = std::max(spread, std::abs(roots[k] - z));
                // An outside root closer than the spread cannot push the
                // scatter radius up on its own; floor its distance factor.
                double q = 1.0;
                for (int k = 0; k < degree; ++k)
                    if (group[k] != a && group[k] != b)
                        q *= std::max(std::abs(z - roots[k]), spread);
                const double az = std::abs(z);
                double noise = cs[0];
                for (int i = 1; i <= degree; ++i) noise = noise * az + cs[i];
                noise *= 16.0 * eps;
                const double blur = std::pow(noise / std::max(q, 1e-300), 1.0 / m);
                const double ratio =
                    blur > 0.0 ? spread / blur : (spread == 0.0 ? 0.0 : inf);
                if (ratio < best) {
                    best = ratio;
                    best_blur = blur;
                    ga = a;
                    gb = b;
                }
            }
        }
        if (ga < 0) break;
        for (int k = 0; k < degree; ++k)
            if (group[k] == gb) group[k] = ga;
        group_blur[ga] = best_blur;
    }

    std::array<cxd, 4> sum{};
    std::array<int, 4> count{};
    for (int k = 0; k < degree; ++k) {
        sum[group[k]] += roots[k];
        ++count[group[k]];
    }
    for (int k = 0; k < degree; ++k) {
        const int g = group[k];
        if (count[g] < 2) continue;
        cxd z = sum[g] / static_cast<double>(count[g]);
        // Everything below the scatter radius is noise, including the
        // centroid's imaginary part; the iteration is free to stop its
        // cluster members off the real axis without conjugate partners.
        if (std::abs(z.imag()) <= 3.0 * group_blur[g]) z = cxd(z.real());
        roots[k] = z;
    }
}

} // namespace

Spectrum general_eigenvalues(const Mat4 &m) {
    if (!all_finite(m)) throw Error("general_eigenvalues: non-finite entry");

    // det(lambda I - M) = lambda^4 - e1 lambda^3 + e2 lambda^2 - e3 lambda + e4
    // with e_k the sum of the k x k principal minors.  Computed from cofactor
    // products directly so a structurally zero row or column makes the
    // trailing coefficients exactly zero.
    const cxd e1 = trace(m);
    const cxd e2 = det2(m, 0, 1, 0, 1) + det2(m, 0, 2, 0, 2) + det2(m, 0, 3, 0, 3) +
                   det2(m, 1, 2, 1, 2) + det2(m, 1, 3, 1, 3) + det2(m, 2, 3, 2, 3);
    const cxd e3 = det3(m, 0, 1, 2, 0, 1, 2) + det3(m, 0, 1, 3, 0, 1, 3) +
                   det3(m, 0, 2, 3, 0, 2, 3) + det3(m, 1, 2, 3, 1, 2, 3);
    const cxd e4 = det4(m);

    std::array<cxd, 5> c{cxd(1.0), -e1, e2, -e3, e4};

    double am[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) am[i][j] = std::abs(m(i, j));
    const std::array<double, 5> cs{
        1.0,
        am[0][0] + am[1][1] + am[2][2] + am[3][3],
        det2_mag(am, 0, 1, 0, 1) + det2_mag(am, 0, 2, 0, 2) + det2_mag(am, 0, 3, 0, 3) +
            det2_mag(am, 1, 2, 1, 2) + det2_mag(am, 1, 3, 1, 3) + det2_mag(am, 2, 3, 2, 3),
        det3_mag(am, 0, 1, 2, 0, 1, 2) + det3_mag(am, 0, 1, 3, 0, 1, 3) +
            det3_mag(am, 0, 2, 3, 0, 2, 3) + det3_mag(am, 1, 2, 3, 1, 2, 3),
        det4_mag(am)};

    // Exactly zero trailing coefficients each contribute an exact zero root.
    int degree = 4;
    int zero_roots = 0;
    while (degree > 0 && c[degree] == cxd(0.0)) {
        ++zero_roots;
        --degree;
    }

    std::array<cxd, 4> roots{};
    int found = 0;
    if (degree == 1) {
        roots[found++] = -c[1];
    } else if (degree == 2) {
        // Stable quadratic: the larger-magnitude root from the sign-matched
        // formula, the other from the product of roots.
        const cxd b = c[1];
        const cxd cc = c[2];
        cxd sq = std::sqrt(b * b - 4.0 * cc);
        if ((std::conj(b) * sq).real() < 0.0) sq = -sq;
        const cxd q = -0.5 * (b + sq);
        if (std::abs(q) > 0.0) {
            roots[found++] = q;
            roots[found++] = cc / q;
        } else {
            roots[found++] = 0.0;
            roots[found++] = 0.0;
        }
    } else if (degree >= 3) {
        durand_kerner(c.data(), degree, roots.data());
        merge_unresolved_clusters(cs.data(), degree, roots.data());
        found = degree;
    }
    for (int k = 0; k < zero_roots; ++k) roots[found++] = 0.0;

    double poly_scale = 1.0;
    for (int i = 1; i <= 4; ++i) poly_scale = std::max(poly_scale, std::abs(c[i]));
    double residual = 0.0;
    for (int k = 0; k < 4; ++k)
        residual = std::max(residual, std::abs(poly_eval(c.data(), 4, roots[k])));
    residual /= poly_scale;
    if (residual > 1e-9) throw Error("general_eigenvalues: root residual above tolerance");

    double max_mag = 0.0;
    for (int k = 0; k < 4; ++k) max_mag = std::max(max_mag, std::abs(roots[k]));
    for (int k = 0; k < 4; ++k)
        if (std::abs(roots[k].imag()) > 1e-8)
            throw ComplexSpectrum("general_eigenvalues: eigenvalue with imaginary part above 1e-8");

    Spectrum out;
    out.residual = residual;
    for (int k = 0; k < 4; ++k) {
        double r = roots[k].real();
        if (r < 0.0 && r >= -1e-8) r = 0.0;
        if (std::abs(r) <= 1e-13 * max_mag) r = 0.0;
        out.values[k] = r;
    }
    std::sort(out.values.begin(), out.values.end(), std::greater<double>());
    return out;
}

} // namespace entdyn
