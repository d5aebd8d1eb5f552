#include "entdyn/dynamics.hpp"

#include <cmath>
#include <utility>

namespace entdyn {

ReservoirParams::ReservoirParams(double ga, double gb, double na, double nb)
    : gamma_a(ga), gamma_b(gb), nbar_a(na), nbar_b(nb) {
    if (!(std::isfinite(ga) && std::isfinite(gb) && std::isfinite(na) && std::isfinite(nb)))
        throw Error("reservoir params: non-finite value");
    if (ga <= 0.0 || gb <= 0.0) throw Error("reservoir params: damping rates must be positive");
    if (na < 0.0 || nb < 0.0) throw Error("reservoir params: occupations must be nonnegative");
}

SymmetricParams::SymmetricParams(double g, double n) : gamma(g), nbar(n) {
    if (!(std::isfinite(g) && std::isfinite(n)))
        throw Error("symmetric params: non-finite value");
    if (g <= 0.0) throw Error("symmetric params: damping rate must be positive");
    if (n < 0.0) throw Error("symmetric params: occupation must be nonnegative");
}

TimeGrid::TimeGrid(double t0, double t1, int n) : t_start(t0), t_end(t1), steps(n) {
    if (!(std::isfinite(t0) && std::isfinite(t1))) throw Error("time grid: non-finite endpoint");
    if (t1 <= t0) throw Error("time grid: t_end must exceed t_start");
    if (n < 1) throw Error("time grid: need at least one step");
}

Trajectory::Trajectory(std::vector<Sample> samples, const ReservoirParams &params, Method method)
    : samples_(std::move(samples)), params_(params), method_(method) {
    if (samples_.empty()) throw Error("trajectory: no samples");
    for (std::size_t k = 1; k < samples_.size(); ++k)
        if (!(samples_[k].t > samples_[k - 1].t))
            throw Error("trajectory: sample times must increase strictly");
}

namespace {

// Per-entry decay coefficients and the four ladder rates, precomputed once
// per integration.
struct RhsCoeffs {
    double loss[16];
    double ga_down, ga_up, gb_down, gb_up;
};

RhsCoeffs make_coeffs(const ReservoirParams &p) {
    RhsCoeffs c;
    c.ga_down = (p.nbar_a + 1.0) * p.gamma_a;
    c.ga_up = p.nbar_a * p.gamma_a;
    c.gb_down = (p.nbar_b + 1.0) * p.gamma_b;
    c.gb_up = p.nbar_b * p.gamma_b;
    for (int i = 0; i < 4; ++i) {
        const int ai = i >> 1, bi = i & 1;
        for (int j = 0; j < 4; ++j) {
            const int aj = j >> 1, bj = j & 1;
            const double wa = (ai == aj) ? static_cast<double>(ai) : 0.5;
            const double wb = (bi == bj) ? static_cast<double>(bi) : 0.5;
            c.loss[4 * i + j] =
                p.gamma_a * (p.nbar_a + wa) + p.gamma_b * (p.nbar_b + wb);
        }
    }
    return c;
}

Mat4 rhs_raw(const Mat4 &m, const RhsCoeffs &c) {
    Mat4 d;
    for (int i = 0; i < 4; ++i) {
        const int ai = i >> 1, bi = i & 1;
        for (int j = 0; j < 4; ++j) {
            const int aj = j >> 1, bj = j & 1;
            cxd v = -c.loss[4 * i + j] * m(i, j);
            if (ai == 0 && aj == 0) v += c.ga_down * m(i + 2, j + 2);
            if (ai == 1 && aj == 1) v += c.ga_up * m(i - 2, j - 2);
            if (bi == 0 && bj == 0) v += c.gb_down * m(i + 1, j + 1);
            if (bi == 1 && bj == 1) v += c.gb_up * m(i - 1, j - 1);
            d(i, j) = v;
        }
    }
    return d;
}

} // namespace

Mat4 lindblad_rhs(const DensityMatrix &rho, const ReservoirParams &p) {
    return rhs_raw(rho.matrix(), make_coeffs(p));
}

Trajectory evolve_rk4(const DensityMatrix &rho0, const ReservoirParams &p, const TimeGrid &grid) {
    const double h = grid.step();
    if (h * p.eta_max() > 0.05 * (1.0 + 1e-12))
        throw StepTooLarge("evolve_rk4: step times fastest rate exceeds 0.05");

    const RhsCoeffs c = make_coeffs(p);
    std::vector<Sample> samples;
    samples.reserve(grid.steps + 1);

    Mat4 rho = rho0.matrix();
    samples.push_back({grid.time_at(0), DensityMatrix::assume_positive(rho)});
    for (int k = 1; k <= grid.steps; ++k) {
        const Mat4 k1 = rhs_raw(rho, c);
        const Mat4 k2 = rhs_raw(rho + (0.5 * h) * k1, c);
        const Mat4 k3 = rhs_raw(rho + (0.5 * h) * k2, c);
        const Mat4 k4 = rhs_raw(rho + h * k3, c);
        rho = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        rho = hermitize(rho);
        if (std::abs(trace(rho) - cxd(1.0)) > 1e-9)
            throw Error("evolve_rk4: trace drifted by more than 1e-9");
        samples.push_back({grid.time_at(k), DensityMatrix::assume_positive(rho)});
    }
    return Trajectory(std::move(samples), p, Method::rk4);
}

namespace {

double snap(double x) { return std::abs(x) < 1e-14 ? 0.0 : x; }

cxd snap(const cxd &z) { return cxd(snap(z.real()), snap(z.imag())); }

Mat4 analytic_matrix(const Mat4 &m0, double a, double eta, double t, double eps23) {
    const double E = std::exp(-eta * t);
    const double E2 = E * E;
    const double Eh = std::exp(-0.5 * eta * t);
    const double E3h = Eh * E;

    const double r11 = m0(0, 0).real();
    const double r22 = m0(1, 1).real();
    const double r33 = m0(2, 2).real();
    const double S = 2.0 * r11 + r22 + r33 - 1.0;
    const double P = r22 + r33;
    const double Q = r22 - r33;
    const double a2 = a * a;
    const double inv4a2 = 1.0 / (4.0 * a2);
    const double inv2a = 1.0 / (2.0 * a);

    const double p11 = inv4a2 * ((-2.0 + 2.0 * a * S) * (1.0 + a) * E +
                                 (1.0 + a2 * (1.0 - 2.0 * P) - 2.0 * a * S) * E2 +
                                 (1.0 + a) * (1.0 + a));
    const double p22 = inv4a2 * ((-1.0 + a2 * (2.0 * P - 1.0) + 2.0 * a * S) * E2 +
                                 (2.0 + 2.0 * a2 * Q - 2.0 * a * S) * E + (a2 - 1.0));
    const double p33 = inv4a2 * ((-1.0 + a2 * (2.0 * P - 1.0) + 2.0 * a * S) * E2 +
                                 (2.0 - 2.0 * a2 * Q - 2.0 * a * S) * E + (a2 - 1.0));
    const double p44 = 1.0 - p11 - p22 - p33;

    const cxd c12 = m0(0, 1), c13 = m0(0, 2), c14 = m0(0, 3);
    const cxd c23 = m0(1, 2), c24 = m0(1, 3), c34 = m0(2, 3);

    const cxd r12 =
        inv2a * ((a * (c12 - c34) - c34 - c12) * E3h + (c34 + c12) * ((1.0 + a) * Eh));
    const cxd r13 =
        inv2a * ((a * (c13 - c24) - c24 - c13) * E3h + (c24 + c13) * ((1.0 + a) * Eh));
    const cxd r14 = c14 * E;
    const cxd r23 = (1.0 + eps23) * c23 * E;
    const cxd r24 =
        inv2a * ((a * (c24 - c13) + c24 + c13) * E3h + (c24 + c13) * ((a - 1.0) * Eh));
    const cxd r34 =
        inv2a * ((a * (c34 - c12) + c34 + c12) * E3h + (c34 + c12) * ((a - 1.0) * Eh));

    Mat4 m;
    m(0, 0) = snap(p11);
    m(1, 1) = snap(p22);
    m(2, 2) = snap(p33);
    m(3, 3) = snap(p44);
    m(0, 1) = snap(r12);
    m(0, 2) = snap(r13);
    m(0, 3) = snap(r14);
    m(1, 2) = snap(r23);
    m(1, 3) = snap(r24);
    m(2, 3) = snap(r34);
    m(1, 0) = std::conj(m(0, 1));
    m(2, 0) = std::conj(m(0, 2));
    m(3, 0) = std::conj(m(0, 3));
    m(2, 1) = std::conj(m(1, 2));
    m(3, 1) = std::conj(m(1, 3));
    m(3, 2) = std::conj(m(2, 3));
    return m;
}

} // namespace

DensityMatrix evolve_analytic(const DensityMatrix &rho0, const SymmetricParams &p, double t) {
    return detail::evolve_analytic_perturbed(rho0, p, t, 0.0);
}

DensityMatrix detail::evolve_analytic_perturbed(const DensityMatrix &rho0,
                                                const SymmetricParams &p, double t, double eps) {
    if (!(std::isfinite(t)) || t < 0.0) throw Error("evolve_analytic: time must be nonnegative");
    return DensityMatrix::assume_positive(analytic_matrix(rho0.matrix(), p.a(), p.eta(), t, eps));
}

DensityMatrix steady_state(const SymmetricParams &p) {
    const double a = p.a();
    Mat4 m;
    m(0, 0) = ((1.0 + a) / (2.0 * a)) * ((1.0 + a) / (2.0 * a));
    m(1, 1) = (a * a - 1.0) / (4.0 * a * a);
    m(2, 2) = (a * a - 1.0) / (4.0 * a * a);
    m(3, 3) = ((a - 1.0) / (2.0 * a)) * ((a - 1.0) / (2.0 * a));
    return DensityMatrix(m);
}

Trajectory trajectory_analytic(const DensityMatrix &rho0, const SymmetricParams &p,
                               const TimeGrid &grid) {
    std::vector<Sample> samples;
    samples.reserve(grid.steps + 1);
    for (int k = 0; k <= grid.steps; ++k) {
        const double t = grid.time_at(k);
        samples.push_back({t, evolve_analytic(rho0, p, t - grid.t_start)});
    }
    return Trajectory(std::move(samples), p.reservoir(), Method::analytic);
}

} // namespace entdyn
