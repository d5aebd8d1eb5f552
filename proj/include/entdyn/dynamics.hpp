// Dissipative dynamics of two field modes, each damped by its own thermal
// reservoir.  The generator couples populations down the excitation ladder
// and decays coherences; with identical reservoirs the solution is known in
// closed form and both routes (closed form and RK4 integration of the
// elementwise equations of motion) are provided so they can check each other.
#pragma once

#include <vector>

#include "entdyn/qstate.hpp"

namespace entdyn {

// Independent damping rate and mean thermal occupation per reservoir.
struct ReservoirParams {
    double gamma_a;
    double gamma_b;
    double nbar_a;
    double nbar_b;

    ReservoirParams(double ga, double gb, double na, double nb);

    bool symmetric() const { return gamma_a == gamma_b && nbar_a == nbar_b; }
    // Fastest decay rate per mode, (2 nbar + 1) gamma; bounds the stable
    // integrator step.
    double eta_a() const { return (2.0 * nbar_a + 1.0) * gamma_a; }
    double eta_b() const { return (2.0 * nbar_b + 1.0) * gamma_b; }
    double eta_max() const { return eta_a() > eta_b() ? eta_a() : eta_b(); }
};

// Identical reservoirs; the closed-form solutions are written in terms of
// a = 2 nbar + 1 and the coherence decay rate eta = a gamma.
struct SymmetricParams {
    double gamma;
    double nbar;

    SymmetricParams(double g, double n);

    double a() const { return 2.0 * nbar + 1.0; }
    double eta() const { return a() * gamma; }
    ReservoirParams reservoir() const { return ReservoirParams(gamma, gamma, nbar, nbar); }
};

// Uniform sampling grid: steps+1 samples from t_start to t_end inclusive.
struct TimeGrid {
    double t_start;
    double t_end;
    int steps;

    TimeGrid(double t0, double t1, int n);

    double step() const { return (t_end - t_start) / steps; }
    double time_at(int k) const { return t_start + k * ((t_end - t_start) / steps); }
};

enum class Method { analytic, rk4 };

struct Sample {
    double t;
    DensityMatrix rho;
};

// Time-ordered states plus the parameters and method that produced them.
class Trajectory {
  public:
    Trajectory(std::vector<Sample> samples, const ReservoirParams &params, Method method);

    const std::vector<Sample> &samples() const { return samples_; }
    const ReservoirParams &params() const { return params_; }
    Method method() const { return method_; }
    std::size_t size() const { return samples_.size(); }
    const Sample &operator[](std::size_t k) const { return samples_[k]; }

  private:
    std::vector<Sample> samples_;
    ReservoirParams params_;
    Method method_;
};

// Time derivative of rho under the two-reservoir generator, assembled entry
// by entry:
//   d rho_ij = -L_ij rho_ij + feed terms,
// where L_ij collects gamma (nbar + w) per mode with weight w = 0, 1, or 1/2
// depending on whether the mode's excitation bit is 0 on both indices, 1 on
// both, or differs, and the feeds couple each entry to the one with both
// indices raised (rate (nbar+1) gamma) or lowered (rate nbar gamma) in one
// mode.  The result is Hermitian and traceless for Hermitian input.
Mat4 lindblad_rhs(const DensityMatrix &rho, const ReservoirParams &p);

// Classic fixed-step 4th-order integration on the given grid.  Every stored
// sample is re-Hermitized and trace-checked.  Throws StepTooLarge when
// h * eta_max exceeds 0.05.
Trajectory evolve_rk4(const DensityMatrix &rho0, const ReservoirParams &p, const TimeGrid &grid);

// Closed-form state at time t >= 0 for identical reservoirs.  Populations
// relax through e^{-eta t} and e^{-2 eta t}; the inner and outer coherences
// decay as e^{-eta t}; the single-mode coherences mix through e^{-eta t/2}
// and e^{-3 eta t/2}.  Entry parts smaller than 1e-14 are snapped to exact
// zero so the structural zeros of the closed forms survive rounding.
DensityMatrix evolve_analytic(const DensityMatrix &rho0, const SymmetricParams &p, double t);

// Stationary thermal product state: populations
//   ((1+a)/(2a))^2, (a^2-1)/(4a^2), (a^2-1)/(4a^2), ((a-1)/(2a))^2
// with no coherences.
DensityMatrix steady_state(const SymmetricParams &p);

// evolve_analytic sampled over a grid; rho0 is the state at grid.t_start.
Trajectory trajectory_analytic(const DensityMatrix &rho0, const SymmetricParams &p,
                               const TimeGrid &grid);

namespace detail {

// evolve_analytic with the rho23 decay coefficient scaled by (1 + eps).
// The self-check command uses a nonzero eps to prove that the closed-form
// versus RK4 gate actually detects a corrupted propagator coefficient.
DensityMatrix evolve_analytic_perturbed(const DensityMatrix &rho0, const SymmetricParams &p,
                                        double t, double eps);

} // namespace detail

} // namespace entdyn
