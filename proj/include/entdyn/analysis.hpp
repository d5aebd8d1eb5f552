// Entanglement survival analysis: locating sudden-death times by scan plus
// bisection, sweeping them against temperature or initial amplitude, and
// comparing the two measures along a trajectory.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "entdyn/dynamics.hpp"
#include "entdyn/measures.hpp"

namespace entdyn {

enum class MeasureKind { concurrence, log_negativity };

// A measure value at or below 1e-9 counts as dead.
inline constexpr double kDeadThreshold = 1e-9;

// Measure of the closed-form state at time t.
double measure_at(const DensityMatrix &rho0, const SymmetricParams &p, double t,
                  MeasureKind kind);

struct EsdReport {
    // Absent when the measure stays above the death threshold up to the
    // horizon.  Zero when the initial state is already below it.
    std::optional<double> death_time;
    MeasureKind measure = MeasureKind::concurrence;
    // Final bisection bracket (lo, hi), hi - lo within the time tolerance.
    std::optional<std::pair<double, double>> bracket;
    double horizon = 0.0;
    // True when a later scan sample comes back above the threshold.
    bool revived = false;
};

// Scans 2048 uniform samples of the chosen measure over [0, horizon], then
// bisects the first alive-to-dead crossing down to a bracket of width
// 1e-6/gamma.  The horizon must satisfy horizon * gamma <= 100.
EsdReport esd_time(const PureState &psi0, const SymmetricParams &p, double horizon,
                   MeasureKind kind);

// Same contract for arbitrary reservoir pairs; samples come from one RK4
// trajectory and each bisection probe re-integrates from the stored sample
// at the left edge of the bracket.
EsdReport esd_time_rk4(const DensityMatrix &rho0, const ReservoirParams &p, double horizon,
                       MeasureKind kind);

struct SweepRow {
    double value = 0.0;
    std::optional<double> death_time;
    double initial_log_negativity = 0.0;
    double initial_concurrence = 0.0;
};

// Death time of the concurrence for one initial state across occupations.
// The initial-measure columns are the same in every row.
std::vector<SweepRow> esd_vs_nbar(const PureState &psi0, double gamma,
                                  const std::vector<double> &nbars, double horizon);

// Death time of the concurrence across initial amplitudes in (0, 1) for one
// of the named families: noon builds amp|01> + sqrt(1-amp^2)|10>, phi builds
// amp|00> + sqrt(1-amp^2)|11>.
std::vector<SweepRow> esd_vs_amplitude(Family family, const SymmetricParams &p,
                                       const std::vector<double> &amps, double horizon);

struct ComparisonSummary {
    double max_abs_diff = 0.0;
    // Fraction of samples with N >= C - 1e-12; the slack keeps exact ties
    // (pure states at t = 0, dead tails) counted.
    double fraction_n_geq_c = 0.0;
    std::optional<double> death_time_concurrence;
    std::optional<double> death_time_log_negativity;
    double sample_spacing = 0.0;
};

// Evaluates both measures at every sample of the trajectory and summarizes
// how they compare; death estimates have sample-spacing resolution.
ComparisonSummary measure_comparison(const Trajectory &traj);

} // namespace entdyn
