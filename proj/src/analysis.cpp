#include "entdyn/analysis.hpp"

#include <cmath>

namespace entdyn {

namespace {

constexpr int kScanSamples = 2048;

double measure_of(const DensityMatrix &rho, MeasureKind kind) {
    return kind == MeasureKind::concurrence ? concurrence(rho) : log_negativity(rho);
}

// Index of the first sample at or below the death threshold that follows a
// sample above it; 0 when the very first sample is already dead.
std::optional<std::size_t> first_dead_index(const std::vector<double> &v) {
    if (v.empty()) return std::nullopt;
    if (v[0] <= kDeadThreshold) return 0;
    for (std::size_t k = 1; k < v.size(); ++k)
        if (v[k] <= kDeadThreshold && v[k - 1] > kDeadThreshold) return k;
    return std::nullopt;
}

void check_horizon(double horizon, double gamma) {
    if (!(horizon > 0.0) || !std::isfinite(horizon))
        throw Error("esd scan: horizon must be positive");
    if (horizon * gamma > 100.0 * (1.0 + 1e-12))
        throw Error("esd scan: horizon must not exceed 100/gamma");
}

} // namespace

double measure_at(const DensityMatrix &rho0, const SymmetricParams &p, double t,
                  MeasureKind kind) {
    return measure_of(evolve_analytic(rho0, p, t), kind);
}

EsdReport esd_time(const PureState &psi0, const SymmetricParams &p, double horizon,
                   MeasureKind kind) {
    check_horizon(horizon, p.gamma);
    const DensityMatrix rho0 = density_from_pure(psi0);

    std::vector<double> values(kScanSamples);
    std::vector<double> times(kScanSamples);
    for (int k = 0; k < kScanSamples; ++k) {
        times[k] = horizon * k / (kScanSamples - 1);
        values[k] = measure_at(rho0, p, times[k], kind);
    }

    EsdReport report;
    report.measure = kind;
    report.horizon = horizon;

    const std::optional<std::size_t> dead = first_dead_index(values);
    if (!dead) return report;

    const std::size_t k = *dead;
    if (k == 0) {
        report.death_time = 0.0;
        report.bracket = std::make_pair(0.0, 0.0);
    } else {
        const double tol = 1e-6 / p.gamma;
        double lo = times[k - 1];
        double hi = times[k];
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            if (measure_at(rho0, p, mid, kind) > kDeadThreshold)
                lo = mid;
            else
                hi = mid;
        }
        report.death_time = 0.5 * (lo + hi);
        report.bracket = std::make_pair(lo, hi);
    }
    for (std::size_t j = k + 1; j < values.size(); ++j)
        if (values[j] > kDeadThreshold) report.revived = true;
    return report;
}

EsdReport esd_time_rk4(const DensityMatrix &rho0, const ReservoirParams &p, double horizon,
                       MeasureKind kind) {
    const double gamma_ref = p.gamma_a < p.gamma_b ? p.gamma_a : p.gamma_b;
    check_horizon(horizon, gamma_ref);

    // Integrate once with every scan point a stored sample: steps is a
    // multiple of the scan intervals, fine enough for a stable, accurate
    // step.
    const int intervals = kScanSamples - 1;
    const int per =
        std::max(1, static_cast<int>(std::ceil(horizon * p.eta_max() / (0.01 * intervals))));
    const TimeGrid grid(0.0, horizon, intervals * per);
    const Trajectory traj = evolve_rk4(rho0, p, grid);

    std::vector<double> values(kScanSamples);
    std::vector<double> times(kScanSamples);
    for (int k = 0; k < kScanSamples; ++k) {
        const Sample &s = traj[static_cast<std::size_t>(k) * per];
        times[k] = s.t;
        values[k] = measure_of(s.rho, kind);
    }

    EsdReport report;
    report.measure = kind;
    report.horizon = horizon;

    const std::optional<std::size_t> dead = first_dead_index(values);
    if (!dead) return report;

    const std::size_t k = *dead;
    if (k == 0) {
        report.death_time = 0.0;
        report.bracket = std::make_pair(0.0, 0.0);
    } else {
        // Probe by re-integrating from the stored bracket-left sample so
        // bisection error does not accumulate.
        const DensityMatrix &left = traj[(k - 1) * per].rho;
        const double t_left = times[k - 1];
        const auto probe = [&](double t) {
            if (t <= t_left) return values[k - 1];
            const double dt = t - t_left;
            const int steps = std::max(1, static_cast<int>(std::ceil(dt * p.eta_max() / 1e-3)));
            const Trajectory short_run = evolve_rk4(left, p, TimeGrid(t_left, t, steps));
            return measure_of(short_run.samples().back().rho, kind);
        };
        const double tol = 1e-6 / gamma_ref;
        double lo = times[k - 1];
        double hi = times[k];
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            if (probe(mid) > kDeadThreshold)
                lo = mid;
            else
                hi = mid;
        }
        report.death_time = 0.5 * (lo + hi);
        report.bracket = std::make_pair(lo, hi);
    }
    for (std::size_t j = k + 1; j < values.size(); ++j)
        if (values[j] > kDeadThreshold) report.revived = true;
    return report;
}

std::vector<SweepRow> esd_vs_nbar(const PureState &psi0, double gamma,
                                  const std::vector<double> &nbars, double horizon) {
    if (nbars.empty()) throw Error("esd_vs_nbar: empty occupation list");
    const DensityMatrix rho0 = density_from_pure(psi0);
    const double n0 = log_negativity(rho0);
    const double c0 = concurrence(rho0);

    std::vector<SweepRow> rows;
    rows.reserve(nbars.size());
    for (double nbar : nbars) {
        const SymmetricParams p(gamma, nbar);
        const EsdReport r = esd_time(psi0, p, horizon, MeasureKind::concurrence);
        rows.push_back({nbar, r.death_time, n0, c0});
    }
    return rows;
}

std::vector<SweepRow> esd_vs_amplitude(Family family, const SymmetricParams &p,
                                       const std::vector<double> &amps, double horizon) {
    if (amps.empty()) throw Error("esd_vs_amplitude: empty amplitude list");
    std::vector<SweepRow> rows;
    rows.reserve(amps.size());
    for (double amp : amps) {
        if (!(amp > 0.0 && amp < 1.0))
            throw Error("esd_vs_amplitude: amplitudes must lie strictly between 0 and 1");
        const double rest = std::sqrt(1.0 - amp * amp);
        const PureState psi = family == Family::noon ? PureState(0.0, amp, rest, 0.0)
                                                     : PureState(amp, 0.0, 0.0, rest);
        const DensityMatrix rho0 = density_from_pure(psi);
        const EsdReport r = esd_time(psi, p, horizon, MeasureKind::concurrence);
        rows.push_back({amp, r.death_time, log_negativity(rho0), concurrence(rho0)});
    }
    return rows;
}

ComparisonSummary measure_comparison(const Trajectory &traj) {
    const std::vector<Sample> &s = traj.samples();
    if (s.size() < 2) throw Error("measure_comparison: need at least two samples");

    std::vector<double> nvals(s.size()), cvals(s.size());
    ComparisonSummary out;
    std::size_t count_geq = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        nvals[k] = log_negativity(s[k].rho);
        cvals[k] = concurrence(s[k].rho);
        out.max_abs_diff = std::max(out.max_abs_diff, std::abs(nvals[k] - cvals[k]));
        if (nvals[k] >= cvals[k] - 1e-12) ++count_geq;
    }
    out.fraction_n_geq_c = static_cast<double>(count_geq) / static_cast<double>(s.size());

    if (const auto kc = first_dead_index(cvals)) out.death_time_concurrence = s[*kc].t;
    if (const auto kn = first_dead_index(nvals)) out.death_time_log_negativity = s[*kn].t;
    out.sample_spacing =
        (s.back().t - s.front().t) / static_cast<double>(s.size() - 1);
    return out;
}

} // namespace entdyn
