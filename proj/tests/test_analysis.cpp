#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entdyn/analysis.hpp"

using namespace entdyn;

namespace {

PureState noon(double amp) { return PureState::normalized(0.0, amp, std::sqrt(1.0 - amp * amp), 0.0); }

PureState phi(double amp) { return PureState::normalized(amp, 0.0, 0.0, std::sqrt(1.0 - amp * amp)); }

} // namespace

TEST_CASE("measure sampling matches the closed-form state") {
    const SymmetricParams p(1.0, 0.0);
    const DensityMatrix rho0 = density_from_pure(noon(M_SQRT1_2));
    const double c = measure_at(rho0, p, 0.7, MeasureKind::concurrence);
    CHECK(std::abs(c - std::exp(-0.7)) < 1e-10);
    const double n = measure_at(rho0, p, 0.0, MeasureKind::log_negativity);
    CHECK(std::abs(n - 1.0) < 1e-12);
}

TEST_CASE("one-photon states on an empty reservoir never die") {
    const EsdReport r = esd_time(noon(M_SQRT1_2), SymmetricParams(1.0, 0.0), 20.0,
                                 MeasureKind::concurrence);
    CHECK(!r.death_time.has_value());
    CHECK(!r.revived);
    CHECK(r.horizon == 20.0);
}

TEST_CASE("balanced two-photon state on an empty reservoir never dies") {
    // The survivor's measure decays like e^{-gamma t} forever, so over a long
    // enough horizon it still crosses the numeric floor; scan to gamma t = 10
    // where it sits a factor two above it.
    const EsdReport r = esd_time(phi(M_SQRT1_2), SymmetricParams(1.0, 0.0), 10.0,
                                 MeasureKind::concurrence);
    CHECK(!r.death_time.has_value());
}

TEST_CASE("two-photon state with the heavy vacuum component dies on schedule") {
    // With amplitudes a1 on |00> and a4 on |11> the concurrence on an empty
    // reservoir is 2 a1 a4 e^{-gamma t} - 2 a4^2 (e^{-gamma t} - e^{-2 gamma t}),
    // which hits zero at t* = -ln(1 - a1/a4) / gamma.
    const double expected = -std::log(1.0 - 0.5 / std::sqrt(0.75));
    const EsdReport r =
        esd_time(phi(0.5), SymmetricParams(1.0, 0.0), 20.0, MeasureKind::concurrence);
    REQUIRE(r.death_time.has_value());
    CHECK(std::abs(*r.death_time - expected) < 1e-5);
    CHECK(std::abs(*r.death_time - 0.8613531161467861) < 1e-5);
    CHECK(!r.revived);
}

TEST_CASE("two-photon state dominated by |11> survives an empty reservoir") {
    const EsdReport r =
        esd_time(phi(0.9), SymmetricParams(1.0, 0.0), 10.0, MeasureKind::concurrence);
    CHECK(!r.death_time.has_value());
}

TEST_CASE("bisection bracket straddles the death point") {
    const SymmetricParams p(1.0, 0.0);
    const EsdReport r = esd_time(phi(0.5), p, 20.0, MeasureKind::concurrence);
    REQUIRE(r.bracket.has_value());
    const auto [lo, hi] = *r.bracket;
    CHECK(hi - lo <= 1e-6 + 1e-12);
    CHECK(lo <= *r.death_time);
    CHECK(*r.death_time <= hi);
    const DensityMatrix rho0 = density_from_pure(phi(0.5));
    CHECK(measure_at(rho0, p, *r.death_time - 1e-5, MeasureKind::concurrence) > kDeadThreshold);
    CHECK(measure_at(rho0, p, *r.death_time + 1e-5, MeasureKind::concurrence) <= kDeadThreshold);
}

TEST_CASE("thermal occupation kills the balanced one-photon state in finite time") {
    const EsdReport r = esd_time(noon(M_SQRT1_2), SymmetricParams(1.0, 0.25), 20.0,
                                 MeasureKind::concurrence);
    REQUIRE(r.death_time.has_value());
    CHECK(*r.death_time > 0.0);
    CHECK(!r.revived);

    const EsdReport n = esd_time(noon(M_SQRT1_2), SymmetricParams(1.0, 0.25), 20.0,
                                 MeasureKind::log_negativity);
    REQUIRE(n.death_time.has_value());
    CHECK(std::abs(*n.death_time - *r.death_time) < 1e-5);
}

TEST_CASE("a dead initial state reports death at time zero") {
    Mat4 m;
    m(0, 0) = 0.25;
    m(1, 1) = 0.25;
    m(2, 2) = 0.25;
    m(3, 3) = 0.25;
    const EsdReport r = esd_time_rk4(DensityMatrix(m), ReservoirParams(1.0, 1.0, 0.0, 0.0),
                                     5.0, MeasureKind::concurrence);
    REQUIRE(r.death_time.has_value());
    CHECK(*r.death_time == 0.0);
}

TEST_CASE("horizon beyond the scan budget is rejected") {
    CHECK_THROWS_AS(
        esd_time(noon(M_SQRT1_2), SymmetricParams(1.0, 0.25), 101.0, MeasureKind::concurrence),
        Error);
    CHECK_THROWS_AS(
        esd_time(noon(M_SQRT1_2), SymmetricParams(1.0, 0.25), 0.0, MeasureKind::concurrence),
        Error);
}

TEST_CASE("integrator-backed death time matches the closed-form one") {
    const SymmetricParams p(1.0, 0.25);
    const EsdReport a = esd_time(noon(M_SQRT1_2), p, 20.0, MeasureKind::concurrence);
    const EsdReport b = esd_time_rk4(density_from_pure(noon(M_SQRT1_2)), p.reservoir(), 20.0,
                                     MeasureKind::concurrence);
    REQUIRE(a.death_time.has_value());
    REQUIRE(b.death_time.has_value());
    CHECK(std::abs(*a.death_time - *b.death_time) < 1e-4);
}

TEST_CASE("death time shrinks as the reservoirs heat up") {
    const std::vector<double> nbars{0.05, 0.1, 0.25, 0.5};
    const std::vector<SweepRow> rows = esd_vs_nbar(noon(M_SQRT1_2), 1.0, nbars, 20.0);
    REQUIRE(rows.size() == 4);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows[k].value == nbars[k]);
        REQUIRE(rows[k].death_time.has_value());
        CHECK(std::abs(rows[k].initial_concurrence - 1.0) < 1e-12);
        CHECK(std::abs(rows[k].initial_log_negativity - 1.0) < 1e-12);
        if (k > 0) CHECK(*rows[k].death_time < *rows[k - 1].death_time);
    }
}

TEST_CASE("amplitude sweep of the two-photon family on an empty reservoir") {
    const std::vector<double> amps{0.3, 0.5, 0.6, M_SQRT1_2, 0.8, 0.9};
    const std::vector<SweepRow> rows =
        esd_vs_amplitude(Family::phi, SymmetricParams(1.0, 0.0), amps, 10.0);
    REQUIRE(rows.size() == 6);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const double amp = amps[k];
        const double c0 = 2.0 * amp * std::sqrt(1.0 - amp * amp);
        CHECK(std::abs(rows[k].initial_concurrence - c0) < 1e-12);
        CHECK(std::abs(rows[k].initial_log_negativity - std::log2(1.0 + c0)) < 1e-12);
        if (amp < M_SQRT1_2) {
            REQUIRE(rows[k].death_time.has_value());
            CHECK(std::abs(*rows[k].death_time + std::log(1.0 - amp / std::sqrt(1.0 - amp * amp))) <
                  1e-4);
        } else {
            CHECK(!rows[k].death_time.has_value());
        }
    }
}

TEST_CASE("amplitude sweep of the one-photon family never dies in vacuum") {
    const std::vector<SweepRow> rows =
        esd_vs_amplitude(Family::noon, SymmetricParams(1.0, 0.0), {0.2, 0.5, 0.8}, 10.0);
    for (const SweepRow &row : rows) CHECK(!row.death_time.has_value());
}

TEST_CASE("amplitude sweep rejects endpoints") {
    const SymmetricParams p(1.0, 0.0);
    CHECK_THROWS_AS(esd_vs_amplitude(Family::noon, p, {0.0}, 20.0), Error);
    CHECK_THROWS_AS(esd_vs_amplitude(Family::noon, p, {1.0}, 20.0), Error);
}

TEST_CASE("measure comparison along a surviving trajectory") {
    const SymmetricParams p(1.0, 0.0);
    const Trajectory traj =
        trajectory_analytic(density_from_pure(phi(M_SQRT1_2)), p, TimeGrid(0.0, 5.0, 500));
    const ComparisonSummary s = measure_comparison(traj);
    CHECK(s.fraction_n_geq_c == 1.0);
    CHECK(!s.death_time_concurrence.has_value());
    CHECK(!s.death_time_log_negativity.has_value());
    CHECK(std::abs(s.sample_spacing - 0.01) < 1e-15);
}

TEST_CASE("measure comparison finds consistent death times on a thermal run") {
    const SymmetricParams p(1.0, 0.25);
    const Trajectory traj =
        trajectory_analytic(density_from_pure(noon(M_SQRT1_2)), p, TimeGrid(0.0, 10.0, 2000));
    const ComparisonSummary s = measure_comparison(traj);
    REQUIRE(s.death_time_concurrence.has_value());
    REQUIRE(s.death_time_log_negativity.has_value());
    CHECK(std::abs(*s.death_time_concurrence - *s.death_time_log_negativity) <=
          2.0 * s.sample_spacing);
    const EsdReport r = esd_time(noon(M_SQRT1_2), p, 10.0, MeasureKind::concurrence);
    REQUIRE(r.death_time.has_value());
    CHECK(std::abs(*s.death_time_concurrence - *r.death_time) <= 2.0 * s.sample_spacing);
}

TEST_CASE("measure comparison on a constant separable trajectory") {
    const SymmetricParams p(1.0, 0.5);
    const Trajectory traj = trajectory_analytic(steady_state(p), p, TimeGrid(0.0, 2.0, 20));
    const ComparisonSummary s = measure_comparison(traj);
    CHECK(s.max_abs_diff == 0.0);
    CHECK(s.fraction_n_geq_c == 1.0);
    REQUIRE(s.death_time_concurrence.has_value());
    CHECK(*s.death_time_concurrence == 0.0);
}
