#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "pariscba/climate.hpp"
#include "pariscba/fixtures.hpp"

using namespace pariscba;
using namespace pariscba::climate;

namespace {

// closed-form airborne inventory of a single pulse after n annual steps
double pulse_inventory(double pulse, int n, const CarbonCycleParams& p) {
    double total = 0.0;
    for (int b = 0; b < kNumBoxes; ++b) {
        double decay = std::isinf(p.box_lifetimes[b])
                           ? 1.0
                           : std::exp(-double(n) / p.box_lifetimes[b]);
        total += pulse * p.box_shares[b] * decay;
    }
    return total;
}

}  // namespace

TEST_CASE("box shares sum to one and invariants hold") {
    CarbonCycleParams p;
    double sum = 0.0;
    for (double a : p.box_shares) sum += a;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_NOTHROW(p.check_invariants());

    p.box_shares[0] = 0.5;
    CHECK_THROWS_AS(p.check_invariants(), std::runtime_error);
}

TEST_CASE("pulse airborne fraction matches the impulse-response closed form") {
    CarbonCycleParams p;
    const double pulse = 100.0;  // GtCO2
    ClimateState s = preindustrial_state(2020, p);
    s = step_concentration(s, pulse, p);
    for (int n = 1; n <= 200; ++n) {
        CHECK(s.total_inventory() ==
              doctest::Approx(pulse_inventory(pulse, n - 1, p)).epsilon(1e-10));
        if (n == 200) break;
        s = step_concentration(s, 0.0, p);
    }
    // the permanent box keeps at least its share forever
    CHECK(s.total_inventory() > pulse * p.box_shares[0]);
}

TEST_CASE("concentration converts inventory at 7.81 GtCO2/ppm") {
    CarbonCycleParams p;
    ClimateState s = preindustrial_state(2020, p);
    s = step_concentration(s, p.gtco2_per_ppm, p);
    CHECK(s.concentration == doctest::Approx(p.preindustrial_ppm + 1.0).epsilon(1e-12));
}

TEST_CASE("forcing is f2x at doubled CO2 and zero at pre-industrial") {
    CarbonCycleParams cp;
    ClimateParams kp;
    CHECK(forcing(cp.preindustrial_ppm, cp, kp, 0.0) == doctest::Approx(0.0));
    CHECK(forcing(2.0 * cp.preindustrial_ppm, cp, kp, 0.0) ==
          doctest::Approx(kp.f2x).epsilon(1e-12));
    CHECK(forcing(cp.preindustrial_ppm, cp, kp, 0.7) == doctest::Approx(0.7));
}

TEST_CASE("constant forcing equilibrates at ecs within 1e-6") {
    CarbonCycleParams cp;
    ClimateParams kp;  // ecs 3.0, lag 40
    ClimateState s = preindustrial_state(2020, cp);
    for (int i = 0; i < 4000; ++i) s = step_temperature(s, kp.f2x, kp);
    CHECK(s.temperature == doctest::Approx(kp.ecs).epsilon(1e-6));
}

TEST_CASE("step response reaches 1 - 1/e of equilibrium after lag years") {
    CarbonCycleParams cp;
    ClimateParams kp;
    ClimateState s = preindustrial_state(2020, cp);
    for (int i = 0; i < int(kp.lag_years); ++i) s = step_temperature(s, kp.f2x, kp);
    CHECK(s.temperature ==
          doctest::Approx(kp.ecs * (1.0 - std::exp(-1.0))).epsilon(0.02));
}

TEST_CASE("initial 2020 state matches the observed anchors") {
    CarbonCycleParams p;
    auto s = initial_state_2020(p);
    CHECK(s.year == 2020);
    CHECK(s.concentration == doctest::Approx(412.0).epsilon(1e-9));
    CHECK(s.temperature == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(s.total_inventory() ==
          doctest::Approx((412.0 - p.preindustrial_ppm) * p.gtco2_per_ppm));
}

TEST_CASE("higher emissions never produce lower warming") {
    CarbonCycleParams cp;
    ClimateParams kp;
    auto lo = fixtures::ssp370_like();
    auto hi = fixtures::ssp585_like();
    auto plo = temperature_path(lo, cp, kp);
    auto phi = temperature_path(hi, cp, kp);
    REQUIRE(plo.years.size() == phi.years.size());
    for (std::size_t i = 0; i < plo.years.size(); ++i)
        CHECK(phi.temperature[i] >= plo.temperature[i]);
}

TEST_CASE("temperature_path row 0 is the initial state") {
    CarbonCycleParams cp;
    ClimateParams kp;
    auto path = temperature_path(fixtures::ssp585_like(), cp, kp);
    CHECK(path.years.front() == 2020);
    CHECK(path.temperature.front() == doctest::Approx(1.2));
    CHECK(path.years.back() == 2100);
    CHECK(path.temperature_at(2100) == path.temperature.back());
    CHECK(path.peak_temperature() == path.temperature.back());
}

TEST_CASE("calibrate hits the bundled anchors and keeps defaults when met") {
    auto anchors = fixtures::default_anchors();
    auto r = climate::calibrate(anchors.anchors);
    for (double res : r.residuals_c) CHECK(std::abs(res) <= 0.1);
    CHECK(r.diagnostics.empty());
    CHECK(r.climate.ecs > 0.5);
    CHECK(r.climate.ecs < 8.0);

    // anchors already satisfied by the defaults: returned unchanged
    ClimateParams defaults;
    auto base = temperature_path(*anchors.anchors[0].scenario, r.carbon, defaults);
    std::vector<Anchor> easy{{anchors.anchors[0].scenario, 2100, base.temperature_at(2100)}};
    auto rd = climate::calibrate(easy);
    CHECK(rd.climate.ecs == defaults.ecs);
    CHECK(rd.climate.lag_years == defaults.lag_years);
    CHECK(rd.iterations == 0);
}

TEST_CASE("calibrate reports failure for unreachable anchors") {
    auto anchors = fixtures::default_anchors();
    std::vector<Anchor> silly{{anchors.anchors[0].scenario, 2100, 0.1}};
    CHECK_THROWS_AS(climate::calibrate(silly), CalibrationError);
    try {
        climate::calibrate(silly);
    } catch (const CalibrationError& e) {
        CHECK_FALSE(e.best.diagnostics.empty());
        CHECK(std::abs(e.best.residuals_c[0]) > 0.1);
    }
}

TEST_CASE("invert_emissions lands the peak just under the ceiling") {
    auto cal = fixtures::calibrated_params();
    auto base = fixtures::ssp585_like();
    auto bent = invert_emissions(base, 2.0, cal.carbon, cal.climate);
    auto path = temperature_path(bent, cal.carbon, cal.climate);
    CHECK(path.peak_temperature() <= 2.0);
    CHECK(path.peak_temperature() >= 1.95);
    // pre-2025 emissions untouched
    for (int y = 2020; y <= 2025; ++y)
        CHECK(bent.emissions[bent.index_of(y)] == base.emissions[base.index_of(y)]);
}

TEST_CASE("invert_emissions returns compliant scenarios unchanged") {
    auto cal = fixtures::calibrated_params();
    auto policy = fixtures::paris20();
    auto peak = temperature_path(policy, cal.carbon, cal.climate).peak_temperature();
    auto same = invert_emissions(policy, peak + 0.2, cal.carbon, cal.climate);
    CHECK(same.emissions == policy.emissions);
}

TEST_CASE("invert_emissions reports the minimum achievable peak when infeasible") {
    auto cal = fixtures::calibrated_params();
    auto base = fixtures::ssp585_like();
    CHECK_THROWS_WITH_AS(invert_emissions(base, 0.5, cal.carbon, cal.climate),
                         doctest::Contains("peak"), std::runtime_error);
}

TEST_CASE("climate CSV has one row per year plus header") {
    auto cal = fixtures::calibrated_params();
    auto path = temperature_path(fixtures::paris15(), cal.carbon, cal.climate);
    auto text = write_climate_csv(path);
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == path.years.size() + 1);
    CHECK(text.rfind("year,concentration_ppm,forcing_wm2,temperature_c", 0) == 0);
}
