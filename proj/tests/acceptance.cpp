// End-to-end acceptance checks for the release gate. Each criterion prints
// exactly one PASS/FAIL line; the process exits non-zero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <vector>

#include "pariscba/cba.hpp"
#include "pariscba/climate.hpp"
#include "pariscba/costs.hpp"
#include "pariscba/fixtures.hpp"
#include "pariscba/impacts.hpp"
#include "pariscba/kaya.hpp"

using namespace pariscba;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool ok,
            const std::string& detail) {
    std::printf("%s  criterion %d: %-24s %s\n", ok ? "PASS" : "FAIL", criterion,
                label.c_str(), detail.c_str());
    if (!ok) ++failures;
}

bool within(double v, double target, double tol) {
    return std::abs(v - target) <= tol;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

// criterion 1: calibrated warming of the two baselines in 2100
void temperature_anchors() {
    auto cal = fixtures::calibrated_params();
    auto hot = climate::temperature_path(fixtures::ssp585_like(), cal.carbon, cal.climate);
    auto mild = climate::temperature_path(fixtures::ssp370_like(), cal.carbon, cal.climate);
    const double t585 = hot.temperature_at(2100);
    const double t370 = mild.temperature_at(2100);
    const bool ok = within(t585, 4.8, 0.1) && within(t370, 3.9, 0.1);
    report(1, "temperature anchors", ok,
           "T2100 hot=" + fmt(t585) + " (4.8±0.1), mild=" + fmt(t370) + " (3.9±0.1)");
}

// criterion 2: avoided damages in 2100 for the four baseline/target pairs
void benefit_anchors() {
    auto cal = fixtures::calibrated_params();
    auto model = impacts::default_damage_function();
    auto t = [&](const EmissionScenario& s) {
        return climate::temperature_path(s, cal.carbon, cal.climate).temperature_at(2100);
    };
    const double hot = t(fixtures::ssp585_like());
    const double mild = t(fixtures::ssp370_like());
    const double p20 = t(fixtures::paris20());
    const double p15 = t(fixtures::paris15());

    const double b_hot_20 = impacts::damage(hot, model) - impacts::damage(p20, model);
    const double b_hot_15 = impacts::damage(hot, model) - impacts::damage(p15, model);
    const double b_mild_20 = impacts::damage(mild, model) - impacts::damage(p20, model);
    const double b_mild_15 = impacts::damage(mild, model) - impacts::damage(p15, model);

    const bool ok = within(b_hot_20, 2.8, 0.15) && within(b_hot_15, 3.1, 0.15) &&
                    within(b_mild_20, 1.8, 0.3) && within(b_mild_15, 2.2, 0.3);
    report(2, "benefit anchors", ok,
           "2100 %GDP hot/2.0=" + fmt(b_hot_20) + " (2.8±0.15), hot/1.5=" + fmt(b_hot_15) +
               " (3.1±0.15), mild/2.0=" + fmt(b_mild_20) + " (1.8±0.3), mild/1.5=" +
               fmt(b_mild_15) + " (2.2±0.3)");
}

// criterion 3: mitigation cost anchors
void cost_anchors() {
    auto p20 = costs::cost_path(costs::cost_model_20(), 2020, 2100);
    auto p15 = costs::cost_path(costs::cost_model_15(), 2020, 2100);
    const double c20_2100 = p20.back();
    const double c15_2100 = p15.back();
    const double c15_2030 = p15[10];
    const bool ok = within(c20_2100, 3.9, 0.1) && within(c15_2100, 5.6, 0.1) &&
                    c15_2030 >= 0.5 && c15_2030 <= 6.0;
    report(3, "cost anchors", ok,
           "2100 %GDP 2.0C=" + fmt(c20_2100) + " (3.9±0.1), 1.5C=" + fmt(c15_2100) +
               " (5.6±0.1); 1.5C 2030=" + fmt(c15_2030) + " (in [0.5, 6.0])");
}

// criterion 4: central net benefits negative every year, NPV negative at
// discount rates 0/1/3/5 %/yr, for both targets
void sign_result() {
    auto cal = fixtures::calibrated_params();
    auto baseline = fixtures::ssp585_like();
    bool ok = true;
    std::string detail;
    for (double target : {2.0, 1.5}) {
        cba::MonteCarloConfig cfg;
        auto policy = target == 2.0 ? fixtures::paris20() : fixtures::paris15();
        cfg.baseline = &baseline;
        cfg.policy = &policy;
        cfg.carbon = cal.carbon;
        cfg.climate = cal.climate;
        cfg.damage = impacts::default_damage_function();
        cfg.cost_model = costs::cost_model_for_target(target);

        auto det = cba::deterministic_cba(cfg);
        // both paths are pinned to zero in the 2020 base year, so the first
        // entry is exactly zero; every later year must be strictly negative
        for (std::size_t i = 0; i < det.net.central.size(); ++i)
            ok = ok && (det.years[i] == 2020 ? det.net.central[i] <= 0.0
                                             : det.net.central[i] < 0.0);
        for (double rate : {0.0, 0.01, 0.03, 0.05}) {
            const double v = cba::npv(det.years, det.net.central, baseline.gdp, rate);
            ok = ok && v < 0.0;
            if (rate == 0.03)
                detail += (detail.empty() ? std::string("NPV@3% ") : std::string(", ")) +
                          (target == 2.0 ? "2.0C=" : "1.5C=") + fmt(v);
        }
    }
    report(4, "sign of net benefits", ok, detail + " trillion USD, all years/rates < 0");
}

// criterion 5: benefit band wider than cost band at 2100; net-benefit p95
// positive from 2070 on (both targets, 2000 draws each)
void uncertainty_ordering() {
    auto cal = fixtures::calibrated_params();
    auto baseline = fixtures::ssp585_like();
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (double target : {2.0, 1.5}) {
        cba::MonteCarloConfig cfg;
        auto policy = target == 2.0 ? fixtures::paris20() : fixtures::paris15();
        cfg.baseline = &baseline;
        cfg.policy = &policy;
        cfg.carbon = cal.carbon;
        cfg.climate = cal.climate;
        cfg.damage = impacts::default_damage_function();
        cfg.cost_model = costs::cost_model_for_target(target);
        cfg.n_draws = 2000;
        cfg.seed = 20260823;

        auto mc = cba::monte_carlo(cfg);
        const std::size_t last = mc.years.size() - 1;
        const double bband = mc.benefit.p[3][last] - mc.benefit.p[1][last];
        const double cband = mc.cost.p[3][last] - mc.cost.p[1][last];
        ok = ok && bband > cband;
        for (std::size_t i = 0; i < mc.years.size(); ++i)
            if (mc.years[i] >= 2070) ok = ok && mc.net.p[4][i] > 0.0;
        if (target == 2.0)
            detail = "2.0C bands at 2100: benefit " + fmt(bband) + " vs cost " + fmt(cband);
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start).count();
    ok = ok && secs < 30.0;
    report(5, "uncertainty ordering", ok,
           detail + "; net p95 > 0 from 2070 on; " + fmt(secs) + " s (< 30)");
}

// criterion 6: decomposition arithmetic on the historical fixture
void kaya_arithmetic() {
    bool ok = kaya::required_intensity_decline(-15.0, 2.5) == -17.5;

    auto s = fixtures::historical_kaya();
    auto r = kaya::decompose(s, {2011, 2021});
    ok = ok && within(r.population_growth, 1.1, 0.1) &&
         within(r.income_per_capita_growth, 1.5, 0.1) &&
         within(r.energy_intensity_growth, -1.1, 0.1) &&
         within(r.carbon_intensity_growth, -0.8, 0.1) &&
         within(r.emissions_growth, 0.7, 0.1);

    double e = 35.0;
    for (int i = 0; i < 28; ++i) e *= 0.85;
    ok = ok && e < 0.5;

    report(6, "kaya arithmetic", ok,
           "intensity decline -17.5 exact; 2011-2021 rates " + fmt(r.population_growth) +
               "/" + fmt(r.income_per_capita_growth) + "/" + fmt(r.energy_intensity_growth) +
               "/" + fmt(r.carbon_intensity_growth) + " ±0.1; 28y decline ends at " +
               fmt(e) + " GtCO2");
}

// criterion 7: property suite with no tuned numbers
void property_suite() {
    bool ok = true;
    std::string why;
    auto fail = [&](const std::string& what) {
        ok = false;
        if (!why.empty()) why += "; ";
        why += what;
    };

    climate::CarbonCycleParams cp;
    double share_sum = 0.0;
    for (double a : cp.box_shares) share_sum += a;
    if (std::abs(share_sum - 1.0) > 1e-12) fail("box shares");

    {  // pulse airborne fraction vs the closed-form impulse response
        auto st = climate::preindustrial_state(2020, cp);
        st = climate::step_concentration(st, 100.0, cp);
        for (int n = 0; n < 150; ++n) {
            double expect = 0.0;
            for (int b = 0; b < climate::kNumBoxes; ++b) {
                const double tau = cp.box_lifetimes[b];
                expect += 100.0 * cp.box_shares[b] *
                          (std::isinf(tau) ? 1.0 : std::exp(-double(n) / tau));
            }
            if (std::abs(st.total_inventory() - expect) > 1e-10 * expect) {
                fail("airborne fraction");
                break;
            }
            st = climate::step_concentration(st, 0.0, cp);
        }
    }

    {  // constant doubling forcing equilibrates at ecs
        climate::ClimateParams kp;
        auto st = climate::preindustrial_state(2020, cp);
        for (int i = 0; i < 5000; ++i) st = climate::step_temperature(st, kp.f2x, kp);
        if (std::abs(st.temperature - kp.ecs) > 1e-6) fail("ecs equilibrium");
    }

    {  // weighted fit vs a direct normal-equations solve
        std::mt19937 gen(777);
        std::uniform_real_distribution<double> temp(0.5, 6.0), w(0.2, 1.0);
        std::normal_distribution<double> noise(0.0, 0.3);
        for (int inst = 0; inst < 20 && ok; ++inst) {
            std::vector<impacts::ImpactEstimate> est;
            double sxx = 0.0, sxy = 0.0;
            for (int i = 0; i < 8; ++i) {
                impacts::ImpactEstimate e;
                e.paper_id = "x";
                e.warming_c = temp(gen);
                e.impact_pct_gdp = -(0.5 * e.warming_c + noise(gen));
                e.weight = w(gen);
                est.push_back(e);
                sxx += e.weight * e.warming_c * e.warming_c;
                sxy += e.weight * e.warming_c * -e.impact_pct_gdp;
            }
            auto fit = impacts::fit_impact_function(est, impacts::Form::linear);
            if (std::abs(fit.params[0] - sxy / sxx) > 1e-8) fail("least squares");
        }
    }

    {  // NPV of a constant path vs the geometric series
        std::vector<int> years;
        std::vector<double> path, gdp;
        for (int y = 2020; y <= 2100; ++y) {
            years.push_back(y);
            path.push_back(2.0);
            gdp.push_back(50.0);
        }
        const double q = 1.0 / 1.04;
        const double closed = (1.0 - std::pow(q, 81)) / (1.0 - q);
        if (std::abs(cba::npv(years, path, gdp, 0.04) - closed) > 1e-9 * closed)
            fail("npv closed form");
    }

    {  // risk aversion never raises the certainty equivalent above the mean
        std::mt19937 gen(31);
        std::lognormal_distribution<double> dist(0.0, 0.5);
        for (int set = 0; set < 100 && ok; ++set) {
            std::vector<double> s;
            for (int i = 0; i < 30; ++i) s.push_back(dist(gen));
            const double mean = cba::certainty_equivalent(s, 0.0);
            for (double eta : {0.5, 1.0, 2.0})
                if (cba::certainty_equivalent(s, eta) > mean + 1e-12) fail("jensen");
        }
    }

    {  // Monte Carlo reproducibility across thread counts
        auto cal = fixtures::calibrated_params();
        auto baseline = fixtures::ssp585_like();
        auto policy = fixtures::paris20();
        cba::MonteCarloConfig cfg;
        cfg.baseline = &baseline;
        cfg.policy = &policy;
        cfg.carbon = cal.carbon;
        cfg.climate = cal.climate;
        cfg.damage = impacts::default_damage_function();
        cfg.cost_model = costs::cost_model_20();
        cfg.n_draws = 200;
        cfg.seed = 9001;
        cfg.threads = 1;
        auto a = cba::monte_carlo(cfg);
        cfg.threads = 5;
        auto b = cba::monte_carlo(cfg);
        if (a.npv_draws != b.npv_draws || a.net.p[2] != b.net.p[2])
            fail("mc reproducibility");
    }

    report(7, "property suite", ok, ok ? "all seven invariants hold" : why);
}

}  // namespace

int main() {
    try {
        temperature_anchors();
        benefit_anchors();
        cost_anchors();
        sign_result();
        uncertainty_ordering();
        kaya_arithmetic();
        property_suite();
    } catch (const std::exception& e) {
        std::printf("FAIL  unexpected exception: %s\n", e.what());
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
