#include "pariscba/climate.hpp"

#include <algorithm>
#include <cmath>

#include "pariscba/csv.hpp"

namespace pariscba::climate {

void CarbonCycleParams::check_invariants() const {
    double sum = 0.0;
    for (double a : box_shares) sum += a;
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::runtime_error("carbon-cycle box shares must sum to 1");
    for (double tau : box_lifetimes)
        if (!(tau > 0.0)) throw std::runtime_error("box lifetimes must be positive");
    if (!(preindustrial_ppm > 0.0) || !(gtco2_per_ppm > 0.0))
        throw std::runtime_error("carbon-cycle scale parameters must be positive");
}

void ClimateParams::check_invariants() const {
    if (!(ecs > 0.0) || !(lag_years > 0.0) || !(f2x > 0.0))
        throw std::runtime_error("climate parameters must be positive");
}

double ClimateState::total_inventory() const {
    double sum = 0.0;
    for (double v : box_inventories) sum += v;
    return sum;
}

namespace {

double concentration_from(const std::array<double, kNumBoxes>& inv,
                          const CarbonCycleParams& p) {
    double sum = 0.0;
    for (double v : inv) sum += v;
    return p.preindustrial_ppm + sum / p.gtco2_per_ppm;
}

}  // namespace

ClimateState step_concentration(const ClimateState& state, double emissions_gtco2,
                                const CarbonCycleParams& p) {
    ClimateState next = state;
    next.year = state.year + 1;
    for (int i = 0; i < kNumBoxes; ++i) {
        const double tau = p.box_lifetimes[i];
        const double decay = std::isinf(tau) ? 1.0 : std::exp(-1.0 / tau);
        next.box_inventories[i] =
            state.box_inventories[i] * decay + p.box_shares[i] * emissions_gtco2;
    }
    next.concentration = concentration_from(next.box_inventories, p);
    return next;
}

double forcing(double concentration_ppm, const CarbonCycleParams& cp,
               const ClimateParams& p, double exo_wm2) {
    if (!(concentration_ppm > 0.0))
        throw std::domain_error("forcing: concentration must be positive");
    return p.f2x * std::log(concentration_ppm / cp.preindustrial_ppm) / std::log(2.0) +
           exo_wm2;
}

ClimateState step_temperature(const ClimateState& state, double forcing_wm2,
                              const ClimateParams& p) {
    ClimateState next = state;
    const double equilibrium = p.ecs * forcing_wm2 / p.f2x;
    next.temperature = state.temperature + (equilibrium - state.temperature) / p.lag_years;
    return next;
}

ClimateState preindustrial_state(int year, const CarbonCycleParams& p) {
    ClimateState s;
    s.year = year;
    s.box_inventories.fill(0.0);
    s.concentration = p.preindustrial_ppm;
    s.temperature = 0.0;
    return s;
}

ClimateState initial_state_2020(const CarbonCycleParams& p) {
    // Quasi-equilibrium box split under an exponential emissions ramp:
    // inventory_i proportional to a_i / (1 - exp(-(g + 1/tau_i))).
    constexpr double kRampRate = 0.02;
    constexpr double kConcentration2020 = 412.0;
    constexpr double kTemperature2020 = 1.2;

    std::array<double, kNumBoxes> w{};
    double wsum = 0.0;
    for (int i = 0; i < kNumBoxes; ++i) {
        const double tau = p.box_lifetimes[i];
        const double k = kRampRate + (std::isinf(tau) ? 0.0 : 1.0 / tau);
        w[i] = p.box_shares[i] / (1.0 - std::exp(-k));
        wsum += w[i];
    }
    const double burden = (kConcentration2020 - p.preindustrial_ppm) * p.gtco2_per_ppm;

    ClimateState s;
    s.year = 2020;
    for (int i = 0; i < kNumBoxes; ++i) s.box_inventories[i] = burden * w[i] / wsum;
    s.concentration = concentration_from(s.box_inventories, p);
    s.temperature = kTemperature2020;
    return s;
}

double ClimatePath::temperature_at(int year) const {
    if (years.empty() || year < years.front() || year > years.back())
        throw std::runtime_error("climate path does not cover year " + std::to_string(year));
    return temperature[static_cast<std::size_t>(year - years.front())];
}

double ClimatePath::peak_temperature() const {
    return *std::max_element(temperature.begin(), temperature.end());
}

ClimatePath temperature_path(const EmissionScenario& s, const CarbonCycleParams& cp,
                             const ClimateParams& kp, const ClimateState& init) {
    cp.check_invariants();
    kp.check_invariants();
    if (init.year != s.first_year())
        throw std::runtime_error("temperature_path: initial state year " +
                                 std::to_string(init.year) + " != first scenario year " +
                                 std::to_string(s.first_year()));
    ClimatePath path;
    path.years.reserve(s.size());
    path.concentration.reserve(s.size());
    path.forcing.reserve(s.size());
    path.temperature.reserve(s.size());

    ClimateState state = init;
    path.years.push_back(state.year);
    path.concentration.push_back(state.concentration);
    path.forcing.push_back(forcing(state.concentration, cp, kp, s.exo_forcing.front()));
    path.temperature.push_back(state.temperature);

    for (std::size_t i = 1; i < s.size(); ++i) {
        state = step_concentration(state, s.emissions[i - 1], cp);
        const double f = forcing(state.concentration, cp, kp, s.exo_forcing[i]);
        state = step_temperature(state, f, kp);
        path.years.push_back(state.year);
        path.concentration.push_back(state.concentration);
        path.forcing.push_back(f);
        path.temperature.push_back(state.temperature);
    }
    return path;
}

ClimatePath temperature_path(const EmissionScenario& s, const CarbonCycleParams& cp,
                             const ClimateParams& kp) {
    ClimateState init = initial_state_2020(cp);
    init.year = s.first_year();
    return temperature_path(s, cp, kp, init);
}

namespace {

double anchor_sse(const std::vector<Anchor>& anchors, const CarbonCycleParams& cp,
                  const ClimateParams& kp, std::vector<double>* residuals = nullptr) {
    if (residuals) residuals->clear();
    double sse = 0.0;
    for (const auto& a : anchors) {
        ClimatePath p = temperature_path(*a.scenario, cp, kp);
        const double r = p.temperature_at(a.year) - a.target_c;
        if (residuals) residuals->push_back(r);
        sse += r * r;
    }
    return sse;
}

// Golden-section minimization of a unimodal 1-D objective.
template <typename F>
double golden_min(F f, double lo, double hi, int iters = 60) {
    constexpr double phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - phi * (b - a); f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + phi * (b - a); f2 = f(x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

}  // namespace

CalibrationResult calibrate(const std::vector<Anchor>& anchors,
                            const CarbonCycleParams& cp, const ClimateParams& initial) {
    if (anchors.empty()) throw std::runtime_error("calibrate: need at least one anchor");
    constexpr double kTolC = 0.1;
    constexpr double kEcsLo = 0.5, kEcsHi = 8.0;
    constexpr double kLagLo = 2.0, kLagHi = 120.0;
    constexpr int kMaxSweeps = 40;

    CalibrationResult res;
    res.carbon = cp;
    res.climate = initial;

    // Defaults already satisfying every anchor are returned untouched.
    double sse = anchor_sse(anchors, cp, res.climate, &res.residuals_c);
    bool ok = true;
    for (double r : res.residuals_c) ok = ok && std::abs(r) <= kTolC;
    if (ok) return res;

    // (ecs, lag) trade off along a narrow valley: for every lag there is an
    // ecs that nearly nails the anchors. Search the lag axis with the ecs
    // profiled out, which plain coordinate descent cannot traverse.
    ClimateParams p = initial;
    auto best_ecs_for = [&](double lag) {
        ClimateParams q = initial;
        q.lag_years = lag;
        return golden_min(
            [&](double ecs) {
                q.ecs = ecs;
                return anchor_sse(anchors, cp, q);
            },
            kEcsLo, kEcsHi);
    };
    auto profile_sse = [&](double lag) {
        ++res.iterations;
        ClimateParams q = initial;
        q.lag_years = lag;
        q.ecs = best_ecs_for(lag);
        return anchor_sse(anchors, cp, q);
    };
    p.lag_years = golden_min(profile_sse, kLagLo, kLagHi, kMaxSweeps + 20);
    p.ecs = best_ecs_for(p.lag_years);

    res.climate = p;
    sse = anchor_sse(anchors, cp, p, &res.residuals_c);
    ok = true;
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        if (std::abs(res.residuals_c[i]) > kTolC) {
            ok = false;
            res.diagnostics.push_back(
                "anchor (" + anchors[i].scenario->name + ", " +
                std::to_string(anchors[i].year) + ", " +
                csv::format_value(anchors[i].target_c) + ") residual " +
                csv::format_value(res.residuals_c[i]) + " degC exceeds 0.1");
        }
    }
    if (!ok)
        throw CalibrationError(
            "calibrate: no parameter pair meets every anchor within 0.1 degC "
            "(best ecs=" + csv::format_value(p.ecs) +
            ", lag=" + csv::format_value(p.lag_years) + ")",
            res);
    return res;
}

EmissionScenario invert_emissions(const EmissionScenario& base, double ceiling_c,
                                  const CarbonCycleParams& cp, const ClimateParams& kp,
                                  double floor_gtco2) {
    if (floor_gtco2 < -20.0)
        throw std::runtime_error("invert_emissions: floor below -20 GtCO2/yr");
    const double base_peak = temperature_path(base, cp, kp).peak_temperature();
    if (base_peak <= ceiling_c) return base;

    const int pivot_year = 2025;
    if (base.first_year() > pivot_year || base.last_year() <= pivot_year)
        throw std::runtime_error("invert_emissions: scenario must span 2025");
    const double e_pivot = base.emissions[base.index_of(pivot_year)];

    auto with_decline = [&](double rate_pct) {
        EmissionScenario s = base;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const int dt = s.years[i] - pivot_year;
            if (dt > 0)
                s.emissions[i] = (e_pivot - floor_gtco2) *
                                     std::pow(1.0 - rate_pct / 100.0, dt) +
                                 floor_gtco2;
        }
        return s;
    };
    auto peak_at = [&](double rate_pct) {
        return temperature_path(with_decline(rate_pct), cp, kp).peak_temperature();
    };

    const double min_peak = peak_at(30.0);
    if (min_peak > ceiling_c)
        throw std::runtime_error(
            "invert_emissions: ceiling " + csv::format_value(ceiling_c) +
            " degC infeasible; minimum achievable peak is " + csv::format_value(min_peak) +
            " degC");
    if (peak_at(0.0) <= ceiling_c) {
        EmissionScenario s = with_decline(0.0);
        s.name = base.name + "_cap";
        return s;
    }

    double lo = 0.0, hi = 30.0;  // peak is decreasing in the decline rate
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double peak = peak_at(mid);
        if (peak > ceiling_c) lo = mid;
        else if (peak < ceiling_c - 0.05) hi = mid;
        else {
            EmissionScenario s = with_decline(mid);
            s.name = base.name + "_cap";
            return s;
        }
    }
    throw std::runtime_error("invert_emissions: bisection failed to land in the window");
}

std::string write_climate_csv(const ClimatePath& path) {
    std::string out = "year,concentration_ppm,forcing_wm2,temperature_c\n";
    for (std::size_t i = 0; i < path.years.size(); ++i) {
        out += std::to_string(path.years[i]);
        out += "," + csv::format_value(path.concentration[i]);
        out += "," + csv::format_value(path.forcing[i]);
        out += "," + csv::format_value(path.temperature[i]);
        out += "\n";
    }
    return out;
}

}  // namespace pariscba::climate
