#ifndef PARISCBA_CLIMATE_HPP
#define PARISCBA_CLIMATE_HPP

#include <array>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "pariscba/scenario.hpp"

namespace pariscba::climate {

inline constexpr int kNumBoxes = 5;

/// Impulse-response carbon cycle: emissions split across parallel boxes,
/// each decaying exponentially; box 0 is permanent (infinite lifetime).
struct CarbonCycleParams {
    std::array<double, kNumBoxes> box_shares{0.13, 0.20, 0.32, 0.25, 0.10};
    // e-folding times in years; infinity marks the permanent box
    std::array<double, kNumBoxes> box_lifetimes{
        std::numeric_limits<double>::infinity(), 363.0, 74.0, 17.0, 2.0};
    double preindustrial_ppm = 275.0;
    double gtco2_per_ppm = 7.81;

    void check_invariants() const;  // shares sum to 1, lifetimes > 0
};

/// First-order lag temperature response.
struct ClimateParams {
    double ecs = 3.0;        // degC per CO2 doubling
    double lag_years = 40.0; // e-folding time of the temperature response
    double f2x = 3.71;       // W/m2 per doubling

    void check_invariants() const;
};

struct ClimateState {
    int year = 2020;
    std::array<double, kNumBoxes> box_inventories{};  // GtCO2
    double concentration = 275.0;                     // ppm
    double temperature = 0.0;                         // degC above pre-industrial

    double total_inventory() const;
};

/// One annual carbon-cycle step: box_i <- box_i * exp(-1/tau_i) + a_i * E,
/// permanent box undecayed; concentration recomputed from the inventories.
ClimateState step_concentration(const ClimateState& state, double emissions_gtco2,
                                const CarbonCycleParams& p);

/// Logarithmic CO2 forcing plus exogenous non-CO2 forcing (W/m2).
double forcing(double concentration_ppm, const CarbonCycleParams& cp,
               const ClimateParams& p, double exo_wm2);

/// One annual temperature step: T <- T + (1/lag) * (ecs * F / f2x - T).
ClimateState step_temperature(const ClimateState& state, double forcing_wm2,
                              const ClimateParams& p);

/// Pre-industrial equilibrium (empty boxes, zero anomaly) at a given year.
ClimateState preindustrial_state(int year, const CarbonCycleParams& p);

/// Year-2020 state: ~412 ppm, 1.2 degC anomaly. The legacy burden is split
/// across boxes at the quasi-equilibrium of a 2%/yr exponential emissions
/// ramp, so that the fast boxes carry realistically little of it.
ClimateState initial_state_2020(const CarbonCycleParams& p);

/// Per-year concentration/forcing/temperature along a scenario.
/// init.year must equal the first scenario year; row 0 is the initial state.
struct ClimatePath {
    std::vector<int> years;
    std::vector<double> concentration;  // ppm
    std::vector<double> forcing;        // W/m2
    std::vector<double> temperature;    // degC

    double temperature_at(int year) const;
    double peak_temperature() const;
};

ClimatePath temperature_path(const EmissionScenario& s, const CarbonCycleParams& cp,
                             const ClimateParams& kp, const ClimateState& init);

/// Convenience overload starting from initial_state_2020 (scenario must
/// start in 2020).
ClimatePath temperature_path(const EmissionScenario& s, const CarbonCycleParams& cp,
                             const ClimateParams& kp);

struct Anchor {
    const EmissionScenario* scenario;
    int year;
    double target_c;
};

struct CalibrationResult {
    CarbonCycleParams carbon;
    ClimateParams climate;
    std::vector<double> residuals_c;  // signed, per anchor
    int iterations = 0;
    std::vector<std::string> diagnostics;  // non-empty if any |residual| > 0.1
};

/// Thrown when the coordinate search cannot bring every anchor residual
/// within tolerance; carries the best parameters found.
struct CalibrationError : std::runtime_error {
    CalibrationResult best;
    CalibrationError(const std::string& what, CalibrationResult b)
        : std::runtime_error(what), best(std::move(b)) {}
};

/// Coordinate search over (ecs, lag_years) minimizing squared anchor error,
/// holding the carbon-box structure fixed. Residual tolerance 0.1 degC.
CalibrationResult calibrate(const std::vector<Anchor>& anchors,
                            const CarbonCycleParams& cp = {},
                            const ClimateParams& initial = {});

/// Bisection on a constant post-2025 emission decline rate (0-30 %/yr,
/// approaching `floor_gtco2` net-negative emissions) so that the peak
/// temperature lands in [ceiling - 0.05, ceiling]. Returns the base
/// scenario unchanged when it already respects the ceiling.
/// Throws std::runtime_error reporting the minimum achievable peak when
/// the ceiling is infeasible.
EmissionScenario invert_emissions(const EmissionScenario& base, double ceiling_c,
                                  const CarbonCycleParams& cp, const ClimateParams& kp,
                                  double floor_gtco2 = -20.0);

/// Serialize a path as `year,concentration_ppm,forcing_wm2,temperature_c`.
std::string write_climate_csv(const ClimatePath& path);

}  // namespace pariscba::climate

#endif
