#ifndef PARISCBA_KAYA_HPP
#define PARISCBA_KAYA_HPP

#include <span>

#include "pariscba/scenario.hpp"

namespace pariscba::kaya {

/// Average-annual-growth convention. Continuous (log) rates make the
/// Kaya identity exactly additive; geometric rates are offered for
/// comparison against published decadal tables.
enum class Convention { continuous, geometric };

struct Period {
    int start;
    int end;  // start < end, both covered by the series
};

/// Growth rates in %/yr over a period. In log terms
/// emissions_growth == population + income_per_capita + energy_intensity
/// + carbon_intensity exactly (continuous convention).
struct KayaRates {
    double population_growth = 0.0;
    double income_per_capita_growth = 0.0;
    double energy_intensity_growth = 0.0;
    double carbon_intensity_growth = 0.0;
    double emissions_growth = 0.0;
    Period period{0, 0};
};

/// 100 * ln(v_end/v_start) / (end-start) for the continuous convention,
/// 100 * ((v_end/v_start)^(1/(end-start)) - 1) for the geometric one.
/// Throws std::domain_error on non-positive values at the period endpoints.
double growth_rate(std::span<const double> series, std::span<const int> years,
                   Period period, Convention conv = Convention::continuous);

/// Kaya decomposition of a scenario carrying a primary-energy series.
/// Throws if the energy column is missing.
KayaRates decompose(const EmissionScenario& s, Period period,
                    Convention conv = Convention::continuous);

/// Combined energy+carbon intensity decline required for a target
/// emissions growth rate given GDP growth (both %/yr).
double required_intensity_decline(double target_emissions_growth, double gdp_growth);

/// Extend a scenario to `horizon` at the constant emissions growth implied
/// by `rates` (population and per-capita income extended at their own
/// component rates, energy at the implied intensity rates when present).
EmissionScenario project(const EmissionScenario& base, const KayaRates& rates,
                         int horizon, Convention conv = Convention::continuous);

}  // namespace pariscba::kaya

#endif
