#ifndef PARISCBA_FIXTURES_HPP
#define PARISCBA_FIXTURES_HPP

#include <string>
#include <vector>

#include "pariscba/climate.hpp"
#include "pariscba/costs.hpp"
#include "pariscba/scenario.hpp"

namespace pariscba::fixtures {

/// Bundled scenarios, 2020-2100. GDP grows 2.5%/yr from 84 trillion USD;
/// population rises from 7800 to ~11600 million with decaying growth.
/// Emission/forcing paths are synthetic but tuned so that the calibrated
/// climate chain warms the two baselines to 4.8 and 3.9 degC in 2100.
EmissionScenario ssp585_like();  // 40 -> 105 GtCO2/yr, hot no-policy baseline
EmissionScenario ssp370_like();  // 40 -> 65 GtCO2/yr, milder baseline
EmissionScenario paris20();      // net zero ~2070, mild net-negative after
EmissionScenario paris15();      // net zero 2050, deeper net-negative after

/// Scenario by bundled name; throws listing the known names otherwise.
EmissionScenario bundled_scenario(const std::string& name);
std::vector<std::string> bundled_scenario_names();

/// Historical 1965-2021 series (with energy_ej) built from piecewise
/// constant Kaya component growth rates:
///   1965-1999: population 1.8, income 1.7, energy int. -0.8, carbon int. -0.4
///   1999-2011: 1.2, 1.9, -0.6, 0.4
///   2011-2021: 1.1, 1.5, -1.1, -0.8   (all %/yr, continuous)
EmissionScenario historical_kaya();

/// Synthetic reconstruction of the carbon-tax efficacy evidence: eight
/// ex-ante model entries spanning 0.04-1.15 %/(USD/tCO2) and four ex-post
/// econometric entries (one insignificant, one above, two below the
/// ex-ante cluster). Individual values are illustrative.
std::vector<costs::TaxRecord> tax_records();

/// Small synthetic impact-estimate collection for exercising the fitting
/// and histogram pipeline (not published data).
std::string synthetic_estimates_csv();

/// Default temperature anchors: (ssp585_like, 2100, 4.8), (ssp370_like,
/// 2100, 3.9). The returned scenarios back the anchor pointers.
struct AnchorSet {
    std::vector<EmissionScenario> scenarios;
    std::vector<climate::Anchor> anchors;
};
AnchorSet default_anchors();

/// Calibrated climate parameters for the default anchors (memoized).
climate::CalibrationResult calibrated_params();

/// Write every bundled CSV (scenarios, historical series, tax records,
/// synthetic estimates) into a directory.
void write_all(const std::string& directory);

}  // namespace pariscba::fixtures

#endif
