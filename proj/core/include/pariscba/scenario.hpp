#ifndef PARISCBA_SCENARIO_HPP
#define PARISCBA_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

namespace pariscba {

/// Annual global emission/GDP scenario, 2020-2100 for the bundled files.
/// Immutable after load; safe to share read-only across threads.
///
/// On-disk format (header required, comma separated):
///   year,emissions_gtco2,gdp_trillion_usd,population_million,exo_forcing_wm2
/// with an optional energy_ej column enabling Kaya decomposition.
struct EmissionScenario {
    std::string name;
    std::vector<int> years;             // strictly increasing by 1
    std::vector<double> emissions;      // GtCO2/yr, may be negative
    std::vector<double> gdp;            // trillion USD/yr, > 0
    std::vector<double> population;     // million persons, > 0
    std::vector<double> exo_forcing;    // W/m2, non-CO2 forcing
    std::optional<std::vector<double>> energy;  // EJ/yr primary energy

    std::size_t size() const { return years.size(); }
    int first_year() const { return years.front(); }
    int last_year() const { return years.back(); }

    /// Index of a calendar year; throws if outside the covered range.
    std::size_t index_of(int year) const;

    /// Throws std::runtime_error on any hard invariant violation.
    void check_invariants() const;
};

/// Load and validate a scenario CSV. The file name (without extension)
/// becomes the scenario name. Throws naming the offending row/column.
EmissionScenario load_scenario(const std::string& path);

/// Parse a scenario from CSV text (same rules as load_scenario).
EmissionScenario parse_scenario(const std::string& csv_text, const std::string& name);

/// Serialize to the normalized CSV form. write_scenario(load_scenario(p))
/// is byte-identical to the normalized form of p.
std::string write_scenario(const EmissionScenario& s);

/// Soft plausibility diagnostics; empty iff the scenario looks sane.
/// Hard invariant violations are reported here too rather than thrown.
std::vector<std::string> validate_scenario(const EmissionScenario& s);

}  // namespace pariscba

#endif
