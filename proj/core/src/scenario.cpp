#include "pariscba/scenario.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pariscba/csv.hpp"

namespace pariscba {

std::size_t EmissionScenario::index_of(int year) const {
    if (years.empty() || year < years.front() || year > years.back())
        throw std::runtime_error("scenario '" + name + "' does not cover year " +
                                 std::to_string(year));
    return static_cast<std::size_t>(year - years.front());
}

void EmissionScenario::check_invariants() const {
    if (years.empty()) throw std::runtime_error("scenario '" + name + "' is empty");
    for (std::size_t i = 1; i < years.size(); ++i)
        if (years[i] != years[i - 1] + 1)
            throw std::runtime_error("scenario '" + name + "': non-contiguous years " +
                                     std::to_string(years[i - 1]) + ", " +
                                     std::to_string(years[i]));
    const std::size_t n = years.size();
    if (emissions.size() != n || gdp.size() != n || population.size() != n ||
        exo_forcing.size() != n || (energy && energy->size() != n))
        throw std::runtime_error("scenario '" + name + "': series length mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(gdp[i] > 0.0))
            throw std::runtime_error("scenario '" + name + "': gdp <= 0 in year " +
                                     std::to_string(years[i]));
        if (!(population[i] > 0.0))
            throw std::runtime_error("scenario '" + name + "': population <= 0 in year " +
                                     std::to_string(years[i]));
    }
}

EmissionScenario parse_scenario(const std::string& csv_text, const std::string& name) {
    csv::Table t = csv::parse(csv_text, name);
    const std::size_t cy = t.require_column("year");
    const std::size_t ce = t.require_column("emissions_gtco2");
    const std::size_t cg = t.require_column("gdp_trillion_usd");
    const std::size_t cp = t.require_column("population_million");
    const int cf = t.find_column("exo_forcing_wm2");   // defaults to zero if absent
    const int cen = t.find_column("energy_ej");

    EmissionScenario s;
    s.name = name;
    if (cen >= 0) s.energy.emplace();
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        s.years.push_back(csv::to_year(row[cy], r, "year"));
        s.emissions.push_back(csv::to_double(row[ce], r, "emissions_gtco2"));
        s.gdp.push_back(csv::to_double(row[cg], r, "gdp_trillion_usd"));
        s.population.push_back(csv::to_double(row[cp], r, "population_million"));
        s.exo_forcing.push_back(
            cf >= 0 ? csv::to_double(row[static_cast<std::size_t>(cf)], r, "exo_forcing_wm2")
                    : 0.0);
        if (cen >= 0)
            s.energy->push_back(
                csv::to_double(row[static_cast<std::size_t>(cen)], r, "energy_ej"));
    }
    s.check_invariants();
    return s;
}

EmissionScenario load_scenario(const std::string& path) {
    std::string name = std::filesystem::path(path).stem().string();
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), name);
}

std::string write_scenario(const EmissionScenario& s) {
    std::string out = "year,emissions_gtco2,gdp_trillion_usd,population_million,exo_forcing_wm2";
    if (s.energy) out += ",energy_ej";
    out += "\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += std::to_string(s.years[i]);
        out += "," + csv::format_value(s.emissions[i]);
        out += "," + csv::format_value(s.gdp[i]);
        out += "," + csv::format_value(s.population[i]);
        out += "," + csv::format_value(s.exo_forcing[i]);
        if (s.energy) out += "," + csv::format_value((*s.energy)[i]);
        out += "\n";
    }
    return out;
}

std::vector<std::string> validate_scenario(const EmissionScenario& s) {
    std::vector<std::string> diags;
    if (s.years.empty()) {
        diags.push_back("scenario is empty");
        return diags;
    }
    for (std::size_t i = 1; i < s.years.size(); ++i)
        if (s.years[i] != s.years[i - 1] + 1)
            diags.push_back("non-contiguous years " + std::to_string(s.years[i - 1]) +
                            " -> " + std::to_string(s.years[i]));
    for (std::size_t i = 0; i < s.size(); ++i) {
        const std::string y = std::to_string(s.years[i]);
        if (!(s.gdp[i] > 0.0)) diags.push_back("gdp <= 0 in year " + y);
        if (!(s.population[i] > 0.0)) diags.push_back("population <= 0 in year " + y);
        if (std::abs(s.emissions[i]) >= 200.0)
            diags.push_back("implausible emissions " + csv::format_value(s.emissions[i]) +
                            " GtCO2/yr in year " + y);
    }
    return diags;
}

}  // namespace pariscba
