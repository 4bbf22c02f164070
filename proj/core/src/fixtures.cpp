#include "pariscba/fixtures.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "pariscba/csv.hpp"

namespace pariscba::fixtures {

namespace {

constexpr int kFirstYear = 2020;
constexpr int kLastYear = 2100;

EmissionScenario skeleton(const std::string& name) {
    EmissionScenario s;
    s.name = name;
    for (int y = kFirstYear; y <= kLastYear; ++y) {
        const int dt = y - kFirstYear;
        s.years.push_back(y);
        s.gdp.push_back(84.0 * std::pow(1.025, dt));
        // growth tapers from 1%/yr toward zero over the century
        s.population.push_back(7800.0 * std::exp(0.01 * dt * (1.0 - dt / 160.0)));
    }
    return s;
}

double frac(int year) { return (year - kFirstYear) / 80.0; }

}  // namespace

EmissionScenario ssp585_like() {
    EmissionScenario s = skeleton("ssp585_like");
    for (int y : s.years) {
        s.emissions.push_back(40.0 + 65.0 * frac(y));
        s.exo_forcing.push_back(0.4 + 0.6 * frac(y));
    }
    s.check_invariants();
    return s;
}

EmissionScenario ssp370_like() {
    EmissionScenario s = skeleton("ssp370_like");
    for (int y : s.years) {
        s.emissions.push_back(40.0 + 25.0 * frac(y));
        s.exo_forcing.push_back(0.4 + 0.2 * frac(y));
    }
    s.check_invariants();
    return s;
}

EmissionScenario paris20() {
    EmissionScenario s = skeleton("paris20");
    for (int y : s.years) {
        double e;
        if (y <= 2025) e = 40.0;
        else if (y <= 2070) e = 40.0 * (2070 - y) / 45.0;
        else e = -8.0 * (y - 2070) / 30.0;
        s.emissions.push_back(e);
        s.exo_forcing.push_back(0.4 - 0.2 * frac(y));
    }
    s.check_invariants();
    return s;
}

EmissionScenario paris15() {
    EmissionScenario s = skeleton("paris15");
    for (int y : s.years) {
        double e;
        if (y <= 2025) e = 40.0;
        else if (y <= 2050) e = 40.0 * (2050 - y) / 25.0;
        else e = -12.0 * (y - 2050) / 50.0;
        s.emissions.push_back(e);
        s.exo_forcing.push_back(0.4 - 0.3 * frac(y));
    }
    s.check_invariants();
    return s;
}

std::vector<std::string> bundled_scenario_names() {
    return {"ssp585_like", "ssp370_like", "paris20", "paris15", "historical_kaya"};
}

EmissionScenario bundled_scenario(const std::string& name) {
    if (name == "ssp585_like") return ssp585_like();
    if (name == "ssp370_like") return ssp370_like();
    if (name == "paris20") return paris20();
    if (name == "paris15") return paris15();
    if (name == "historical_kaya") return historical_kaya();
    std::string known;
    for (const auto& n : bundled_scenario_names()) known += " " + n;
    throw std::runtime_error("unknown bundled scenario '" + name + "'; known:" + known);
}

EmissionScenario historical_kaya() {
    EmissionScenario s;
    s.name = "historical_kaya";
    s.energy.emplace();

    // 1965 base levels
    double pop = 3339.0;          // million
    double gpc = 20.0 / 3339.0;   // trillion USD per million persons
    double eint = 155.0 / 20.0;   // EJ per trillion USD
    double cint = 11.2 / 155.0;   // GtCO2 per EJ

    auto rates_for = [](int year) {
        struct R { double pop, gpc, eint, cint; };
        if (year < 1999) return R{1.8, 1.7, -0.8, -0.4};
        if (year < 2011) return R{1.2, 1.9, -0.6, 0.4};
        return R{1.1, 1.5, -1.1, -0.8};
    };

    for (int y = 1965; y <= 2021; ++y) {
        s.years.push_back(y);
        s.population.push_back(pop);
        const double gdp = pop * gpc;
        const double energy = eint * gdp;
        s.gdp.push_back(gdp);
        s.energy->push_back(energy);
        s.emissions.push_back(cint * energy);
        s.exo_forcing.push_back(0.0);
        const auto r = rates_for(y);
        pop *= std::exp(r.pop / 100.0);
        gpc *= std::exp(r.gpc / 100.0);
        eint *= std::exp(r.eint / 100.0);
        cint *= std::exp(r.cint / 100.0);
    }
    s.check_invariants();
    return s;
}

std::vector<costs::TaxRecord> tax_records() {
    using K = costs::TaxRecord::Kind;
    return {
        {"message", K::ex_ante, 100.0, 4.0},   // 0.04, lower end of model range
        {"poles", K::ex_ante, 50.0, 5.0},      // 0.10
        {"image", K::ex_ante, 35.0, 7.0},      // 0.20
        {"aim", K::ex_ante, 30.0, 12.0},       // 0.40
        {"merge", K::ex_ante, 45.0, 27.0},     // 0.60
        {"remind", K::ex_ante, 60.0, 42.0},    // 0.70
        {"witch", K::ex_ante, 25.0, 25.0},     // 1.00
        {"gcam", K::ex_ante, 40.0, 46.0},      // 1.15, upper end
        {"expost_a", K::ex_post, 30.0, 0.0},   // insignificant
        {"expost_b", K::ex_post, 30.0, 45.0},  // above the ex-ante cluster
        {"expost_c", K::ex_post, 40.0, 0.8},   // below
        {"expost_d", K::ex_post, 50.0, 1.5},   // below
    };
}

std::string synthetic_estimates_csv() {
    return "paper_id,warming_c,impact_pct_gdp\n"
           "p01,1.0,-0.3\n"
           "p01,2.5,-1.3\n"
           "p02,2.5,-0.5\n"
           "p03,3.0,-2.1\n"
           "p04,2.5,0.3\n"
           "p05,1.0,0.2\n"
           "p05,2.5,-1.0\n"
           "p06,5.4,-6.1\n"
           "p07,3.2,-2.5\n"
           "p08,2.5,-1.6\n"
           "p09,4.9,-4.7\n"
           "p10,2.0,-0.9\n";
}

AnchorSet default_anchors() {
    AnchorSet a;
    a.scenarios.reserve(2);
    a.scenarios.push_back(ssp585_like());
    a.scenarios.push_back(ssp370_like());
    a.anchors.push_back({&a.scenarios[0], 2100, 4.8});
    a.anchors.push_back({&a.scenarios[1], 2100, 3.9});
    return a;
}

climate::CalibrationResult calibrated_params() {
    static std::once_flag flag;
    static climate::CalibrationResult cached;
    std::call_once(flag, [] {
        AnchorSet a = default_anchors();
        cached = climate::calibrate(a.anchors);
    });
    return cached;
}

void write_all(const std::string& directory) {
    for (const auto& name : bundled_scenario_names())
        csv::write_file(directory + "/" + name + ".csv",
                        write_scenario(bundled_scenario(name)));
    csv::write_file(directory + "/tax_records.csv", costs::write_tax_records(tax_records()));
    csv::write_file(directory + "/estimates_synthetic.csv", synthetic_estimates_csv());
}

}  // namespace pariscba::fixtures
