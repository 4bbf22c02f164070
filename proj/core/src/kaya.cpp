#include "pariscba/kaya.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pariscba::kaya {

namespace {

std::size_t year_index(std::span<const int> years, int y) {
    if (years.empty() || y < years.front() || y > years.back())
        throw std::runtime_error("period year " + std::to_string(y) +
                                 " outside series range");
    return static_cast<std::size_t>(y - years.front());
}

double rate_from_endpoints(double v0, double v1, int span, Convention conv) {
    if (!(v0 > 0.0) || !(v1 > 0.0))
        throw std::domain_error("growth_rate: non-positive value in period");
    if (conv == Convention::continuous) return 100.0 * std::log(v1 / v0) / span;
    return 100.0 * (std::pow(v1 / v0, 1.0 / span) - 1.0);
}

double annual_factor(double rate_pct, Convention conv) {
    if (conv == Convention::continuous) return std::exp(rate_pct / 100.0);
    return 1.0 + rate_pct / 100.0;
}

}  // namespace

double growth_rate(std::span<const double> series, std::span<const int> years,
                   Period period, Convention conv) {
    if (period.start >= period.end)
        throw std::runtime_error("growth_rate: period start must precede end");
    if (series.size() != years.size())
        throw std::runtime_error("growth_rate: series/years length mismatch");
    std::size_t i0 = year_index(years, period.start);
    std::size_t i1 = year_index(years, period.end);
    return rate_from_endpoints(series[i0], series[i1], period.end - period.start, conv);
}

KayaRates decompose(const EmissionScenario& s, Period period, Convention conv) {
    if (!s.energy)
        throw std::runtime_error("decompose: scenario '" + s.name +
                                 "' has no energy_ej series");
    std::size_t i0 = year_index(s.years, period.start);
    std::size_t i1 = year_index(s.years, period.end);
    const int span = period.end - period.start;
    const auto& en = *s.energy;

    auto comp = [&](double a0, double a1) { return rate_from_endpoints(a0, a1, span, conv); };

    KayaRates r;
    r.period = period;
    r.population_growth = comp(s.population[i0], s.population[i1]);
    r.income_per_capita_growth =
        comp(s.gdp[i0] / s.population[i0], s.gdp[i1] / s.population[i1]);
    r.energy_intensity_growth = comp(en[i0] / s.gdp[i0], en[i1] / s.gdp[i1]);
    r.carbon_intensity_growth = comp(s.emissions[i0] / en[i0], s.emissions[i1] / en[i1]);
    if (conv == Convention::continuous)
        // log-additivity holds exactly; keep it exact rather than recomputing
        r.emissions_growth = r.population_growth + r.income_per_capita_growth +
                             r.energy_intensity_growth + r.carbon_intensity_growth;
    else
        r.emissions_growth = comp(s.emissions[i0], s.emissions[i1]);
    return r;
}

double required_intensity_decline(double target_emissions_growth, double gdp_growth) {
    return target_emissions_growth - gdp_growth;
}

EmissionScenario project(const EmissionScenario& base, const KayaRates& rates,
                         int horizon, Convention conv) {
    if (horizon <= base.last_year())
        throw std::runtime_error("project: horizon must exceed the last base year");
    EmissionScenario out = base;
    out.name = base.name + "_projected";

    const double fe = annual_factor(rates.emissions_growth, conv);
    const double fp = annual_factor(rates.population_growth, conv);
    const double fg =
        annual_factor(rates.population_growth, conv) *
        annual_factor(rates.income_per_capita_growth, conv);
    const double fen = fg * annual_factor(rates.energy_intensity_growth, conv);

    for (int y = base.last_year() + 1; y <= horizon; ++y) {
        out.years.push_back(y);
        out.emissions.push_back(out.emissions.back() * fe);
        out.population.push_back(out.population.back() * fp);
        out.gdp.push_back(out.gdp.back() * fg);
        out.exo_forcing.push_back(out.exo_forcing.back());
        if (out.energy) out.energy->push_back(out.energy->back() * fen);
    }
    out.check_invariants();
    return out;
}

}  // namespace pariscba::kaya
