#ifndef PARISCBA_CBA_HPP
#define PARISCBA_CBA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pariscba/climate.hpp"
#include "pariscba/costs.hpp"
#include "pariscba/impacts.hpp"
#include "pariscba/scenario.hpp"

namespace pariscba::cba {

/// A per-year path with a lo/hi band around the central value.
struct BandedPath {
    std::vector<double> central;
    std::vector<double> lo;
    std::vector<double> hi;
};

/// Per-year cost/benefit/net-benefit paths (% GDP) plus summary scalars.
struct CbaResult {
    std::vector<int> years;
    BandedPath cost;
    BandedPath benefit;
    BandedPath net;
    double npv_trillion_usd = 0.0;
    double discount_rate = 0.03;
    double risk_aversion_eta = 1.0;
};

/// central = benefit - cost; the band combines the cost and benefit spreads
/// in quadrature. Throws on misaligned years.
CbaResult net_benefit(const std::vector<int>& years, const BandedPath& cost,
                      const std::vector<int>& benefit_years, const BandedPath& benefit);

/// Present value (trillion USD) of a % GDP path discounted to base_year.
double npv(const std::vector<int>& years, const std::vector<double>& path_pct_gdp,
           const std::vector<double>& gdp_trillion_usd, double rate,
           int base_year = 2020);

/// Ramsey discount rate: pure time preference + eta * consumption growth.
double ramsey_rate(double pure_time_pref, double eta, double growth);

/// Certainty equivalent of consumption-equivalent draws under CRRA utility.
/// eta = 0: arithmetic mean; eta = 1: geometric mean (log utility).
/// Throws std::domain_error on non-positive samples with eta >= 1 (or
/// negative samples with eta > 0).
double certainty_equivalent(const std::vector<double>& samples, double eta);

/// Distributions for the Monte Carlo propagation. Zero spreads collapse
/// every draw onto the deterministic central run.
struct MonteCarloConfig {
    const EmissionScenario* baseline = nullptr;
    const EmissionScenario* policy = nullptr;
    climate::CarbonCycleParams carbon;
    climate::ClimateParams climate;  // calibrated central parameters
    impacts::DamageModel damage;
    costs::CostModel cost_model;

    double ecs_sigma_log = 0.25;            // lognormal around the central ecs
    impacts::UncertaintyBand damage_band{}; // two-piece factor around 1
    // cost multiplier ~ Normal(cost_model.multiplier,
    //                          sd_across_models / cost_2100), truncated at 0
    int n_draws = 2000;
    std::uint64_t seed = 0;
    int threads = 0;  // 0 = hardware concurrency
};

inline constexpr double kPercentiles[5] = {5.0, 17.0, 50.0, 83.0, 95.0};

struct PercentilePaths {
    // one path per entry of kPercentiles, aligned with MonteCarloResult.years
    std::vector<std::vector<double>> p;
};

struct MonteCarloResult {
    std::vector<int> years;
    PercentilePaths cost;
    PercentilePaths benefit;
    PercentilePaths net;
    std::vector<double> npv_draws;  // trillion USD at `discount_rate`
    double discount_rate = 0.03;
};

/// Reproducible given (seed, n_draws): each draw owns an RNG stream seeded
/// from the draw index, so the thread count never changes the result.
MonteCarloResult monte_carlo(const MonteCarloConfig& config, double discount_rate = 0.03);

/// Deterministic central run with the configured spread as a band.
CbaResult deterministic_cba(const MonteCarloConfig& config, double discount_rate = 0.03);

/// Result CSV: year,cost,cost_lo,cost_hi,benefit,...,net,net_lo,net_hi.
std::string write_result_csv(const CbaResult& r);

/// Result CSV from Monte Carlo percentiles with lo/hi = p17/p83.
std::string write_result_csv(const MonteCarloResult& r);

/// All-percentile CSV (5/17/50/83/95 for cost, benefit and net benefit).
std::string write_percentiles_csv(const MonteCarloResult& r);

/// Linear-interpolation percentile of a sample (p in [0, 100]).
double percentile(std::vector<double> sample, double p);

}  // namespace pariscba::cba

#endif
