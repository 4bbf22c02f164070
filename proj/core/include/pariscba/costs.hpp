#ifndef PARISCBA_COSTS_HPP
#define PARISCBA_COSTS_HPP

#include <string>
#include <vector>

namespace pariscba::costs {

/// Mitigation cost trajectory for a temperature target, pinned by two
/// anchors: c(t) = cost_2100 * ((t-2020)/80)^k with k solved so that the
/// curve passes through cost_2030 at 2030. c(2020) = 0 always.
struct CostModel {
    double target_c = 2.0;          // 1.5 or 2.0
    double cost_2030 = 1.0;         // % GDP
    double cost_2100 = 3.9;         // % GDP
    double sd_across_models = 1.0;  // % GDP at 2100
    double multiplier = 1.0;        // second-best implementation penalty

    double shape_exponent() const;  // throws on inconsistent anchors
};

CostModel cost_model_20();  // 2.0 degC target defaults
CostModel cost_model_15();  // 1.5 degC target defaults
CostModel cost_model_for_target(double target_c);

/// Per-year mitigation cost in % GDP over [first_year, last_year].
/// Years must lie within [2020, 2100].
std::vector<double> cost_path(const CostModel& m, int first_year, int last_year);

/// Cross-model spread at each year, scaled like the cost path itself.
std::vector<double> cost_sd_path(const CostModel& m, int first_year, int last_year);

/// One carbon-price efficacy data point (model estimate or econometric).
struct TaxRecord {
    std::string source;
    enum class Kind { ex_ante, ex_post } kind = Kind::ex_ante;
    double price_usd_per_tco2 = 0.0;  // > 0
    double reduction_pct_2030 = 0.0;  // % emission reduction in 2030
};

/// Emission reduction in 2030 per USD/tCO2 of carbon price.
double tax_efficacy(double reduction_pct_2030, double price_usd);

struct EfficacyReport {
    std::vector<std::string> flags;  // records outside the model range
    double spread_ratio = 0.0;       // max/min efficacy across records
};

/// Flags records whose efficacy falls outside the 0.04-1.15 %/(USD/tCO2)
/// range spanned by the process models, and reports the overall spread.
EfficacyReport efficacy_range_check(const std::vector<TaxRecord>& records);

/// Carbon-removal subsidy bill as a share of world income:
/// 100 * (GtCO2/yr * USD/tCO2 * 1e9) / (trillion USD * 1e12).
double subsidy_share(double gross_negative_emissions_gtco2, double price_usd,
                     double gdp_trillion_usd);

/// Tax records CSV: `source,kind,price_usd_per_tco2,reduction_pct_2030`.
std::vector<TaxRecord> parse_tax_records(const std::string& csv_text);
std::vector<TaxRecord> load_tax_records(const std::string& path);
std::string write_tax_records(const std::vector<TaxRecord>& records);

}  // namespace pariscba::costs

#endif
