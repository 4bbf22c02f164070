#include "pariscba/costs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pariscba/csv.hpp"

namespace pariscba::costs {

double CostModel::shape_exponent() const {
    if (!(cost_2030 >= 0.0) || !(cost_2100 >= 0.0))
        throw std::runtime_error("cost anchors must be non-negative");
    if (cost_2030 > cost_2100)
        throw std::runtime_error("inconsistent cost anchors: cost_2030 > cost_2100");
    // ((2030-2020)/80)^k = cost_2030/cost_2100
    return std::log(cost_2030 / cost_2100) / std::log(10.0 / 80.0);
}

CostModel cost_model_20() { return CostModel{2.0, 1.0, 3.9, 1.0, 1.0}; }
CostModel cost_model_15() { return CostModel{1.5, 2.5, 5.6, 1.5, 1.0}; }

CostModel cost_model_for_target(double target_c) {
    if (target_c == 2.0) return cost_model_20();
    if (target_c == 1.5) return cost_model_15();
    throw std::runtime_error("no cost model for target " + csv::format_value(target_c));
}

namespace {

std::vector<double> scaled_path(double scale, double k, int first_year, int last_year) {
    if (first_year < 2020 || last_year > 2100 || first_year > last_year)
        throw std::runtime_error("cost_path: years must lie within [2020, 2100]");
    std::vector<double> c;
    c.reserve(static_cast<std::size_t>(last_year - first_year + 1));
    for (int y = first_year; y <= last_year; ++y) {
        const double x = (y - 2020) / 80.0;
        c.push_back(x <= 0.0 ? 0.0 : scale * std::pow(x, k));
    }
    return c;
}

}  // namespace

std::vector<double> cost_path(const CostModel& m, int first_year, int last_year) {
    return scaled_path(m.cost_2100 * m.multiplier, m.shape_exponent(), first_year, last_year);
}

std::vector<double> cost_sd_path(const CostModel& m, int first_year, int last_year) {
    return scaled_path(m.sd_across_models * m.multiplier, m.shape_exponent(), first_year,
                       last_year);
}

double tax_efficacy(double reduction_pct_2030, double price_usd) {
    if (!(price_usd > 0.0)) throw std::domain_error("tax_efficacy: price must be positive");
    return reduction_pct_2030 / price_usd;
}

EfficacyReport efficacy_range_check(const std::vector<TaxRecord>& records) {
    constexpr double kLo = 0.04, kHi = 1.15;  // ex-ante model range endpoints
    EfficacyReport rep;
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const auto& r : records) {
        const double eff = tax_efficacy(r.reduction_pct_2030, r.price_usd_per_tco2);
        if (eff < kLo || eff > kHi)
            rep.flags.push_back(r.source + ": efficacy " + csv::format_value(eff) +
                                " outside ex-ante model range [0.04, 1.15]");
        if (first) { lo = hi = eff; first = false; }
        lo = std::min(lo, eff);
        hi = std::max(hi, eff);
    }
    rep.spread_ratio = (first || lo <= 0.0) ? 0.0 : hi / lo;
    return rep;
}

double subsidy_share(double gross_negative_emissions_gtco2, double price_usd,
                     double gdp_trillion_usd) {
    if (gross_negative_emissions_gtco2 < 0.0)
        throw std::domain_error("subsidy_share: gross negative emissions must be >= 0");
    if (!(gdp_trillion_usd > 0.0))
        throw std::domain_error("subsidy_share: gdp must be positive");
    return 100.0 * (gross_negative_emissions_gtco2 * 1e9 * price_usd) /
           (gdp_trillion_usd * 1e12);
}

std::vector<TaxRecord> parse_tax_records(const std::string& csv_text) {
    csv::Table t = csv::parse(csv_text, "tax records");
    const std::size_t cs = t.require_column("source");
    const std::size_t ck = t.require_column("kind");
    const std::size_t cp = t.require_column("price_usd_per_tco2");
    const std::size_t cr = t.require_column("reduction_pct_2030");
    std::vector<TaxRecord> out;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        TaxRecord rec;
        rec.source = t.rows[r][cs];
        const std::string& kind = t.rows[r][ck];
        if (kind == "ex_ante") rec.kind = TaxRecord::Kind::ex_ante;
        else if (kind == "ex_post") rec.kind = TaxRecord::Kind::ex_post;
        else
            throw std::runtime_error("row " + std::to_string(r + 1) +
                                     ": kind must be ex_ante or ex_post");
        rec.price_usd_per_tco2 = csv::to_double(t.rows[r][cp], r, "price_usd_per_tco2");
        rec.reduction_pct_2030 = csv::to_double(t.rows[r][cr], r, "reduction_pct_2030");
        if (!(rec.price_usd_per_tco2 > 0.0))
            throw std::runtime_error("row " + std::to_string(r + 1) +
                                     ": price must be positive");
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<TaxRecord> load_tax_records(const std::string& path) {
    csv::Table t = csv::read_file(path);
    std::string text = "source,kind,price_usd_per_tco2,reduction_pct_2030\n";
    const std::size_t cs = t.require_column("source");
    const std::size_t ck = t.require_column("kind");
    const std::size_t cp = t.require_column("price_usd_per_tco2");
    const std::size_t cr = t.require_column("reduction_pct_2030");
    for (const auto& row : t.rows)
        text += row[cs] + "," + row[ck] + "," + row[cp] + "," + row[cr] + "\n";
    return parse_tax_records(text);
}

std::string write_tax_records(const std::vector<TaxRecord>& records) {
    std::string out = "source,kind,price_usd_per_tco2,reduction_pct_2030\n";
    for (const auto& r : records)
        out += r.source + "," +
               (r.kind == TaxRecord::Kind::ex_ante ? "ex_ante" : "ex_post") + "," +
               csv::format_value(r.price_usd_per_tco2) + "," +
               csv::format_value(r.reduction_pct_2030) + "\n";
    return out;
}

}  // namespace pariscba::costs
