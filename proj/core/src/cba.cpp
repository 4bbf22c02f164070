#include "pariscba/cba.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "pariscba/csv.hpp"

namespace pariscba::cba {

CbaResult net_benefit(const std::vector<int>& years, const BandedPath& cost,
                      const std::vector<int>& benefit_years, const BandedPath& benefit) {
    if (years != benefit_years)
        throw std::runtime_error("net_benefit: cost and benefit years are misaligned");
    const std::size_t n = years.size();
    if (cost.central.size() != n || benefit.central.size() != n)
        throw std::runtime_error("net_benefit: path length mismatch");

    CbaResult r;
    r.years = years;
    r.cost = cost;
    r.benefit = benefit;
    r.net.central.resize(n);
    r.net.lo.resize(n);
    r.net.hi.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double net = benefit.central[i] - cost.central[i];
        r.net.central[i] = net;
        const double b_dn = benefit.central[i] - benefit.lo[i];
        const double b_up = benefit.hi[i] - benefit.central[i];
        const double c_dn = cost.central[i] - cost.lo[i];
        const double c_up = cost.hi[i] - cost.central[i];
        // spreads combine in quadrature; a low net pairs low benefit with high cost
        r.net.lo[i] = net - std::sqrt(b_dn * b_dn + c_up * c_up);
        r.net.hi[i] = net + std::sqrt(b_up * b_up + c_dn * c_dn);
    }
    return r;
}

double npv(const std::vector<int>& years, const std::vector<double>& path_pct_gdp,
           const std::vector<double>& gdp_trillion_usd, double rate, int base_year) {
    if (rate < 0.0) throw std::domain_error("npv: rate must be >= 0");
    if (path_pct_gdp.size() != years.size() || gdp_trillion_usd.size() != years.size())
        throw std::runtime_error("npv: series length mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < years.size(); ++i)
        sum += path_pct_gdp[i] * gdp_trillion_usd[i] / 100.0 *
               std::pow(1.0 + rate, -(years[i] - base_year));
    return sum;
}

double ramsey_rate(double pure_time_pref, double eta, double growth) {
    return pure_time_pref + eta * growth;
}

double certainty_equivalent(const std::vector<double>& samples, double eta) {
    if (samples.size() < 2)
        throw std::runtime_error("certainty_equivalent: need at least two samples");
    if (eta < 0.0) throw std::domain_error("certainty_equivalent: eta must be >= 0");
    const double n = static_cast<double>(samples.size());
    if (eta == 0.0) {
        double m = 0.0;
        for (double x : samples) m += x;
        return m / n;
    }
    for (double x : samples) {
        if (eta >= 1.0 && !(x > 0.0))
            throw std::domain_error(
                "certainty_equivalent: non-positive consumption sample with eta >= 1");
        if (x < 0.0)
            throw std::domain_error(
                "certainty_equivalent: negative consumption sample with eta > 0");
    }
    if (eta == 1.0) {
        double m = 0.0;
        for (double x : samples) m += std::log(x);
        return std::exp(m / n);
    }
    double m = 0.0;
    for (double x : samples) m += std::pow(x, 1.0 - eta);
    return std::pow(m / n, 1.0 / (1.0 - eta));
}

double percentile(std::vector<double> sample, double p) {
    if (sample.empty()) throw std::runtime_error("percentile: empty sample");
    std::sort(sample.begin(), sample.end());
    const double rank = p / 100.0 * static_cast<double>(sample.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(rank));
    const auto hi = static_cast<std::size_t>(std::ceil(rank));
    const double frac = rank - static_cast<double>(lo);
    return sample[lo] + frac * (sample[hi] - sample[lo]);
}

namespace {

// splitmix64: decorrelates per-draw streams from (seed, draw index)
std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct DrawRng {
    std::uint64_t state;
    explicit DrawRng(std::uint64_t seed, std::uint64_t draw)
        : state(mix(seed ^ mix(draw + 1))) {}
    double uniform() {  // in (0, 1)
        state = mix(state);
        return (static_cast<double>(state >> 11) + 0.5) * 0x1.0p-53;
    }
    double normal() {  // Box-Muller, one value per call pair
        constexpr double two_pi = 6.283185307179586476925286766559;
        const double u1 = uniform(), u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }
};

double two_piece_factor(DrawRng& rng, const impacts::UncertaintyBand& band) {
    if (band.sd_below == 0.0 && band.sd_above == 0.0) return 1.0;
    const double u = rng.uniform();
    const double z = std::abs(rng.normal());
    if (u < band.sd_below / (band.sd_below + band.sd_above))
        return 1.0 - z * band.sd_below;
    return 1.0 + z * band.sd_above;
}

void validate_config(const MonteCarloConfig& c) {
    if (!c.baseline || !c.policy)
        throw std::runtime_error("monte_carlo: baseline and policy scenarios required");
    if (c.baseline->years != c.policy->years)
        throw std::runtime_error("monte_carlo: baseline and policy years are misaligned");
    if (c.n_draws < 1) throw std::runtime_error("monte_carlo: n_draws must be >= 1");
    if (c.ecs_sigma_log < 0.0 || c.damage_band.sd_below < 0.0 ||
        c.damage_band.sd_above < 0.0 || c.cost_model.sd_across_models < 0.0)
        throw std::runtime_error("monte_carlo: distribution spreads must be >= 0");
}

}  // namespace

CbaResult deterministic_cba(const MonteCarloConfig& config, double discount_rate) {
    validate_config(config);
    const auto& base = *config.baseline;
    const int y0 = base.first_year(), y1 = base.last_year();

    climate::ClimatePath tb = climate::temperature_path(base, config.carbon, config.climate);
    climate::ClimatePath tp =
        climate::temperature_path(*config.policy, config.carbon, config.climate);

    // central cost built the same way as a zero-variance Monte Carlo draw
    // (multiplier applied to a unit-multiplier path) so the two agree exactly
    costs::CostModel unit = config.cost_model;
    unit.multiplier = 1.0;
    BandedPath cost;
    cost.central = costs::cost_path(unit, y0, y1);
    for (double& c : cost.central) c = config.cost_model.multiplier * c;
    const auto sd = costs::cost_sd_path(config.cost_model, y0, y1);
    for (std::size_t i = 0; i < cost.central.size(); ++i) {
        cost.lo.push_back(cost.central[i] - sd[i]);
        cost.hi.push_back(cost.central[i] + sd[i]);
    }

    BandedPath ben;
    ben.central = impacts::benefit(base.years, tb.temperature, config.policy->years,
                                   tp.temperature, config.damage);
    for (double b : ben.central) {
        ben.lo.push_back(b - std::abs(b) * config.damage_band.sd_below);
        ben.hi.push_back(b + std::abs(b) * config.damage_band.sd_above);
    }

    CbaResult r = net_benefit(base.years, cost, base.years, ben);
    r.discount_rate = discount_rate;
    r.npv_trillion_usd = npv(base.years, r.net.central, base.gdp, discount_rate);
    return r;
}

MonteCarloResult monte_carlo(const MonteCarloConfig& config, double discount_rate) {
    validate_config(config);
    const auto& base = *config.baseline;
    const std::size_t n_years = base.size();
    const int n = config.n_draws;
    const int y0 = base.first_year(), y1 = base.last_year();

    std::vector<double> base_cost =
        costs::cost_path(costs::CostModel{config.cost_model.target_c,
                                          config.cost_model.cost_2030,
                                          config.cost_model.cost_2100,
                                          config.cost_model.sd_across_models, 1.0},
                         y0, y1);
    const double mult_sd = config.cost_model.cost_2100 > 0.0
                               ? config.cost_model.sd_across_models / config.cost_model.cost_2100
                               : 0.0;

    std::vector<std::vector<double>> cost_d(n, std::vector<double>(n_years));
    std::vector<std::vector<double>> ben_d(n, std::vector<double>(n_years));
    std::vector<double> npv_d(n);

    auto run_draw = [&](int d) {
        DrawRng rng(config.seed, static_cast<std::uint64_t>(d));
        climate::ClimateParams kp = config.climate;
        const double z_ecs = rng.normal();
        if (config.ecs_sigma_log > 0.0)
            kp.ecs = config.climate.ecs * std::exp(config.ecs_sigma_log * z_ecs);
        const double phi = two_piece_factor(rng, config.damage_band);
        const double z_m = rng.normal();
        const double mult =
            std::max(config.cost_model.multiplier + (mult_sd > 0.0 ? mult_sd * z_m : 0.0), 0.0);

        climate::ClimatePath tb = climate::temperature_path(base, config.carbon, kp);
        climate::ClimatePath tp =
            climate::temperature_path(*config.policy, config.carbon, kp);
        std::vector<double> ben = impacts::benefit(base.years, tb.temperature,
                                                   config.policy->years, tp.temperature,
                                                   config.damage);
        std::vector<double> net(n_years);
        for (std::size_t i = 0; i < n_years; ++i) {
            cost_d[d][i] = mult * base_cost[i];
            ben_d[d][i] = phi * ben[i];
            net[i] = ben_d[d][i] - cost_d[d][i];
        }
        npv_d[d] = npv(base.years, net, base.gdp, discount_rate);
    };

    int threads = config.threads > 0
                      ? config.threads
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min(threads, n);
    if (threads <= 1) {
        for (int d = 0; d < n; ++d) run_draw(d);
    } else {
        std::vector<std::future<void>> futs;
        for (int t = 0; t < threads; ++t)
            futs.push_back(std::async(std::launch::async, [&, t] {
                for (int d = t; d < n; d += threads) run_draw(d);
            }));
        for (auto& f : futs) f.get();
    }

    MonteCarloResult res;
    res.years = base.years;
    res.discount_rate = discount_rate;
    res.npv_draws = npv_d;
    res.cost.p.assign(5, std::vector<double>(n_years));
    res.benefit.p.assign(5, std::vector<double>(n_years));
    res.net.p.assign(5, std::vector<double>(n_years));
    std::vector<double> column(n);
    for (std::size_t i = 0; i < n_years; ++i) {
        for (int q = 0; q < 5; ++q) {
            for (int d = 0; d < n; ++d) column[d] = cost_d[d][i];
            res.cost.p[q][i] = percentile(column, kPercentiles[q]);
            for (int d = 0; d < n; ++d) column[d] = ben_d[d][i];
            res.benefit.p[q][i] = percentile(column, kPercentiles[q]);
            for (int d = 0; d < n; ++d) column[d] = ben_d[d][i] - cost_d[d][i];
            res.net.p[q][i] = percentile(column, kPercentiles[q]);
        }
    }
    return res;
}

namespace {

std::string result_csv(const std::vector<int>& years, const BandedPath& c,
                       const BandedPath& b, const BandedPath& nb) {
    std::string out =
        "year,cost,cost_lo,cost_hi,benefit,benefit_lo,benefit_hi,net,net_lo,net_hi\n";
    for (std::size_t i = 0; i < years.size(); ++i) {
        out += std::to_string(years[i]);
        for (const BandedPath* p : {&c, &b, &nb})
            out += "," + csv::format_value(p->central[i]) + "," +
                   csv::format_value(p->lo[i]) + "," + csv::format_value(p->hi[i]);
        out += "\n";
    }
    return out;
}

BandedPath from_percentiles(const PercentilePaths& p) {
    return BandedPath{p.p[2], p.p[1], p.p[3]};  // p50, p17, p83
}

}  // namespace

std::string write_result_csv(const CbaResult& r) {
    return result_csv(r.years, r.cost, r.benefit, r.net);
}

std::string write_result_csv(const MonteCarloResult& r) {
    return result_csv(r.years, from_percentiles(r.cost), from_percentiles(r.benefit),
                      from_percentiles(r.net));
}

std::string write_percentiles_csv(const MonteCarloResult& r) {
    std::string out = "year";
    const char* names[3] = {"cost", "benefit", "net"};
    for (const char* nm : names)
        for (double p : kPercentiles)
            out += "," + std::string(nm) + "_p" + std::to_string(static_cast<int>(p));
    out += "\n";
    const PercentilePaths* paths[3] = {&r.cost, &r.benefit, &r.net};
    for (std::size_t i = 0; i < r.years.size(); ++i) {
        out += std::to_string(r.years[i]);
        for (const auto* pp : paths)
            for (int q = 0; q < 5; ++q) out += "," + csv::format_value(pp->p[q][i]);
        out += "\n";
    }
    return out;
}

}  // namespace pariscba::cba
