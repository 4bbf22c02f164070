// pariscba: command-line front end for the climate-economy cost-benefit
// toolkit. Each subcommand emits plot-ready CSV into the output directory.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pariscba/cba.hpp"
#include "pariscba/climate.hpp"
#include "pariscba/costs.hpp"
#include "pariscba/csv.hpp"
#include "pariscba/fixtures.hpp"
#include "pariscba/impacts.hpp"
#include "pariscba/kaya.hpp"
#include "pariscba/scenario.hpp"

namespace {

using namespace pariscba;

EmissionScenario resolve_scenario(const std::string& name_or_path) {
    if (std::filesystem::exists(name_or_path)) return load_scenario(name_or_path);
    return fixtures::bundled_scenario(name_or_path);
}

std::string default_output_dir() {
    if (const char* env = std::getenv("PARISCBA_OUTPUT_DIR")) return env;
    return "out";
}

void write_output(const std::string& dir, const std::string& file,
                  const std::string& content) {
    const std::string path = dir + "/" + file;
    csv::write_file(path, content);
    std::cout << "wrote " << path << "\n";
}

struct Periods {
    std::vector<kaya::Period> list;
};

Periods parse_periods(const std::string& text) {
    Periods p;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        const std::size_t dash = item.find('-');
        if (dash == std::string::npos)
            throw std::runtime_error("bad period '" + item + "', expected START-END");
        p.list.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
        pos = comma + 1;
    }
    if (p.list.empty()) throw std::runtime_error("no periods given");
    return p;
}

int cmd_kaya(const std::string& outdir, const std::string& scenario_name,
             const std::string& periods_text, bool geometric) {
    EmissionScenario s = resolve_scenario(scenario_name);
    const auto conv = geometric ? kaya::Convention::geometric : kaya::Convention::continuous;
    Periods periods =
        periods_text.empty()
            ? parse_periods(std::to_string(s.first_year()) + "-" +
                            std::to_string(s.last_year()))
            : parse_periods(periods_text);

    std::string out =
        "period_start,period_end,population,income_per_capita,energy_intensity,"
        "carbon_intensity,emissions\n";
    std::cout << "Kaya decomposition of '" << s.name << "' (%/yr, "
              << (geometric ? "geometric" : "continuous") << ")\n";
    for (const auto& period : periods.list) {
        kaya::KayaRates r = kaya::decompose(s, period, conv);
        out += std::to_string(period.start) + "," + std::to_string(period.end);
        for (double v : {r.population_growth, r.income_per_capita_growth,
                         r.energy_intensity_growth, r.carbon_intensity_growth,
                         r.emissions_growth})
            out += "," + csv::format_value(v);
        out += "\n";
        std::cout << "  " << period.start << "-" << period.end << ": population "
                  << csv::format_value(r.population_growth) << ", income/capita "
                  << csv::format_value(r.income_per_capita_growth) << ", energy int. "
                  << csv::format_value(r.energy_intensity_growth) << ", carbon int. "
                  << csv::format_value(r.carbon_intensity_growth) << ", emissions "
                  << csv::format_value(r.emissions_growth) << "\n";
    }
    write_output(outdir, "kaya_" + s.name + ".csv", out);
    return 0;
}

int cmd_simulate(const std::string& outdir, const std::string& scenario_name) {
    EmissionScenario s = resolve_scenario(scenario_name);
    auto calib = fixtures::calibrated_params();
    climate::ClimateState init = climate::initial_state_2020(calib.carbon);
    init.year = s.first_year();
    climate::ClimatePath path = climate::temperature_path(s, calib.carbon, calib.climate, init);
    write_output(outdir, "climate_" + s.name + ".csv", climate::write_climate_csv(path));

    if (s.energy) {
        std::string out = "year,emissions_gtco2,population_million,gdp_per_capita_usd,"
                          "energy_intensity_ej_per_trillion,carbon_intensity_gtco2_per_ej\n";
        for (std::size_t i = 0; i < s.size(); ++i) {
            out += std::to_string(s.years[i]);
            out += "," + csv::format_value(s.emissions[i]);
            out += "," + csv::format_value(s.population[i]);
            out += "," + csv::format_value(s.gdp[i] * 1e6 / s.population[i]);
            out += "," + csv::format_value((*s.energy)[i] / s.gdp[i]);
            out += "," + csv::format_value(s.emissions[i] / (*s.energy)[i]);
            out += "\n";
        }
        write_output(outdir, "kaya_series_" + s.name + ".csv", out);
    }
    std::cout << "T(" << path.years.back()
              << ") = " << csv::format_value(path.temperature.back()) << " degC, peak "
              << csv::format_value(path.peak_temperature()) << " degC\n";
    return 0;
}

int cmd_efficacy(const std::string& outdir, const std::string& records_path) {
    std::vector<costs::TaxRecord> records = records_path.empty()
                                                ? fixtures::tax_records()
                                                : costs::load_tax_records(records_path);
    costs::EfficacyReport report = costs::efficacy_range_check(records);

    std::string out =
        "source,kind,price_usd_per_tco2,reduction_pct_2030,efficacy_pct_per_usd\n";
    for (const auto& r : records) {
        out += r.source + ",";
        out += r.kind == costs::TaxRecord::Kind::ex_ante ? "ex_ante" : "ex_post";
        out += "," + csv::format_value(r.price_usd_per_tco2);
        out += "," + csv::format_value(r.reduction_pct_2030);
        out += "," + csv::format_value(costs::tax_efficacy(r.reduction_pct_2030,
                                                           r.price_usd_per_tco2));
        out += "\n";
    }
    write_output(outdir, "efficacy.csv", out);
    std::cout << "spread ratio " << csv::format_value(report.spread_ratio) << "\n";
    for (const auto& f : report.flags) std::cout << "flag: " << f << "\n";
    return 0;
}

int cmd_impacts(const std::string& outdir, const std::string& estimates_path,
                double target_warming, double bin_width) {
    std::vector<impacts::ImpactEstimate> estimates =
        estimates_path.empty() ? impacts::parse_estimates(fixtures::synthetic_estimates_csv())
                               : impacts::load_estimates(estimates_path);

    std::vector<impacts::ImpactFunction> fits;
    for (int i = 0; i < impacts::kNumForms; ++i)
        fits.push_back(impacts::fit_impact_function(estimates, impacts::form_by_index(i)));
    impacts::DamageModel avg = impacts::model_average(std::move(fits));

    std::string out = "form,weight,weighted_sse,params\n";
    for (std::size_t i = 0; i < avg.members.size(); ++i) {
        const auto& f = avg.members[i];
        out += std::string(impacts::form_name(f.form)) + "," +
               csv::format_value(avg.weights[i]) + "," + csv::format_value(f.weighted_sse) +
               ",";
        for (std::size_t j = 0; j < f.params.size(); ++j)
            out += (j ? ";" : "") + csv::format_value(f.params[j]);
        out += "\n";
    }
    write_output(outdir, "impact_fits.csv", out);

    auto bins = impacts::histogram(estimates, avg, target_warming, bin_width);
    write_output(outdir, "impact_histogram.csv", impacts::write_histogram_csv(bins));
    std::cout << "model average damage at " << csv::format_value(target_warming)
              << " degC: " << csv::format_value(avg(target_warming)) << " % GDP\n";
    return 0;
}

struct CbaOptions {
    double target = 2.0;
    std::string baseline = "ssp585_like";
    std::string policy;  // empty = bundled default for the target
    double discount_rate = 0.03;
    double eta = 1.0;
    int draws = 2000;
    std::uint64_t seed = 0;
    bool seed_given = false;
    double cost_multiplier = 1.0;
    double coverage_fraction = 0.0;
};

cba::MonteCarloConfig make_config(const CbaOptions& opt, EmissionScenario& baseline,
                                  EmissionScenario& policy) {
    baseline = resolve_scenario(opt.baseline);
    policy = opt.policy.empty()
                 ? fixtures::bundled_scenario(opt.target == 1.5 ? "paris15" : "paris20")
                 : resolve_scenario(opt.policy);
    auto calib = fixtures::calibrated_params();

    cba::MonteCarloConfig cfg;
    cfg.baseline = &baseline;
    cfg.policy = &policy;
    cfg.carbon = calib.carbon;
    cfg.climate = calib.climate;
    cfg.damage = impacts::default_damage_function();
    cfg.cost_model = costs::cost_model_for_target(opt.target);
    cfg.cost_model.multiplier = opt.cost_multiplier;
    cfg.n_draws = opt.draws;
    cfg.seed = opt.seed;
    return cfg;
}

void apply_coverage(cba::BandedPath& benefit, double fraction) {
    for (auto* v : {&benefit.central, &benefit.lo, &benefit.hi})
        for (double& x : *v) x = impacts::coverage_adjust(x, fraction);
}

int cmd_cba(const std::string& outdir, const CbaOptions& opt) {
    EmissionScenario baseline, policy;
    cba::MonteCarloConfig cfg = make_config(opt, baseline, policy);
    cba::CbaResult r = cba::deterministic_cba(cfg, opt.discount_rate);
    if (opt.coverage_fraction > 0.0) {
        apply_coverage(r.benefit, opt.coverage_fraction);
        r = cba::net_benefit(r.years, r.cost, r.years, r.benefit);
        r.discount_rate = opt.discount_rate;
        r.npv_trillion_usd =
            cba::npv(r.years, r.net.central, baseline.gdp, opt.discount_rate);
    }
    const std::string tag = opt.target == 1.5 ? "15" : "20";
    write_output(outdir, "cba_" + tag + ".csv", cba::write_result_csv(r));
    std::cout << "2100 cost " << csv::format_value(r.cost.central.back()) << " % GDP, benefit "
              << csv::format_value(r.benefit.central.back()) << " % GDP, net "
              << csv::format_value(r.net.central.back()) << " % GDP\n"
              << "NPV (rate " << csv::format_value(opt.discount_rate) << ") = "
              << csv::format_value(r.npv_trillion_usd) << " trillion USD\n";
    return 0;
}

int cmd_netben(const std::string& outdir, const CbaOptions& opt) {
    EmissionScenario baseline, policy;
    cba::MonteCarloConfig cfg = make_config(opt, baseline, policy);
    const std::string tag = opt.target == 1.5 ? "15" : "20";
    if (opt.draws <= 0) {
        cba::CbaResult r = cba::deterministic_cba(cfg, opt.discount_rate);
        write_output(outdir, "netben_" + tag + ".csv", cba::write_result_csv(r));
        return 0;
    }
    if (!opt.seed_given) throw std::runtime_error("--seed is required when --draws > 0");
    cba::MonteCarloResult mc = cba::monte_carlo(cfg, opt.discount_rate);
    write_output(outdir, "netben_" + tag + ".csv", cba::write_result_csv(mc));
    write_output(outdir, "netben_" + tag + "_percentiles.csv",
                 cba::write_percentiles_csv(mc));
    std::cout << "2100 net benefit p50 " << csv::format_value(mc.net.p[2].back())
              << " % GDP (p5 " << csv::format_value(mc.net.p[0].back()) << ", p95 "
              << csv::format_value(mc.net.p[4].back()) << ")\n";
    return 0;
}

int cmd_npv(const std::string& outdir, const CbaOptions& opt, bool rate_given,
            bool eta_given) {
    EmissionScenario baseline, policy;
    cba::MonteCarloConfig cfg = make_config(opt, baseline, policy);
    if (opt.draws > 0 && !opt.seed_given)
        throw std::runtime_error("--seed is required when --draws > 0");

    std::vector<double> rates = rate_given ? std::vector<double>{opt.discount_rate}
                                           : std::vector<double>{0.0, 0.01, 0.03, 0.05};
    std::vector<double> etas =
        eta_given ? std::vector<double>{opt.eta} : std::vector<double>{0.0, 1.0, 2.0};

    std::string out = "target,discount_rate,eta,npv_trillion_usd,ce_trillion_usd\n";
    for (double rate : rates) {
        cba::CbaResult det = cba::deterministic_cba(cfg, rate);
        // consumption-equivalent wealth: discounted GDP plus the policy NPV
        std::vector<double> all_gdp(baseline.size(), 100.0);
        const double wealth = cba::npv(baseline.years, all_gdp, baseline.gdp, rate);
        std::vector<double> ce_samples;
        if (opt.draws > 0) {
            cba::MonteCarloResult mc = cba::monte_carlo(cfg, rate);
            ce_samples.reserve(mc.npv_draws.size());
            for (double v : mc.npv_draws) ce_samples.push_back(wealth + v);
        }
        for (double eta : etas) {
            double ce = det.npv_trillion_usd;
            if (!ce_samples.empty())
                ce = cba::certainty_equivalent(ce_samples, eta) - wealth;
            out += csv::format_value(opt.target) + "," + csv::format_value(rate) + "," +
                   csv::format_value(eta) + "," + csv::format_value(det.npv_trillion_usd) +
                   "," + csv::format_value(ce) + "\n";
        }
    }
    write_output(outdir, "npv_summary.csv", out);
    std::cout << out;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"climate-economy cost-benefit toolkit for the Paris temperature targets"};
    app.set_config("--config")->configurable(false);

    std::string outdir = default_output_dir();
    app.add_option("-o,--output-dir", outdir, "output directory")
        ->envname("PARISCBA_OUTPUT_DIR");

    // kaya
    auto* kaya_cmd = app.add_subcommand("kaya", "Kaya identity growth-rate report");
    std::string kaya_scenario = "historical_kaya";
    std::string kaya_periods = "1965-1999,1999-2011,2011-2021";
    bool geometric = false;
    kaya_cmd->add_option("-s,--scenario", kaya_scenario, "bundled name or CSV path");
    kaya_cmd->add_option("--periods", kaya_periods, "comma-separated START-END list");
    kaya_cmd->add_flag("--geometric", geometric, "geometric instead of log growth rates");

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "concentration/temperature trajectory");
    std::string sim_scenario = "ssp585_like";
    sim_cmd->add_option("-s,--scenario", sim_scenario, "bundled name or CSV path");

    // efficacy
    auto* eff_cmd = app.add_subcommand("efficacy", "carbon-tax efficacy table");
    std::string records_path;
    eff_cmd->add_option("--records", records_path, "tax records CSV (default: bundled)");

    // impacts
    auto* imp_cmd = app.add_subcommand("impacts", "fit impact functions, histogram");
    std::string estimates_path;
    double target_warming = 2.5, bin_width = 1.0;
    imp_cmd->add_option("--estimates", estimates_path,
                        "estimates CSV (default: bundled synthetic set)");
    imp_cmd->add_option("--target-warming", target_warming, "common warming level, degC");
    imp_cmd->add_option("--bin-width", bin_width, "histogram bin width, % GDP");

    // shared cost-benefit options
    CbaOptions opt;
    auto add_cba_options = [&](CLI::App* cmd, bool with_mc) {
        cmd->add_option("--target", opt.target, "temperature target, degC")
            ->check(CLI::IsMember({1.5, 2.0}));
        cmd->add_option("--baseline", opt.baseline, "baseline scenario name or path");
        cmd->add_option("--policy", opt.policy, "policy scenario name or path");
        cmd->add_option("--discount-rate", opt.discount_rate, "per-year discount rate");
        cmd->add_option("--cost-multiplier", opt.cost_multiplier,
                        "second-best implementation cost multiplier");
        cmd->add_option("--coverage-fraction", opt.coverage_fraction,
                        "impact coverage underestimate fraction in [0,1)");
        if (with_mc) {
            cmd->add_option("--draws", opt.draws, "Monte Carlo draws (0 = deterministic)");
            cmd->add_option("--seed", opt.seed, "RNG seed (required when draws > 0)");
        }
    };

    auto* cba_cmd = app.add_subcommand("cba", "cost and benefit trajectories");
    add_cba_options(cba_cmd, false);

    auto* net_cmd = app.add_subcommand("netben", "net benefits with uncertainty bands");
    add_cba_options(net_cmd, true);

    auto* npv_cmd = app.add_subcommand("npv", "NPV and certainty-equivalent summary");
    add_cba_options(npv_cmd, true);
    npv_cmd->add_option("--eta", opt.eta, "relative risk aversion");

    auto* fix_cmd = app.add_subcommand("fixtures", "write the bundled CSV files");

    app.require_subcommand(1);
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();
    CLI11_PARSE(app, argc, argv);

    opt.seed_given = net_cmd->count("--seed") > 0 || npv_cmd->count("--seed") > 0;

    try {
        if (*kaya_cmd) return cmd_kaya(outdir, kaya_scenario, kaya_periods, geometric);
        if (*sim_cmd) return cmd_simulate(outdir, sim_scenario);
        if (*eff_cmd) return cmd_efficacy(outdir, records_path);
        if (*imp_cmd) return cmd_impacts(outdir, estimates_path, target_warming, bin_width);
        if (*cba_cmd) return cmd_cba(outdir, opt);
        if (*net_cmd) return cmd_netben(outdir, opt);
        if (*npv_cmd)
            return cmd_npv(outdir, opt, npv_cmd->count("--discount-rate") > 0,
                           npv_cmd->count("--eta") > 0);
        if (*fix_cmd) {
            fixtures::write_all(outdir);
            std::cout << "wrote bundled fixtures to " << outdir << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
