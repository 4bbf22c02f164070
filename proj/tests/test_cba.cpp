#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pariscba/cba.hpp"
#include "pariscba/fixtures.hpp"

using namespace pariscba;
using namespace pariscba::cba;

namespace {

MonteCarloConfig base_config(const EmissionScenario& baseline,
                             const EmissionScenario& policy) {
    MonteCarloConfig cfg;
    cfg.baseline = &baseline;
    cfg.policy = &policy;
    auto cal = fixtures::calibrated_params();
    cfg.carbon = cal.carbon;
    cfg.climate = cal.climate;
    cfg.damage = impacts::default_damage_function();
    cfg.cost_model = costs::cost_model_20();
    return cfg;
}

}  // namespace

TEST_CASE("npv matches the geometric-series closed form") {
    // constant 1% of a constant 100 trillion USD economy for 81 years
    std::vector<int> years;
    std::vector<double> path, gdp;
    for (int y = 2020; y <= 2100; ++y) {
        years.push_back(y);
        path.push_back(1.0);
        gdp.push_back(100.0);
    }
    const double r = 0.03, q = 1.0 / (1.0 + r);
    const double closed = 1.0 * (1.0 - std::pow(q, 81)) / (1.0 - q);
    CHECK(npv(years, path, gdp, r) == doctest::Approx(closed).epsilon(1e-9));
    // zero rate degenerates to a plain sum
    CHECK(npv(years, path, gdp, 0.0) == doctest::Approx(81.0).epsilon(1e-12));
}

TEST_CASE("ramsey rate is the textbook sum") {
    CHECK(ramsey_rate(0.01, 1.0, 0.02) == doctest::Approx(0.03));
    CHECK(ramsey_rate(0.0, 2.0, 0.015) == doctest::Approx(0.03));
}

TEST_CASE("certainty equivalent special cases") {
    std::vector<double> s{1.0, 2.0, 4.0};
    CHECK(certainty_equivalent(s, 0.0) == doctest::Approx(7.0 / 3.0).epsilon(1e-12));
    CHECK(certainty_equivalent(s, 1.0) == doctest::Approx(2.0).epsilon(1e-12));  // geometric
    // degenerate distribution: CE equals the point mass at every eta
    std::vector<double> c{3.0, 3.0, 3.0};
    for (double eta : {0.0, 0.5, 1.0, 2.0})
        CHECK(certainty_equivalent(c, eta) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("certainty equivalent domain errors") {
    CHECK_THROWS_AS(certainty_equivalent({1.0, 0.0}, 1.0), std::domain_error);
    CHECK_THROWS_AS(certainty_equivalent({1.0, -1.0}, 0.5), std::domain_error);
    CHECK_NOTHROW(certainty_equivalent({1.0, -1.0}, 0.0));
    CHECK_THROWS_WITH(certainty_equivalent({}, 1.0), doctest::Contains("two samples"));
}

TEST_CASE("certainty equivalent is at most the mean and decreasing in eta") {
    std::mt19937 gen(99);
    std::lognormal_distribution<double> dist(0.0, 0.6);
    for (int set = 0; set < 100; ++set) {
        std::vector<double> s;
        for (int i = 0; i < 40; ++i) s.push_back(dist(gen));
        const double mean = certainty_equivalent(s, 0.0);
        double prev = mean;
        for (double eta : {0.5, 1.0, 1.5, 2.0}) {
            const double ce = certainty_equivalent(s, eta);
            CHECK(ce <= mean + 1e-12);
            CHECK(ce <= prev + 1e-12);
            prev = ce;
        }
    }
}

TEST_CASE("percentile interpolates linearly and keeps order") {
    std::vector<double> s{4.0, 1.0, 3.0, 2.0};
    CHECK(percentile(s, 0.0) == doctest::Approx(1.0));
    CHECK(percentile(s, 100.0) == doctest::Approx(4.0));
    CHECK(percentile(s, 50.0) == doctest::Approx(2.5));
    CHECK(percentile(s, 25.0) == doctest::Approx(1.75));
}

TEST_CASE("net_benefit combines bands in quadrature") {
    std::vector<int> years{2050, 2051};
    BandedPath cost{{1.0, 1.0}, {0.5, 0.5}, {1.5, 1.5}};
    BandedPath ben{{2.0, 2.0}, {1.0, 1.0}, {3.0, 3.0}};
    auto r = net_benefit(years, cost, years, ben);
    CHECK(r.net.central[0] == doctest::Approx(1.0));
    const double half = std::sqrt(0.5 * 0.5 + 1.0 * 1.0);
    CHECK(r.net.lo[0] == doctest::Approx(1.0 - half).epsilon(1e-12));
    CHECK(r.net.hi[0] == doctest::Approx(1.0 + half).epsilon(1e-12));

    std::vector<int> other{2050, 2052};
    CHECK_THROWS_AS(net_benefit(years, cost, other, ben), std::runtime_error);
}

TEST_CASE("deterministic run equals the zero-variance Monte Carlo bitwise") {
    auto baseline = fixtures::ssp585_like();
    auto policy = fixtures::paris20();
    auto cfg = base_config(baseline, policy);
    cfg.ecs_sigma_log = 0.0;
    cfg.damage_band = {0.0, 0.0};
    cfg.cost_model.sd_across_models = 0.0;
    cfg.n_draws = 64;
    cfg.seed = 5;

    auto det = deterministic_cba(cfg);
    auto mc = monte_carlo(cfg);
    REQUIRE(mc.years == det.years);
    for (std::size_t i = 0; i < det.years.size(); ++i) {
        for (int p = 0; p < 5; ++p) {
            CHECK(mc.cost.p[p][i] == det.cost.central[i]);
            CHECK(mc.benefit.p[p][i] == det.benefit.central[i]);
            CHECK(mc.net.p[p][i] == det.net.central[i]);
        }
    }
    for (double v : mc.npv_draws) CHECK(v == det.npv_trillion_usd);
}

TEST_CASE("fixed seed is bit-reproducible across thread counts") {
    auto baseline = fixtures::ssp585_like();
    auto policy = fixtures::paris20();
    auto cfg = base_config(baseline, policy);
    cfg.n_draws = 128;
    cfg.seed = 42;

    cfg.threads = 1;
    auto one = monte_carlo(cfg);
    cfg.threads = 3;
    auto three = monte_carlo(cfg);
    cfg.threads = 8;
    auto eight = monte_carlo(cfg);

    CHECK(one.npv_draws == three.npv_draws);
    CHECK(one.npv_draws == eight.npv_draws);
    for (int p = 0; p < 5; ++p) {
        CHECK(one.net.p[p] == three.net.p[p]);
        CHECK(one.net.p[p] == eight.net.p[p]);
    }

    // and a different seed actually changes the draws
    cfg.seed = 43;
    auto other = monte_carlo(cfg);
    CHECK(one.npv_draws != other.npv_draws);
}

TEST_CASE("percentile paths are nested") {
    auto baseline = fixtures::ssp585_like();
    auto policy = fixtures::paris15();
    auto cfg = base_config(baseline, policy);
    cfg.cost_model = costs::cost_model_15();
    cfg.n_draws = 400;
    cfg.seed = 11;
    auto mc = monte_carlo(cfg);
    for (std::size_t i = 0; i < mc.years.size(); ++i)
        for (int p = 1; p < 5; ++p) {
            CHECK(mc.cost.p[p][i] >= mc.cost.p[p - 1][i]);
            CHECK(mc.benefit.p[p][i] >= mc.benefit.p[p - 1][i]);
            CHECK(mc.net.p[p][i] >= mc.net.p[p - 1][i]);
        }
}

TEST_CASE("the median drifts little as draws increase") {
    auto baseline = fixtures::ssp585_like();
    auto policy = fixtures::paris20();
    auto cfg = base_config(baseline, policy);
    cfg.seed = 2024;

    cfg.n_draws = 1000;
    auto small = monte_carlo(cfg);
    cfg.n_draws = 8000;
    auto large = monte_carlo(cfg);

    const std::size_t last = small.years.size() - 1;
    CHECK(std::abs(small.net.p[2][last] - large.net.p[2][last]) <= 0.12);
    CHECK(std::abs(percentile(small.npv_draws, 50.0) -
                   percentile(large.npv_draws, 50.0)) <= 12.0);
}

TEST_CASE("result CSVs carry one row per year") {
    auto baseline = fixtures::ssp585_like();
    auto policy = fixtures::paris20();
    auto cfg = base_config(baseline, policy);
    auto det = deterministic_cba(cfg);
    auto text = write_result_csv(det);
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == det.years.size() + 1);

    cfg.n_draws = 50;
    cfg.seed = 1;
    auto mc = monte_carlo(cfg);
    auto ptext = write_percentiles_csv(mc);
    lines = 0;
    for (char c : ptext)
        if (c == '\n') ++lines;
    CHECK(lines == mc.years.size() + 1);
}
