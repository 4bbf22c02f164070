#include "pariscba/impacts.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "pariscba/csv.hpp"

namespace pariscba::impacts {

namespace {

constexpr double kPiecewiseKnot = 2.5;  // degC

}  // namespace

const char* form_name(Form f) {
    switch (f) {
        case Form::linear: return "linear";
        case Form::quadratic_no_linear: return "quadratic_no_linear";
        case Form::quadratic: return "quadratic";
        case Form::exponential: return "exponential";
        case Form::piecewise_linear: return "piecewise_linear";
        case Form::power: return "power";
        case Form::cubic: return "cubic";
    }
    return "?";
}

Form form_by_index(int i) {
    static const Form forms[kNumForms] = {
        Form::linear,      Form::quadratic_no_linear, Form::quadratic, Form::exponential,
        Form::piecewise_linear, Form::power,          Form::cubic};
    if (i < 0 || i >= kNumForms) throw std::out_of_range("form index");
    return forms[i];
}

double ImpactFunction::operator()(double t) const {
    switch (form) {
        case Form::linear:
            return params[0] * t;
        case Form::quadratic_no_linear:
            return params[0] * t * t;
        case Form::quadratic:
            return params[0] * t + params[1] * t * t;
        case Form::cubic:
            return params[0] * t + params[1] * t * t + params[2] * t * t * t;
        case Form::exponential:
            return params[0] * (std::exp(params[1] * t) - 1.0);
        case Form::power:
            return t <= 0.0 ? 0.0 : params[0] * std::pow(t, params[1]);
        case Form::piecewise_linear: {
            const double knot = params[2];
            return params[0] * std::min(t, knot) + params[1] * std::max(t - knot, 0.0);
        }
    }
    return 0.0;
}

double DamageModel::operator()(double t) const {
    double d = 0.0;
    for (std::size_t i = 0; i < members.size(); ++i) d += weights[i] * members[i](t);
    return d;
}

DamageModel DamageModel::single(ImpactFunction f) {
    DamageModel m;
    f.fit_weight = 1.0;
    m.members.push_back(std::move(f));
    m.weights.push_back(1.0);
    return m;
}

std::vector<ImpactEstimate> parse_estimates(const std::string& csv_text) {
    csv::Table t = csv::parse(csv_text, "estimates");
    const std::size_t cp = t.require_column("paper_id");
    const std::size_t cw = t.require_column("warming_c");
    const std::size_t ci = t.require_column("impact_pct_gdp");

    std::vector<ImpactEstimate> out;
    std::map<std::string, int> per_paper;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        ImpactEstimate e;
        e.paper_id = t.rows[r][cp];
        e.warming_c = csv::to_double(t.rows[r][cw], r, "warming_c");
        e.impact_pct_gdp = csv::to_double(t.rows[r][ci], r, "impact_pct_gdp");
        if (!(e.warming_c > 0.0))
            throw std::runtime_error("row " + std::to_string(r + 1) +
                                     ": warming_c must be positive");
        per_paper[e.paper_id]++;
        out.push_back(std::move(e));
    }
    if (out.empty()) throw std::runtime_error("estimates file has no rows");
    const double paper_share = 1.0 / static_cast<double>(per_paper.size());
    for (auto& e : out) e.weight = paper_share / per_paper[e.paper_id];
    return out;
}

std::vector<ImpactEstimate> load_estimates(const std::string& path) {
    csv::Table t = csv::read_file(path);  // reuse file errors
    std::string text;
    text += "paper_id,warming_c,impact_pct_gdp\n";
    // Rebuild minimal text so parse_estimates owns validation; avoids
    // duplicating the column logic here.
    const std::size_t cp = t.require_column("paper_id");
    const std::size_t cw = t.require_column("warming_c");
    const std::size_t ci = t.require_column("impact_pct_gdp");
    for (const auto& row : t.rows)
        text += row[cp] + "," + row[cw] + "," + row[ci] + "\n";
    return parse_estimates(text);
}

namespace {

// Solve the k x k normal equations by Gaussian elimination with partial
// pivoting; throws on (near-)singular designs.
std::vector<double> solve_normal_equations(const std::vector<std::vector<double>>& basis,
                                           const std::vector<double>& y,
                                           const std::vector<double>& w) {
    const std::size_t n = y.size();
    const std::size_t k = basis.size();
    std::vector<std::vector<double>> a(k, std::vector<double>(k + 1, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t r = 0; r < n; ++r) a[i][j] += w[r] * basis[i][r] * basis[j][r];
        for (std::size_t r = 0; r < n; ++r) a[i][k] += w[r] * basis[i][r] * y[r];
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-12)
            throw std::runtime_error("fit_impact_function: singular design matrix");
        std::swap(a[col], a[piv]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= k; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<double> x(k);
    for (std::size_t i = 0; i < k; ++i) x[i] = a[i][k] / a[i][i];
    return x;
}

struct LinearFit {
    std::vector<double> params;
    double sse = 0.0;
};

LinearFit fit_linear_in_params(const std::vector<ImpactEstimate>& est,
                               const std::vector<double>& y, const std::vector<double>& w,
                               Form form, double shape) {
    const std::size_t n = est.size();
    auto basis_of = [&](double t) -> std::vector<double> {
        switch (form) {
            case Form::linear: return {t};
            case Form::quadratic_no_linear: return {t * t};
            case Form::quadratic: return {t, t * t};
            case Form::cubic: return {t, t * t, t * t * t};
            case Form::exponential: return {std::exp(shape * t) - 1.0};
            case Form::power: return {t <= 0.0 ? 0.0 : std::pow(t, shape)};
            case Form::piecewise_linear:
                return {std::min(t, kPiecewiseKnot), std::max(t - kPiecewiseKnot, 0.0)};
        }
        return {};
    };
    const std::size_t k = basis_of(1.0).size();
    std::vector<std::vector<double>> basis(k, std::vector<double>(n));
    for (std::size_t r = 0; r < n; ++r) {
        auto b = basis_of(est[r].warming_c);
        for (std::size_t i = 0; i < k; ++i) basis[i][r] = b[i];
    }
    LinearFit fit;
    fit.params = solve_normal_equations(basis, y, w);
    for (std::size_t r = 0; r < n; ++r) {
        double pred = 0.0;
        for (std::size_t i = 0; i < k; ++i) pred += fit.params[i] * basis[i][r];
        fit.sse += w[r] * (y[r] - pred) * (y[r] - pred);
    }
    return fit;
}

template <typename F>
double golden_min(F f, double lo, double hi, int iters = 80) {
    constexpr double phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1; x1 = b - phi * (b - a); f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2; x2 = a + phi * (b - a); f2 = f(x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

std::size_t param_count(Form form) {
    switch (form) {
        case Form::linear:
        case Form::quadratic_no_linear:
        case Form::exponential:
        case Form::power: return 1;
        case Form::quadratic:
        case Form::piecewise_linear: return 2;
        case Form::cubic: return 3;
    }
    return 0;
}

}  // namespace

ImpactFunction fit_impact_function(const std::vector<ImpactEstimate>& estimates, Form form) {
    if (estimates.size() < param_count(form))
        throw std::runtime_error("fit_impact_function: fewer estimates than parameters");
    const std::size_t n = estimates.size();
    std::vector<double> y(n), w(n);
    double wsum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = -estimates[i].impact_pct_gdp;  // store losses as positive
        w[i] = estimates[i].weight;
        wsum += w[i];
    }
    if (wsum <= 0.0)
        for (auto& wi : w) wi = 1.0 / static_cast<double>(n);

    ImpactFunction f;
    f.form = form;
    if (form == Form::exponential || form == Form::power) {
        const double lo = form == Form::exponential ? 0.05 : 0.3;
        const double hi = form == Form::exponential ? 1.5 : 4.0;
        const double shape = golden_min(
            [&](double s) { return fit_linear_in_params(estimates, y, w, form, s).sse; },
            lo, hi);
        LinearFit lf = fit_linear_in_params(estimates, y, w, form, shape);
        f.params = {lf.params[0], shape};
        f.weighted_sse = lf.sse;
    } else {
        LinearFit lf = fit_linear_in_params(estimates, y, w, form, 0.0);
        f.params = lf.params;
        if (form == Form::piecewise_linear) f.params.push_back(kPiecewiseKnot);
        f.weighted_sse = lf.sse;
    }
    return f;
}

DamageModel model_average(std::vector<ImpactFunction> fits) {
    if (fits.empty()) throw std::runtime_error("model_average: no fits");
    double best = fits.front().weighted_sse;
    for (const auto& f : fits) best = std::min(best, f.weighted_sse);

    DamageModel m;
    std::vector<double> w(fits.size());
    double wsum = 0.0;
    const double sigma2 = best;
    for (std::size_t i = 0; i < fits.size(); ++i) {
        // likelihood-proportional weighting with sigma^2 from the best fit;
        // a perfect best fit collapses the weight onto the perfect members
        w[i] = sigma2 < 1e-12 ? (fits[i].weighted_sse < 1e-12 ? 1.0 : 0.0)
                              : std::exp(-fits[i].weighted_sse / (2.0 * sigma2));
        wsum += w[i];
    }
    for (std::size_t i = 0; i < fits.size(); ++i) {
        fits[i].fit_weight = w[i] / wsum;
        m.weights.push_back(fits[i].fit_weight);
        m.members.push_back(std::move(fits[i]));
    }
    return m;
}

double damage(double warming_c, const DamageModel& model) {
    if (warming_c < 0.0) throw std::domain_error("damage: warming must be >= 0");
    return model(warming_c);
}

double scale_estimate(const ImpactEstimate& e, double target_warming_c,
                      const DamageModel& composite) {
    const double at_est = composite(e.warming_c);
    if (std::abs(at_est) < 1e-12)
        throw std::domain_error("scale_estimate: composite damage vanishes at " +
                                csv::format_value(e.warming_c) + " degC");
    return e.impact_pct_gdp * composite(target_warming_c) / at_est;
}

std::vector<double> benefit(const std::vector<int>& years,
                            const std::vector<double>& baseline_t,
                            const std::vector<int>& policy_years,
                            const std::vector<double>& policy_t,
                            const DamageModel& model) {
    if (years != policy_years)
        throw std::runtime_error("benefit: baseline and policy paths are misaligned");
    if (baseline_t.size() != years.size() || policy_t.size() != years.size())
        throw std::runtime_error("benefit: series length mismatch");
    std::vector<double> b(years.size());
    for (std::size_t i = 0; i < years.size(); ++i)
        b[i] = model(std::max(baseline_t[i], 0.0)) - model(std::max(policy_t[i], 0.0));
    return b;
}

double coverage_adjust(double damage_pct_gdp, double underestimate_fraction) {
    if (underestimate_fraction < 0.0 || underestimate_fraction >= 1.0)
        throw std::domain_error("coverage_adjust: fraction must be in [0, 1)");
    return damage_pct_gdp / (1.0 - underestimate_fraction);
}

DamageModel default_damage_function() {
    // End-of-century avoided-damage anchors: baselines at 4.8 and 3.9 degC,
    // policy paths near 2.0 and 1.5 degC. The 4.8-based pair pins the
    // quadratic exactly; the 3.9-based pair serves as a held-out check.
    constexpr double tb = 4.8, t20 = 2.0, t15 = 1.5;
    constexpr double d20 = 2.8, d15 = 3.1;
    const double a11 = tb - t20, a12 = tb * tb - t20 * t20;
    const double a21 = tb - t15, a22 = tb * tb - t15 * t15;
    const double det = a11 * a22 - a12 * a21;
    const double a = (d20 * a22 - a12 * d15) / det;
    const double b = (a11 * d15 - d20 * a21) / det;

    ImpactFunction f;
    f.form = Form::quadratic;
    f.params = {a, b};
    return DamageModel::single(std::move(f));
}

std::vector<HistogramBin> histogram(const std::vector<ImpactEstimate>& estimates,
                                    const DamageModel& composite, double target_warming_c,
                                    double bin_width) {
    if (estimates.empty()) return {};
    std::vector<double> scaled(estimates.size());
    for (std::size_t i = 0; i < estimates.size(); ++i)
        scaled[i] = scale_estimate(estimates[i], target_warming_c, composite);
    const double lo = std::floor(*std::min_element(scaled.begin(), scaled.end()) / bin_width) *
                      bin_width;
    const double hi = *std::max_element(scaled.begin(), scaled.end());
    std::vector<HistogramBin> bins;
    for (double b = lo; b < hi + 1e-12; b += bin_width)
        bins.push_back({b, b + bin_width, 0.0});
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        auto idx = static_cast<std::size_t>((scaled[i] - lo) / bin_width);
        if (idx >= bins.size()) idx = bins.size() - 1;
        bins[idx].weighted_frequency += estimates[i].weight;
    }
    return bins;
}

std::string write_histogram_csv(const std::vector<HistogramBin>& bins) {
    std::string out = "bin_lower,bin_upper,weighted_frequency\n";
    for (const auto& b : bins)
        out += csv::format_value(b.lower) + "," + csv::format_value(b.upper) + "," +
               csv::format_value(b.weighted_frequency) + "\n";
    return out;
}

}  // namespace pariscba::impacts
