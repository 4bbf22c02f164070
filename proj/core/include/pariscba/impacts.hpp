#ifndef PARISCBA_IMPACTS_HPP
#define PARISCBA_IMPACTS_HPP

#include <string>
#include <vector>

namespace pariscba::impacts {

/// One published estimate of the total economic impact of climate change.
/// `impact` keeps the published sign (positive = benefit); conversion to a
/// positive-loss convention happens at fit time.
struct ImpactEstimate {
    std::string paper_id;
    double warming_c = 0.0;      // > 0
    double impact_pct_gdp = 0.0; // published sign
    double weight = 0.0;         // 1/papers * 1/estimates-in-paper
};

enum class Form {
    linear,              // a*T
    quadratic_no_linear, // b*T^2
    quadratic,           // a*T + b*T^2
    exponential,         // c*(exp(k*T) - 1), k profiled by 1-D search
    piecewise_linear,    // two segments joined at a fixed 2.5 degC knot
    power,               // c*T^g, g profiled by 1-D search
    cubic,               // a*T + b*T^2 + c*T^3
};

const char* form_name(Form f);
inline constexpr int kNumForms = 7;
Form form_by_index(int i);

/// A fitted damage function D(T), welfare loss in % GDP, D(0) = 0.
struct ImpactFunction {
    Form form = Form::quadratic;
    std::vector<double> params;
    double fit_weight = 0.0;    // filled by model_average
    double weighted_sse = 0.0;  // goodness-of-fit from the fitting step

    double operator()(double warming_c) const;
};

/// Fit-weighted mixture of fitted functions; evaluates as sum w_i * D_i(T).
struct DamageModel {
    std::vector<ImpactFunction> members;
    std::vector<double> weights;  // sum to 1

    double operator()(double warming_c) const;
    static DamageModel single(ImpactFunction f);
};

/// Two-piece spread around a central damage path; right-skewed when
/// sd_above > sd_below. Values are multiplicative fractions of the
/// central estimate.
struct UncertaintyBand {
    double sd_below = 0.5;
    double sd_above = 0.75;
};

/// Read an estimates CSV (`paper_id,warming_c,impact_pct_gdp`) and assign
/// each paper an equal share of the total weight, split equally across its
/// estimates.
std::vector<ImpactEstimate> load_estimates(const std::string& path);
std::vector<ImpactEstimate> parse_estimates(const std::string& csv_text);

/// Weighted least squares with the D(0)=0 constraint built into every
/// functional form. Throws on singular designs or too few estimates.
ImpactFunction fit_impact_function(const std::vector<ImpactEstimate>& estimates, Form form);

/// Fit all seven forms and combine them with weights proportional to
/// exp(-SSE/(2*sigma^2)), sigma^2 estimated from the best fit.
DamageModel model_average(std::vector<ImpactFunction> fits);

/// Welfare loss in % GDP at a given warming; D(0) = 0.
double damage(double warming_c, const DamageModel& model);

/// Rescale a published estimate to a common warming level along the model
/// average: impact * D(target)/D(estimate warming).
double scale_estimate(const ImpactEstimate& e, double target_warming_c,
                      const DamageModel& composite);

/// Per-year avoided damages D(T_baseline) - D(T_policy), % GDP.
std::vector<double> benefit(const std::vector<int>& years,
                            const std::vector<double>& baseline_t,
                            const std::vector<int>& policy_years,
                            const std::vector<double>& policy_t,
                            const DamageModel& model);

/// Correct a damage estimate for incomplete sectoral coverage:
/// d / (1 - underestimate_fraction). Off (fraction 0) by default.
double coverage_adjust(double damage_pct_gdp, double underestimate_fraction);

/// Default damage function: quadratic a*T + b*T^2 with (a, b) solved from
/// the four end-of-century avoided-damage anchors of the reference
/// analysis (baselines 4.8/3.9 degC against 2.0/1.5 degC policy paths).
DamageModel default_damage_function();

/// Weighted histogram of estimates rescaled to a common warming.
struct HistogramBin {
    double lower, upper, weighted_frequency;
};
std::vector<HistogramBin> histogram(const std::vector<ImpactEstimate>& estimates,
                                    const DamageModel& composite, double target_warming_c,
                                    double bin_width = 1.0);
std::string write_histogram_csv(const std::vector<HistogramBin>& bins);

}  // namespace pariscba::impacts

#endif
