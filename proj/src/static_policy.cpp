#include "rrp/static_policy.hpp"

#include <algorithm>
#include <cmath>

namespace rrp {

double RatioTuple::min_objective() const {
    return std::min({profit, market_share, service_level});
}

double constructed_static_rate(const Instance& inst, const Policy& pol) {
    const SteadyState ss = steady_state(inst, pol);
    const double stock_in = ss.stock_in();
    double mean = 0.0;
    for (int i = 1; i <= inst.capacity; ++i) mean += pol.rates[i - 1] * ss.probs[i];
    if (!(stock_in > 0.0) || mean == 0.0) return 0.0;
    return mean / stock_in;
}

double constructed_static_rate(const Instance& inst, const DynamicSolution& dyn) {
    return constructed_static_rate(inst, dyn.policy);
}

namespace {

template <typename F>
double golden_max(const F& f, double lo, double hi, double tol, double* best_value) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    double xb = f1 >= f2 ? x1 : x2;
    double fb = std::max(f1, f2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = f(x1);
        }
        if (f1 > fb) {
            fb = f1;
            xb = x1;
        }
        if (f2 > fb) {
            fb = f2;
            xb = x2;
        }
    }
    if (best_value) *best_value = fb;
    return xb;
}

}  // namespace

double best_static_rate(const Instance& inst) {
    inst.validate();
    const auto value_at = [&](double rate) {
        return weighted_value(inst, Policy::constant(inst.capacity, rate));
    };

    constexpr int kGrid = 2000;
    const double step = inst.rate_cap / (kGrid - 1);
    int best_k = 0;
    double best_f = value_at(0.0);
    for (int k = 1; k < kGrid; ++k) {
        const double f = value_at(k * step);
        if (f > best_f) {
            best_f = f;
            best_k = k;
        }
    }

    const double lo = std::max(0.0, (best_k - 1) * step);
    const double hi = std::min(inst.rate_cap, (best_k + 1) * step);
    double refined_f = 0.0;
    const double refined = golden_max(value_at, lo, hi, 1e-10, &refined_f);
    return refined_f > best_f ? refined : best_k * step;
}

namespace {

double safe_ratio(double value_static, double value_opt) {
    if (value_opt == 0.0) return 1.0;  // 0/0 := 1; min(s/0, 1) = 1
    return value_static / value_opt;
}

RatioTuple ratios_against(const Weights& w, const ObjectiveTriple& stat,
                          const ObjectiveTriple& opt) {
    RatioTuple r;
    r.profit = safe_ratio(stat.profit, opt.profit);
    r.market_share = safe_ratio(stat.market_share, opt.market_share);
    r.service_level = safe_ratio(stat.service_level, opt.service_level);
    r.weighted = safe_ratio(weighted_value(w, stat), weighted_value(w, opt));
    return r;
}

}  // namespace

StaticReport ratio_report(const Instance& inst, const DynamicSolution& dyn) {
    StaticReport report;
    report.lambda_tilde = constructed_static_rate(inst, dyn);
    report.lambda_best = best_static_rate(inst);
    report.optimal_value = dyn.value;
    report.tilde_value = objectives(inst, Policy::constant(inst.capacity, report.lambda_tilde));
    report.best_value = objectives(inst, Policy::constant(inst.capacity, report.lambda_best));
    report.ratios_tilde = ratios_against(inst.weights, report.tilde_value, report.optimal_value);
    report.ratios_best = ratios_against(inst.weights, report.best_value, report.optimal_value);
    return report;
}

}  // namespace rrp
