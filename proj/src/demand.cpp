#include "rrp/demand.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rrp {

std::string to_string(DemandFamily family) {
    switch (family) {
        case DemandFamily::Linear: return "linear";
        case DemandFamily::Exponential: return "exponential";
        case DemandFamily::Logistic: return "logistic";
        case DemandFamily::Reciprocal: return "reciprocal";
    }
    return "unknown";
}

DemandFamily family_from_string(const std::string& name) {
    if (name == "linear") return DemandFamily::Linear;
    if (name == "exponential") return DemandFamily::Exponential;
    if (name == "logistic") return DemandFamily::Logistic;
    if (name == "reciprocal") return DemandFamily::Reciprocal;
    throw std::invalid_argument("unknown demand family: " + name);
}

void Weights::validate() const {
    if (alpha1 < 0.0 || alpha2 < 0.0 || alpha3 < 0.0)
        throw std::invalid_argument("objective weights must be nonnegative");
    if (std::abs(alpha1 + alpha2 + alpha3 - 1.0) > 1e-12)
        throw std::invalid_argument("objective weights must sum to 1");
}

DemandCurve::DemandCurve(DemandFamily f, double a, double b, double p0)
    : family_(f), a_(a), b_(b), p0_(p0) {
    if (f != DemandFamily::Reciprocal) {
        if (!(a > 0.0)) throw std::invalid_argument("price sensitivity a must be > 0");
        if (!(b > 0.0)) throw std::invalid_argument("max demand rate b must be > 0");
    }
    if (f == DemandFamily::Logistic) {
        if (p0 < 0.0) throw std::invalid_argument("inflection price p0 must be >= 0");
        eps_ = std::exp(-a_ * p0_);
    }
}

DemandCurve DemandCurve::linear(double a, double b) {
    return DemandCurve(DemandFamily::Linear, a, b, 0.0);
}
DemandCurve DemandCurve::exponential(double a, double b) {
    return DemandCurve(DemandFamily::Exponential, a, b, 0.0);
}
DemandCurve DemandCurve::logistic(double a, double b, double p0) {
    return DemandCurve(DemandFamily::Logistic, a, b, p0);
}
DemandCurve DemandCurve::reciprocal() {
    return DemandCurve(DemandFamily::Reciprocal, 0.0, 0.0, 0.0);
}

double DemandCurve::max_rate() const {
    if (!has_finite_max_rate())
        throw std::domain_error("reciprocal demand has no intrinsic max rate; set Lambda");
    return b_;
}

double DemandCurve::rate_at_price(double price) const {
    switch (family_) {
        case DemandFamily::Linear: {
            if (price < 0.0 || price > b_ / a_)
                throw std::domain_error("price outside [0, b/a] for linear demand");
            return b_ - a_ * price;
        }
        case DemandFamily::Exponential: {
            if (price < 0.0) throw std::domain_error("price must be >= 0");
            return b_ * std::exp(-a_ * price);
        }
        case DemandFamily::Logistic: {
            if (price < 0.0) throw std::domain_error("price must be >= 0");
            const double t = a_ * (price - p0_);
            if (t > 700.0) return b_ * (1.0 + eps_) * std::exp(-t);
            return b_ * (1.0 + eps_) / (1.0 + std::exp(t));
        }
        case DemandFamily::Reciprocal: {
            if (!(price > 0.0)) throw std::domain_error("price must be > 0 for reciprocal demand");
            return 1.0 / price;
        }
    }
    return 0.0;
}

double DemandCurve::price_at_rate(double rate) const {
    if (family_ == DemandFamily::Reciprocal) {
        if (!(rate > 0.0)) throw std::domain_error("rate must be > 0 for reciprocal demand");
        return 1.0 / rate;
    }
    if (!(rate > 0.0) || rate > b_ * (1.0 + 1e-12))
        throw std::domain_error("rate outside (0, b]");
    rate = std::min(rate, b_);
    switch (family_) {
        case DemandFamily::Linear:
            return (b_ - rate) / a_;
        case DemandFamily::Exponential:
            return -std::log(rate / b_) / a_;
        case DemandFamily::Logistic: {
            // (K - rate)/rate with K = b*(1+eps), computed as (b-rate)+b*eps to
            // survive eps underflowing against b.
            double arg = (b_ - rate) + b_ * eps_;
            if (arg <= 0.0) arg = std::numeric_limits<double>::min();
            return p0_ + std::log(arg / rate) / a_;
        }
        default:
            return 0.0;
    }
}

double DemandCurve::profit_rate(double cost, double rate) const {
    if (rate == 0.0) return 0.0;  // no sales, no revenue
    return rate * (price_at_rate(rate) - cost);
}

double DemandCurve::marginal_revenue(double cost, double rate) const {
    switch (family_) {
        case DemandFamily::Linear:
            return (b_ - 2.0 * rate) / a_ - cost;
        case DemandFamily::Exponential:
            return -std::log(rate / b_) / a_ - 1.0 / a_ - cost;
        case DemandFamily::Logistic: {
            double rem = (b_ - rate) + b_ * eps_;  // K - rate
            if (rem <= 0.0) rem = std::numeric_limits<double>::min();
            return price_at_rate(rate) - b_ * (1.0 + eps_) / (a_ * rem) - cost;
        }
        case DemandFamily::Reciprocal:
            return -cost;
    }
    return 0.0;
}

namespace {

// Strictly decreasing marginal revenue lets us solve MR(rate) = target with
// Newton steps guarded by a shrinking bracket.
double solve_logistic_foc(const DemandCurve& curve, double cost, double target, double cap,
                          double tol) {
    const double b = curve.b();
    double hi = std::min(cap, b);
    if (curve.marginal_revenue(cost, hi) >= target) return hi;
    double lo = hi * 1e-18;
    if (curve.marginal_revenue(cost, lo) <= target) return 0.0;

    const double eps = std::exp(-curve.a() * curve.p0());
    const double K = b * (1.0 + eps);
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double f = curve.marginal_revenue(cost, x) - target;
        if (f > 0.0)
            lo = x;
        else
            hi = x;
        double rem = (b - x) + b * eps;
        if (rem <= 0.0) rem = std::numeric_limits<double>::min();
        const double deriv = -K * K / (curve.a() * x * rem * rem);
        double next = x - f / deriv;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) < tol) return next;
        x = next;
    }
    return x;
}

}  // namespace

double maximize_rate_objective(const DemandCurve& curve, double cost, double alpha1,
                               double linear_coef, double cap, double tol) {
    if (alpha1 <= 0.0) return linear_coef > 0.0 ? cap : 0.0;

    switch (curve.family()) {
        case DemandFamily::Linear: {
            const double vertex =
                0.5 * (curve.b() - curve.a() * cost + curve.a() * linear_coef / alpha1);
            return std::clamp(vertex, 0.0, cap);
        }
        case DemandFamily::Exponential: {
            const double t = -1.0 - curve.a() * cost + curve.a() * linear_coef / alpha1;
            if (t >= 0.0) return std::min(cap, curve.b());
            return std::min(cap, curve.b() * std::exp(t));
        }
        case DemandFamily::Logistic:
            return solve_logistic_foc(curve, cost, -linear_coef / alpha1, cap, tol);
        case DemandFamily::Reciprocal: {
            // alpha1*(1 - c*rate) + linear_coef*rate on (0, cap], 0 at rate 0;
            // the attained maximum is at one of the endpoints.
            const double slope = linear_coef - alpha1 * cost;
            if (slope >= 0.0) return cap;
            return alpha1 + slope * cap > 0.0 ? cap : 0.0;
        }
    }
    return 0.0;
}

double myopic_rate(const DemandCurve& curve, double cost, const Weights& w, double cap) {
    w.validate();
    if (!check_concavity(curve, cost, cap))
        throw RejectedInstance("profit rate is not concave on (0, Lambda]");
    return maximize_rate_objective(curve, cost, w.alpha1, w.alpha2, cap, 1e-12);
}

double myopic_rate(const DemandCurve& curve, double cost, const Weights& w) {
    return myopic_rate(curve, cost, w, curve.max_rate());
}

bool check_concavity(const DemandCurve& curve, double cost, double cap) {
    if (!(cap > 0.0)) throw std::invalid_argument("cap must be > 0");
    constexpr int kGridPoints = 1000;
    const double step = cap / kGridPoints;
    double f_prev = curve.profit_rate(cost, step);
    double f_mid = curve.profit_rate(cost, 2.0 * step);
    for (int k = 2; k < kGridPoints; ++k) {
        const double f_next = curve.profit_rate(cost, (k + 1) * step);
        if (f_prev - 2.0 * f_mid + f_next > 1e-9) return false;
        f_prev = f_mid;
        f_mid = f_next;
    }
    return true;
}

bool check_concavity(const DemandCurve& curve, double cost) {
    return check_concavity(curve, cost, curve.max_rate());
}

}  // namespace rrp
