#pragma once

#include <stdexcept>
#include <string>

namespace rrp {

/// Thrown when an instance falls outside the admissible family (profit rate
/// not concave in the arrival rate).
struct RejectedInstance : std::domain_error {
    using std::domain_error::domain_error;
};

enum class DemandFamily { Linear, Exponential, Logistic, Reciprocal };

std::string to_string(DemandFamily family);
DemandFamily family_from_string(const std::string& name);

/// Objective weights (alpha1: profit, alpha2: market share, alpha3: service
/// level). Must be nonnegative and sum to 1 within 1e-12.
struct Weights {
    double alpha1 = 1.0;
    double alpha2 = 0.0;
    double alpha3 = 0.0;

    void validate() const;
};

/// Invertible price<->rate map. Linear: lambda = -a*p + b; Exponential:
/// lambda = b*exp(-a*p); Logistic: lambda = b*(1+exp(-a*p0))/(1+exp(a*(p-p0)));
/// Reciprocal: p(lambda) = 1/lambda (no finite max rate of its own).
class DemandCurve {
  public:
    static DemandCurve linear(double a, double b);
    static DemandCurve exponential(double a, double b);
    static DemandCurve logistic(double a, double b, double p0);
    static DemandCurve reciprocal();

    DemandFamily family() const { return family_; }
    double a() const { return a_; }
    double b() const { return b_; }
    double p0() const { return p0_; }

    /// True for the three parametric families whose max rate is lambda(0)=b.
    bool has_finite_max_rate() const { return family_ != DemandFamily::Reciprocal; }
    /// lambda(0) = b. Throws for Reciprocal (cap must come from the instance).
    double max_rate() const;

    double rate_at_price(double price) const;
    double price_at_rate(double rate) const;

    /// lambda * (p(lambda) - c); defined as 0 at lambda = 0 (no sales).
    double profit_rate(double cost, double rate) const;

    /// Marginal value of d/dlambda [lambda*(p(lambda)-c)]; used by the
    /// concave maximizers. Undefined at lambda=0 for some families.
    double marginal_revenue(double cost, double rate) const;

  private:
    DemandCurve(DemandFamily f, double a, double b, double p0);

    DemandFamily family_;
    double a_ = 0.0;
    double b_ = 0.0;
    double p0_ = 0.0;
    double eps_ = 0.0;  // exp(-a*p0), cached for the logistic family
};

/// argmax over [0, cap] of alpha1*lambda*(p(lambda)-c) + linear_coef*lambda.
/// Closed form for Linear/Exponential/Reciprocal, safeguarded Newton on the
/// first-order condition for Logistic. Flat objectives resolve to the
/// smallest maximizing rate.
double maximize_rate_objective(const DemandCurve& curve, double cost, double alpha1,
                               double linear_coef, double cap, double tol = 1e-12);

/// Myopic rate: argmax over [0, cap] of lambda*(alpha1*(p(lambda)-c)+alpha2).
double myopic_rate(const DemandCurve& curve, double cost, const Weights& w, double cap);
double myopic_rate(const DemandCurve& curve, double cost, const Weights& w);

/// Samples second differences of lambda*(p(lambda)-c) on a 1000-point grid
/// over (0, cap]; true iff all are <= +1e-9.
bool check_concavity(const DemandCurve& curve, double cost, double cap);
bool check_concavity(const DemandCurve& curve, double cost);

}  // namespace rrp
