#pragma once

#include <vector>

#include "rrp/demand.hpp"

namespace rrp {

/// One pricing problem: C units, service rate mu, unit cost c, objective
/// weights, demand curve and the rate cap Lambda (= lambda(0) for the three
/// parametric families; explicit for Reciprocal).
struct Instance {
    int capacity = 1;
    double mu = 1.0;
    double cost = 0.0;
    Weights weights;
    DemandCurve curve = DemandCurve::linear(1.0, 2.0);
    double rate_cap = 2.0;

    static Instance make(int capacity, double mu, double cost, Weights w, DemandCurve curve);
    static Instance make(int capacity, double mu, double cost, Weights w, DemandCurve curve,
                         double rate_cap);

    void validate() const;
};

/// State-dependent arrival rates; rates[i-1] applies when i units are
/// available. A static policy repeats one rate.
struct Policy {
    std::vector<double> rates;

    static Policy constant(int capacity, double rate);

    void validate(const Instance& inst) const;
};

/// P_0..P_C; probs[i] is the long-run fraction of time i units are available.
struct SteadyState {
    std::vector<double> probs;

    double stock_out() const { return probs.front(); }
    double stock_in() const { return 1.0 - probs.front(); }
};

struct ObjectiveTriple {
    double profit = 0.0;
    double market_share = 0.0;
    double service_level = 0.0;
};

SteadyState steady_state(const Instance& inst, const Policy& pol);
ObjectiveTriple objectives(const Instance& inst, const Policy& pol);
double weighted_value(const Instance& inst, const Policy& pol);
double weighted_value(const Weights& w, const ObjectiveTriple& v);

}  // namespace rrp
