#include "rrp/loss_chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rrp {

Instance Instance::make(int capacity, double mu, double cost, Weights w, DemandCurve curve) {
    if (!curve.has_finite_max_rate())
        throw std::invalid_argument("reciprocal demand requires an explicit rate cap");
    return make(capacity, mu, cost, w, curve, curve.max_rate());
}

Instance Instance::make(int capacity, double mu, double cost, Weights w, DemandCurve curve,
                        double rate_cap) {
    Instance inst;
    inst.capacity = capacity;
    inst.mu = mu;
    inst.cost = cost;
    inst.weights = w;
    inst.curve = curve;
    inst.rate_cap = rate_cap;
    inst.validate();
    return inst;
}

void Instance::validate() const {
    if (capacity < 1) throw std::invalid_argument("capacity must be >= 1");
    if (!(mu > 0.0)) throw std::invalid_argument("service rate mu must be > 0");
    if (cost < 0.0) throw std::invalid_argument("unit cost must be >= 0");
    if (!(rate_cap > 0.0)) throw std::invalid_argument("rate cap Lambda must be > 0");
    weights.validate();
    if (curve.has_finite_max_rate() && std::abs(rate_cap - curve.max_rate()) > 1e-9 * curve.max_rate())
        throw std::invalid_argument("rate cap must equal lambda(0)=b for this demand family");
}

Policy Policy::constant(int capacity, double rate) {
    Policy pol;
    pol.rates.assign(static_cast<std::size_t>(capacity), rate);
    return pol;
}

void Policy::validate(const Instance& inst) const {
    if (rates.size() != static_cast<std::size_t>(inst.capacity))
        throw std::invalid_argument("policy length must equal the capacity");
    for (double r : rates) {
        if (!std::isfinite(r) || r < 0.0 || r > inst.rate_cap * (1.0 + 1e-12))
            throw std::invalid_argument("policy rates must lie in [0, Lambda]");
    }
}

namespace {

// Unnormalized weight of state i is a_i * prod_{j>i} lambda_j/mu with
// a_i = C!/(C-i)!; the common C! factor cancels, leaving the recurrence
// w_i = w_{i+1} * lambda_{i+1} / (mu * (C-i)).
std::vector<double> unnormalized_direct(int C, double mu, const std::vector<double>& rates) {
    std::vector<double> w(static_cast<std::size_t>(C) + 1);
    w[C] = 1.0;
    for (int i = C - 1; i >= 0; --i) w[i] = w[i + 1] * rates[i] / (mu * (C - i));
    return w;
}

std::vector<double> unnormalized_log(int C, double mu, const std::vector<double>& rates) {
    const double neg_inf = -std::numeric_limits<double>::infinity();
    std::vector<double> logw(static_cast<std::size_t>(C) + 1);
    logw[C] = 0.0;
    for (int i = C - 1; i >= 0; --i) {
        const double term =
            rates[i] > 0.0 ? std::log(rates[i]) - std::log(mu * (C - i)) : neg_inf;
        logw[i] = logw[i + 1] + term;
    }
    const double shift = *std::max_element(logw.begin(), logw.end());
    std::vector<double> w(logw.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::exp(logw[i] - shift);
    return w;
}

}  // namespace

SteadyState steady_state(const Instance& inst, const Policy& pol) {
    pol.validate(inst);
    const int C = inst.capacity;

    bool large_ratio = false;
    for (double r : pol.rates)
        if (r / inst.mu > 1e3) large_ratio = true;

    std::vector<double> w = (C > 30 || large_ratio) ? unnormalized_log(C, inst.mu, pol.rates)
                                                    : unnormalized_direct(C, inst.mu, pol.rates);
    const double largest = *std::max_element(w.begin(), w.end());
    double total = 0.0;
    for (double& v : w) {
        v /= largest;
        total += v;
    }
    SteadyState ss;
    ss.probs.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) ss.probs[i] = w[i] / total;
    return ss;
}

ObjectiveTriple objectives(const Instance& inst, const Policy& pol) {
    const SteadyState ss = steady_state(inst, pol);
    ObjectiveTriple out;
    for (int i = 1; i <= inst.capacity; ++i) {
        const double rate = pol.rates[i - 1];
        if (rate > 0.0) {
            out.profit += inst.curve.profit_rate(inst.cost, rate) * ss.probs[i];
            out.market_share += rate * ss.probs[i];
        }
    }
    out.service_level = ss.stock_in();
    return out;
}

double weighted_value(const Weights& w, const ObjectiveTriple& v) {
    return w.alpha1 * v.profit + w.alpha2 * v.market_share + w.alpha3 * v.service_level;
}

double weighted_value(const Instance& inst, const Policy& pol) {
    return weighted_value(inst.weights, objectives(inst, pol));
}

}  // namespace rrp
