#include "rrp/dynamic_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rrp {

double uniformization_constant(const Instance& inst) {
    return 1.0 / (1.0 + inst.rate_cap + inst.capacity * inst.mu);
}

std::pair<std::vector<double>, std::vector<double>> bellman_apply(
    const Instance& inst, double gamma, double eta, const std::vector<double>& h,
    double inner_tolerance) {
    const int C = inst.capacity;
    if (h.size() != static_cast<std::size_t>(C) + 1)
        throw std::invalid_argument("relative value vector must have length C+1");

    const Weights& w = inst.weights;
    std::vector<double> next(h.size());
    std::vector<double> rates(static_cast<std::size_t>(C));

    // State 0: no units to sell, arrivals are lost; only returns flow.
    next[0] = -eta + gamma * inst.mu * C * h[1] + (1.0 - gamma * inst.mu * C) * h[0];

    for (int i = 1; i <= C; ++i) {
        const double coef = w.alpha2 - gamma * (h[i] - h[i - 1]);
        const double rate = maximize_rate_objective(inst.curve, inst.cost, w.alpha1, coef,
                                                    inst.rate_cap, inner_tolerance);
        rates[i - 1] = rate;
        const double reward =
            w.alpha1 * inst.curve.profit_rate(inst.cost, rate) + w.alpha2 * rate + w.alpha3;
        const double up = inst.mu * (C - i);
        double value = reward - eta + gamma * rate * h[i - 1] +
                       (1.0 - gamma * (rate + up)) * h[i];
        if (i < C) value += gamma * up * h[i + 1];
        next[i] = value;
    }
    return {std::move(next), std::move(rates)};
}

DynamicSolution solve_dynamic(const Instance& inst, const MdpConfig& cfg) {
    inst.validate();
    if (!(cfg.span_tolerance > 0.0) || !(cfg.inner_tolerance > 0.0) || cfg.max_iterations < 1)
        throw std::invalid_argument("tolerances must be positive");
    if (cfg.anchor_state < 0 || cfg.anchor_state > inst.capacity)
        throw std::invalid_argument("anchor state out of range");
    if (!check_concavity(inst.curve, inst.cost, inst.rate_cap))
        throw RejectedInstance("profit rate is not concave on (0, Lambda]");

    const int C = inst.capacity;
    const double gamma = uniformization_constant(inst);

    std::vector<double> h(static_cast<std::size_t>(C) + 1, 0.0);
    double eta = 0.0;
    long iterations = 0;
    std::vector<double> rates;

    while (true) {
        ++iterations;
        auto [next, sweep_rates] = bellman_apply(inst, gamma, eta, h, cfg.inner_tolerance);
        double lo = next[0] - h[0];
        double hi = lo;
        for (std::size_t i = 1; i < next.size(); ++i) {
            const double d = next[i] - h[i];
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        eta += 0.5 * (lo + hi);
        const double anchor = next[cfg.anchor_state];
        for (std::size_t i = 0; i < next.size(); ++i) h[i] = next[i] - anchor;
        rates = std::move(sweep_rates);
        if (hi - lo < cfg.span_tolerance) break;
        if (iterations >= cfg.max_iterations) {
            std::ostringstream msg;
            msg << "relative value iteration did not converge: span " << (hi - lo) << " after "
                << iterations << " sweeps (tolerance " << cfg.span_tolerance << ")";
            throw ConvergenceError(msg.str());
        }
    }

    // Report h with the h(0)=0 convention regardless of the anchor used.
    const double shift = h[0];
    for (double& v : h) v -= shift;

    const double rate_tol = 1e-8 * std::max(1.0, inst.rate_cap);
    for (int i = 0; i + 1 < C; ++i) {
        if (rates[i] > rates[i + 1] + rate_tol)
            throw ConvergenceError("optimal rates violate monotonicity");
    }
    const double myopic = myopic_rate(inst.curve, inst.cost, inst.weights, inst.rate_cap);
    if (rates[C - 1] > myopic + rate_tol)
        throw ConvergenceError("optimal rate exceeds the myopic rate");

    DynamicSolution sol;
    sol.policy.rates = std::move(rates);
    sol.eta = eta;
    sol.h = std::move(h);
    sol.value = objectives(inst, sol.policy);
    sol.iterations = iterations;
    return sol;
}

DynamicSolution brute_force_policy_search(const Instance& inst, int grid_points) {
    inst.validate();
    if (grid_points < 2) throw std::invalid_argument("grid needs at least 2 points");
    const int C = inst.capacity;
    double total = 1.0;
    for (int i = 0; i < C; ++i) total *= grid_points;
    if (total > 1e8) throw std::invalid_argument("grid too large (> 1e8 evaluations)");

    const Weights& w = inst.weights;
    std::vector<double> grid(static_cast<std::size_t>(grid_points));
    std::vector<double> reward(static_cast<std::size_t>(grid_points));
    for (int k = 0; k < grid_points; ++k) {
        grid[k] = inst.rate_cap * k / (grid_points - 1);
        reward[k] = w.alpha1 * inst.curve.profit_rate(inst.cost, grid[k]) + w.alpha2 * grid[k];
    }

    std::vector<int> idx(static_cast<std::size_t>(C), 0);
    std::vector<double> best_rates(static_cast<std::size_t>(C), 0.0);
    double best_value = -std::numeric_limits<double>::infinity();
    long evals = 0;

    while (true) {
        // Unnormalized weights via w_i = w_{i+1} * lambda_{i+1} / (mu*(C-i)),
        // starting from w_C = 1; grid[idx[i]] is the rate used in state i+1.
        double wi = 1.0;
        double mass = 1.0;
        double gain = reward[idx[C - 1]];  // state C
        double stock_in = 1.0;
        for (int i = C - 1; i >= 0; --i) {
            wi *= grid[idx[i]] / (inst.mu * (C - i));
            mass += wi;
            if (i >= 1) {
                stock_in += wi;
                gain += reward[idx[i - 1]] * wi;
            }
        }
        const double value = (gain + w.alpha3 * stock_in) / mass;
        ++evals;
        if (value > best_value) {
            best_value = value;
            for (int i = 0; i < C; ++i) best_rates[i] = grid[idx[i]];
        }

        int pos = 0;
        while (pos < C && ++idx[pos] == grid_points) idx[pos++] = 0;
        if (pos == C) break;
    }

    DynamicSolution sol;
    sol.policy.rates = std::move(best_rates);
    sol.eta = best_value;
    sol.h.assign(static_cast<std::size_t>(C) + 1, 0.0);
    sol.value = objectives(inst, sol.policy);
    sol.iterations = evals;
    return sol;
}

}  // namespace rrp
