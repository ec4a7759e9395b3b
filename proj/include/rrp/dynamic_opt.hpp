#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rrp/loss_chain.hpp"

namespace rrp {

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MdpConfig {
    double span_tolerance = 1e-10;
    long max_iterations = 1000000;
    double inner_tolerance = 1e-12;  // on the rate argument of the inner argmax
    int anchor_state = 0;            // relative values are pinned to 0 here
};

struct DynamicSolution {
    Policy policy;          // lambda_1* .. lambda_C*
    double eta = 0.0;       // optimal average reward per unit time
    std::vector<double> h;  // relative values h(0..C), h(anchor)=0
    ObjectiveTriple value;  // objectives under the returned policy
    long iterations = 0;
};

/// gamma = 1/(1 + Lambda + C*mu).
double uniformization_constant(const Instance& inst);

/// One application of the uniformized Bellman operator. h must have length
/// C+1. Returns (T h, per-state maximizing rates for states 1..C).
std::pair<std::vector<double>, std::vector<double>> bellman_apply(
    const Instance& inst, double gamma, double eta, const std::vector<double>& h,
    double inner_tolerance = 1e-12);

/// Relative value iteration: eta estimated as the span midpoint of Th - h
/// each sweep, stop when span(Th - h) < span_tolerance. Rejects instances
/// whose profit rate fails the concavity test; throws on non-convergence.
DynamicSolution solve_dynamic(const Instance& inst, const MdpConfig& cfg = {});

/// Exhaustive search over the grid {0, cap/(n-1), ..., cap}^C; validation
/// oracle for small C. Refuses grids above 1e8 evaluations.
DynamicSolution brute_force_policy_search(const Instance& inst, int grid_points);

}  // namespace rrp
