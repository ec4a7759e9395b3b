#pragma once

#include "rrp/dynamic_opt.hpp"

namespace rrp {

/// Ratios of a static policy's objectives to the optimal dynamic ones.
/// Zero-valued optimal objectives report ratio 1 (0/0 convention).
struct RatioTuple {
    double profit = 1.0;
    double market_share = 1.0;
    double service_level = 1.0;
    double weighted = 1.0;

    double min_objective() const;
};

struct StaticReport {
    double lambda_tilde = 0.0;
    double lambda_best = 0.0;
    ObjectiveTriple optimal_value;
    ObjectiveTriple tilde_value;
    ObjectiveTriple best_value;
    RatioTuple ratios_tilde;
    RatioTuple ratios_best;
};

/// lambda_tilde = sum_i lambda_i* P_i* / (1 - P_0*): the expected optimal
/// arrival rate conditional on at least one unit available. Identically-zero
/// optimal policies yield 0.
double constructed_static_rate(const Instance& inst, const DynamicSolution& dyn);
double constructed_static_rate(const Instance& inst, const Policy& pol);

/// Maximizes the weighted objective over constant policies on [0, Lambda];
/// 2000-point grid plus golden-section refinement around the best cell.
double best_static_rate(const Instance& inst);

StaticReport ratio_report(const Instance& inst, const DynamicSolution& dyn);

}  // namespace rrp
