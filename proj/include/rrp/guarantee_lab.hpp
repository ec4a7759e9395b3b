#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rrp/loss_chain.hpp"

namespace rrp {

/// Transformed coordinates z_i = prod_{j=i}^C lambda_j/mu (z_{C+1}=1
/// implicit) in which the stock-in ratio R has closed form.
struct ZVector {
    std::vector<double> z;  // z_1..z_C

    int capacity() const { return static_cast<int>(z.size()); }
    /// a_i = C!/(C-i)!
    double coef(int i) const;
    /// x = sum_{k=1..C} a_k z_{k+1}
    double x() const;
    /// y = sum_{k=2..C} a_k z_k
    double y() const;
};

/// beta = (p_1* - c)/gamma_1 with gamma_i = -p'(lambda_i); meaningful for
/// linear demand (Theorem-2 scope).
struct C2Params {
    double beta = 0.0;
    double z2 = 0.0;
};

ZVector z_from_policy(const Instance& inst, const Policy& pol);

/// Closed-form (1 - P0(lambda_tilde)) / (1 - P0*) as a function of z.
/// Falls back to a log-space evaluation if the direct one overflows.
double ratio_R(const ZVector& zv);

/// Lower bound on R obtained by truncating both index sums at 4; requires
/// C >= 4.
double ratio_R_tilde(const ZVector& zv);

struct AuditReport {
    std::string lemma;
    long samples = 0;
    long violations = 0;
    double worst_margin = 0.0;  // min over samples of the audited slack

    bool passed() const { return violations == 0; }
};

/// Samples Lemma-1-consistent z-vectors with y >= a1*z1 and checks the
/// central finite difference of R_tilde in z1 is >= -1e-7.
AuditReport audit_lemma2(int capacity, long sample_count, std::uint64_t seed);

struct HAuditRow {
    int capacity;
    long long num;
    long long den;
    double value;
};

struct HAuditReport {
    std::vector<HAuditRow> table;
    bool h4_is_27_over_104 = false;
    bool inv_h4_plus_1_is_104_over_131 = false;
    bool decreasing = false;

    bool passed() const;
};

/// H(C) = (C-1)^4 / sum_{i=1..4} a_i (C-1)^{4-i}, exact rational arithmetic.
HAuditReport audit_H(int capacity_max);

double c2_g(const C2Params& p);
double c2_G(const C2Params& p);

/// Grid audit of the C=2 profit-maximization bound: G <= 0.0433 on the
/// optimality-constrained region, consistency of R(g,z2) with 1 - G, and the
/// degree-12 root location of the stationary beta.
struct C2AuditReport {
    long samples = 0;
    long violations = 0;
    double max_G = 0.0;
    double argmax_beta = 0.0;
    double argmax_z2 = 0.0;
    double theta_star = 0.0;
    double consistency_error = 0.0;  // max |R(g,z2) - (1 - G)|

    bool passed() const { return violations == 0; }
};

C2AuditReport audit_c2_bound(int beta_grid = 2000, int z2_grid = 400,
                             long consistency_samples = 10000, std::uint64_t seed = 1);

/// Sign checks of dR/dz1 >= 0 (z1 <= z2^2) and dR/dz2 <= 0 at C=2, the
/// R(0,(sqrt 7 - 1)/3) anchor value, and the Lemma-5 constraints on solved
/// linear profit instances.
struct Theorem2RegionReport {
    AuditReport sign_z1;
    AuditReport sign_z2;
    double anchor_R = 0.0;  // R(0, (sqrt(7)-1)/3)
    AuditReport optimality_constraints;

    bool passed() const;
};

Theorem2RegionReport audit_theorem2_region(long grid_samples = 10000, int instance_count = 100,
                                           std::uint64_t seed = 2);

}  // namespace rrp
