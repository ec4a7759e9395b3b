#include "rrp/guarantee_lab.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rrp/dynamic_opt.hpp"
#include "rng_util.hpp"

namespace rrp {

namespace detail {
ZVector sample_consistent_z(std::mt19937_64& rng, int capacity);
}

namespace {

std::vector<double> falling_factorials(int C) {
    std::vector<double> a(static_cast<std::size_t>(C) + 1, 1.0);
    for (int i = 1; i <= C; ++i) a[i] = a[i - 1] * (C - i + 1);
    return a;
}

double zval(const ZVector& zv, int i) {  // z_i with z_{C+1} = 1
    return i <= zv.capacity() ? zv.z[i - 1] : 1.0;
}

}  // namespace

double ZVector::coef(int i) const {
    if (i < 0 || i > capacity()) throw std::out_of_range("coefficient index");
    double a = 1.0;
    for (int k = 1; k <= i; ++k) a *= capacity() - k + 1;
    return a;
}

double ZVector::x() const {
    const int C = capacity();
    const auto a = falling_factorials(C);
    double s = 0.0;
    for (int k = 1; k <= C; ++k) s += a[k] * zval(*this, k + 1);
    return s;
}

double ZVector::y() const {
    const int C = capacity();
    const auto a = falling_factorials(C);
    double s = 0.0;
    for (int k = 2; k <= C; ++k) s += a[k] * zval(*this, k);
    return s;
}

ZVector z_from_policy(const Instance& inst, const Policy& pol) {
    pol.validate(inst);
    const int C = inst.capacity;
    ZVector zv;
    zv.z.resize(static_cast<std::size_t>(C));
    double prod = 1.0;
    for (int i = C; i >= 1; --i) {
        prod *= pol.rates[i - 1] / inst.mu;
        zv.z[i - 1] = prod;
    }
    return zv;
}

namespace {

double ratio_R_direct(const ZVector& zv) {
    const int C = zv.capacity();
    const auto a = falling_factorials(C);
    double sum_zk = 0.0;   // sum_{k=1..C} a_k z_k
    double sum_zk1 = 0.0;  // sum_{k=1..C} a_k z_{k+1}
    for (int k = 1; k <= C; ++k) {
        sum_zk += a[k] * zval(zv, k);
        sum_zk1 += a[k] * zval(zv, k + 1);
    }
    const double w = sum_zk / sum_zk1;
    double powers = 1.0;  // w^(C-i), built from i = C downward
    double num2 = 0.0;
    for (int i = C; i >= 1; --i) {
        num2 += a[i] * powers;
        powers *= w;
    }
    const double den2 = num2 + powers;  // adds a_0 * w^C
    return (zval(zv, 1) + sum_zk1) * num2 / (sum_zk1 * den2);
}

double log_sum_exp(const std::vector<double>& terms) {
    double m = -std::numeric_limits<double>::infinity();
    for (double t : terms) m = std::max(m, t);
    if (!std::isfinite(m)) return m;
    double s = 0.0;
    for (double t : terms) s += std::exp(t - m);
    return m + std::log(s);
}

double ratio_R_logspace(const ZVector& zv) {
    const int C = zv.capacity();
    std::vector<double> log_a(static_cast<std::size_t>(C) + 1, 0.0);
    for (int i = 1; i <= C; ++i) log_a[i] = log_a[i - 1] + std::log(static_cast<double>(C - i + 1));

    const double neg_inf = -std::numeric_limits<double>::infinity();
    const auto log_z = [&](int i) {
        const double v = zval(zv, i);
        return v > 0.0 ? std::log(v) : neg_inf;
    };

    std::vector<double> t_zk, t_zk1, t_num1;
    t_num1.push_back(log_z(1));  // a_0 z_1
    for (int k = 1; k <= C; ++k) {
        t_zk.push_back(log_a[k] + log_z(k));
        t_zk1.push_back(log_a[k] + log_z(k + 1));
        t_num1.push_back(log_a[k] + log_z(k + 1));
    }
    const double log_sum_zk = log_sum_exp(t_zk);
    const double log_sum_zk1 = log_sum_exp(t_zk1);
    const double log_w = log_sum_zk - log_sum_zk1;

    std::vector<double> t_num2, t_den2;
    for (int i = 0; i <= C; ++i) {
        const double term = (C - i) == 0 ? log_a[i] : log_a[i] + (C - i) * log_w;
        t_den2.push_back(term);
        if (i >= 1) t_num2.push_back(term);
    }
    return std::exp(log_sum_exp(t_num1) + log_sum_exp(t_num2) - log_sum_zk1 -
                    log_sum_exp(t_den2));
}

}  // namespace

double ratio_R(const ZVector& zv) {
    if (zv.capacity() < 1) throw std::invalid_argument("z vector must have length >= 1");
    for (double v : zv.z)
        if (!(v >= 0.0)) throw std::invalid_argument("z coordinates must be nonnegative");
    const double direct = ratio_R_direct(zv);
    if (std::isfinite(direct)) return direct;
    return ratio_R_logspace(zv);
}

double ratio_R_tilde(const ZVector& zv) {
    const int C = zv.capacity();
    if (C < 4) throw std::domain_error("R_tilde requires C >= 4");
    const auto a = falling_factorials(C);
    const double z1 = zval(zv, 1);
    const double S = a[1] * z1 + zv.y();  // sum_{k=1..C} a_k z_k
    const double x = zv.x();
    double num = 0.0;
    double xp = 1.0;  // x^{i-1}
    for (int i = 1; i <= 4; ++i) {
        double term = a[i] * xp;
        for (int k = 0; k < 4 - i; ++k) term *= S;
        num += term;
        xp *= x;
    }
    const double den = S * S * S * S + x * num;
    return (z1 + x) * num / den;
}

AuditReport audit_lemma2(int capacity, long sample_count, std::uint64_t seed) {
    if (capacity < 4) throw std::domain_error("Lemma 2 audit requires C >= 4");
    auto rng = detail::make_rng(seed, static_cast<std::uint64_t>(capacity));

    AuditReport report;
    report.lemma = "lemma2_dRtilde_dz1";
    report.worst_margin = std::numeric_limits<double>::infinity();

    const long max_attempts = 200 * sample_count;
    long attempts = 0;
    while (report.samples < sample_count && attempts < max_attempts) {
        ++attempts;
        ZVector zv = detail::sample_consistent_z(rng, capacity);
        if (zv.y() < zv.coef(1) * zv.z[0]) continue;  // audit domain: y >= a1 z1

        const double step = 1e-6 * zv.z[0];
        ZVector up = zv, down = zv;
        up.z[0] += step;
        down.z[0] -= step;
        const double deriv = (ratio_R_tilde(up) - ratio_R_tilde(down)) / (2.0 * step);
        ++report.samples;
        report.worst_margin = std::min(report.worst_margin, deriv);
        if (deriv < -1e-7) ++report.violations;
    }
    return report;
}

namespace detail {

ZVector sample_consistent_z(std::mt19937_64& rng, int capacity) {
    // Log-uniform z draws define implied per-state rate ratios; sorting the
    // ratios enforces the Lemma-1 ordering before rebuilding the suffix
    // products.
    std::vector<double> raw(static_cast<std::size_t>(capacity));
    for (double& v : raw) v = log_uniform(rng, 1e-3, 1e6);
    std::vector<double> ratios(raw.size());
    for (int i = 0; i < capacity; ++i) {
        const double next = i + 1 < capacity ? raw[i + 1] : 1.0;
        ratios[i] = raw[i] / next;
    }
    std::sort(ratios.begin(), ratios.end());
    ZVector zv;
    zv.z.resize(raw.size());
    double prod = 1.0;
    for (int i = capacity; i >= 1; --i) {
        prod *= ratios[i - 1];
        zv.z[i - 1] = prod;
    }
    return zv;
}

}  // namespace detail

bool HAuditReport::passed() const {
    return h4_is_27_over_104 && inv_h4_plus_1_is_104_over_131 && decreasing;
}

HAuditReport audit_H(int capacity_max) {
    if (capacity_max < 4) throw std::invalid_argument("H audit needs capacity_max >= 4");
    if (capacity_max > 1000) throw std::invalid_argument("H audit capped at C=1000");

    using Rat = boost::rational<long long>;
    const auto H = [](int C) {
        const long long m = C - 1;
        long long den = 0;
        long long a = 1;
        long long pow = m * m * m;  // m^{4-i} for i=1
        for (int i = 1; i <= 4; ++i) {
            a *= C - i + 1;
            den += a * pow;
            pow = i < 4 ? pow / m : 1;
        }
        return Rat(m * m * m * m, den);
    };

    HAuditReport report;
    report.decreasing = true;
    Rat prev;
    for (int C = 4; C <= capacity_max; ++C) {
        const Rat h = H(C);
        report.table.push_back({C, h.numerator(), h.denominator(),
                                boost::rational_cast<double>(h)});
        if (C > 4 && h > prev) report.decreasing = false;
        prev = h;
    }
    const Rat h4 = H(4);
    report.h4_is_27_over_104 = (h4 == Rat(27, 104));
    report.inv_h4_plus_1_is_104_over_131 = (Rat(1) / (h4 + Rat(1)) == Rat(104, 131));
    return report;
}

double c2_g(const C2Params& p) {
    if (p.beta < 0.0 || p.z2 < 0.0) throw std::domain_error("beta and z2 must be >= 0");
    const double z = p.z2;
    return std::sqrt((z + 1.0) * (z + 1.0) + p.beta * z * (z + 2.0)) - (z + 1.0);
}

double c2_G(const C2Params& p) {
    if (p.beta < 0.0 || p.z2 < 0.0) throw std::domain_error("beta and z2 must be >= 0");
    const double z = p.z2;
    const double root = std::sqrt((1.0 + p.beta) * z * z + 2.0 * (1.0 + p.beta) * z + 1.0);
    const double num = z * z + z + 1.0 - root;
    const double den = (3.0 + p.beta) * z * z + (2.0 * p.beta + 4.0) * z + 2.0 * z * root + 2.0;
    return num / den;
}

namespace {

double c2_R(double z1, double z2) {
    ZVector zv;
    zv.z = {z1, z2};
    return ratio_R(zv);
}

// Stationary-beta polynomial of the C=2 bound in theta = sqrt(beta).
double theta_poly(double t) {
    const double s2 = std::sqrt(2.0);
    double acc = 0.0;
    const double coef[] = {16.0,   56.0 * s2, 210.0,      244.0 * s2, 316.0,      96.0 * s2,
                           -18.0,  -36.0 * s2, -36.0,     -48.0 * s2, -66.0,      -12.0 * s2,
                           0.0};
    for (double c : coef) acc = acc * t + c;
    return acc;
}

}  // namespace

C2AuditReport audit_c2_bound(int beta_grid, int z2_grid, long consistency_samples,
                             std::uint64_t seed) {
    C2AuditReport report;
    auto rng = detail::make_rng(seed, 0xc2);

    // R(g(beta,z2), z2) and 1 - G(beta,z2) are two routes to the same value.
    for (long s = 0; s < consistency_samples; ++s) {
        C2Params p{detail::uniform(rng, 0.0, 5.0), detail::uniform(rng, 0.0, 5.0)};
        const double err = std::abs(c2_R(c2_g(p), p.z2) - (1.0 - c2_G(p)));
        report.consistency_error = std::max(report.consistency_error, err);
        ++report.samples;
        if (err > 1e-9) ++report.violations;
    }

    // Max of G over the optimality-constrained region
    // z2 in [(sqrt7-1)/3, sqrt(2 beta)].
    const double z2_lo = (std::sqrt(7.0) - 1.0) / 3.0;
    const double beta_lo = 0.5 * z2_lo * z2_lo;
    const double beta_hi = 8.0;
    for (int bi = 0; bi <= beta_grid; ++bi) {
        const double beta = beta_lo + (beta_hi - beta_lo) * bi / beta_grid;
        const double z2_hi = std::sqrt(2.0 * beta);
        if (z2_hi < z2_lo) continue;
        for (int zi = 0; zi <= z2_grid; ++zi) {
            const double z2 = z2_lo + (z2_hi - z2_lo) * zi / z2_grid;
            const double G = c2_G({beta, z2});
            ++report.samples;
            if (G > report.max_G) {
                report.max_G = G;
                report.argmax_beta = beta;
                report.argmax_z2 = z2;
            }
            if (G > 0.0433) ++report.violations;
        }
    }

    // Unique positive stationary point: bisection on the degree-12 polynomial.
    double lo = 0.5, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (theta_poly(lo) * theta_poly(mid) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    report.theta_star = 0.5 * (lo + hi);
    return report;
}

bool Theorem2RegionReport::passed() const {
    return sign_z1.passed() && sign_z2.passed() && optimality_constraints.passed() &&
           std::abs(anchor_R - 0.9557) < 5e-4;
}

Theorem2RegionReport audit_theorem2_region(long grid_samples, int instance_count,
                                           std::uint64_t seed) {
    Theorem2RegionReport report;
    auto rng = detail::make_rng(seed, 0x72);

    report.sign_z1.lemma = "thm2_dR_dz1_nonneg";
    report.sign_z2.lemma = "thm2_dR_dz2_nonpos";
    report.sign_z1.worst_margin = std::numeric_limits<double>::infinity();
    report.sign_z2.worst_margin = std::numeric_limits<double>::infinity();

    for (long s = 0; s < grid_samples; ++s) {
        const double z2 = detail::log_uniform(rng, 1e-3, 1e3);
        // dR/dz1 >= 0 needs z1 <= z2^2 (Lemma-1-consistent region).
        const double z1 = detail::uniform01(rng) * z2 * z2;
        const double h1 = 1e-6 * std::max(z1, 1e-6);
        const double d1 = (c2_R(z1 + h1, z2) - c2_R(std::max(0.0, z1 - h1), z2)) /
                          (z1 + h1 - std::max(0.0, z1 - h1));
        ++report.sign_z1.samples;
        report.sign_z1.worst_margin = std::min(report.sign_z1.worst_margin, d1);
        if (d1 < -1e-7) ++report.sign_z1.violations;

        const double h2 = 1e-6 * z2;
        const double d2 = (c2_R(z1, z2 + h2) - c2_R(z1, z2 - h2)) / (2.0 * h2);
        ++report.sign_z2.samples;
        report.sign_z2.worst_margin = std::min(report.sign_z2.worst_margin, -d2);
        if (d2 > 1e-7) ++report.sign_z2.violations;
    }

    report.anchor_R = c2_R(0.0, (std::sqrt(7.0) - 1.0) / 3.0);

    report.optimality_constraints.lemma = "lemma5_z1_z2_bounds";
    report.optimality_constraints.worst_margin = std::numeric_limits<double>::infinity();
    for (int k = 0; k < instance_count; ++k) {
        const double mu = 1.0 / detail::uniform(rng, 0.05, 50.0);
        const double a = detail::uniform(rng, 0.1, 5.0);
        const double b = detail::uniform(rng, 0.5, 10.0);
        const Instance inst =
            Instance::make(2, mu, 0.0, Weights{1.0, 0.0, 0.0}, DemandCurve::linear(a, b));
        const DynamicSolution dyn = solve_dynamic(inst);
        const double z2 = dyn.policy.rates[1] / mu;
        const double z1 = dyn.policy.rates[0] * dyn.policy.rates[1] / (mu * mu);
        const double p1 = (b - dyn.policy.rates[0]) / a;  // linear inverse, valid at rate 0
        const double beta = a * (p1 - inst.cost);
        const double slack1 = (z1 - c2_g({beta, z2})) / std::max(1.0, z1);
        const double slack2 = (std::sqrt(2.0 * beta) - z2) / std::max(1.0, z2);
        const double slack = std::min(slack1, slack2);
        ++report.optimality_constraints.samples;
        report.optimality_constraints.worst_margin =
            std::min(report.optimality_constraints.worst_margin, slack);
        if (slack < -1e-6) ++report.optimality_constraints.violations;
    }
    return report;
}

}  // namespace rrp
