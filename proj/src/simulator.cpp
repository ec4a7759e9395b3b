#include "rrp/simulator.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rng_util.hpp"

namespace rrp {

void SimConfig::validate() const {
    if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be > 0");
    if (effective_warmup() >= horizon) throw std::invalid_argument("warmup must be < horizon");
    if (replications < 1) throw std::invalid_argument("need at least one replication");
}

namespace {

ObjectiveTriple run_replication(const Instance& inst, const Policy& pol, const SimConfig& cfg,
                                std::uint64_t stream) {
    auto rng = std::mt19937_64(stream);
    const int C = inst.capacity;
    const double warmup = cfg.effective_warmup();
    const double measured = cfg.horizon - warmup;

    // Cache per-state sale margins; rate-0 states never sell.
    std::vector<double> margin(static_cast<std::size_t>(C) + 1, 0.0);
    for (int i = 1; i <= C; ++i) {
        const double rate = pol.rates[i - 1];
        if (rate > 0.0) margin[i] = inst.curve.price_at_rate(rate) - inst.cost;
    }

    int state = C;  // start with every unit available
    double now = 0.0;
    double in_stock_time = 0.0;
    double revenue = 0.0;
    long sales = 0;

    while (now < cfg.horizon) {
        const double arrival_rate = state >= 1 ? pol.rates[state - 1] : 0.0;
        const double return_rate = (C - state) * inst.mu;
        const double t_arrival = detail::sample_exponential(rng, arrival_rate);
        const double t_return = detail::sample_exponential(rng, return_rate);
        const double dt = std::min(t_arrival, t_return);
        const double next = std::min(now + dt, cfg.horizon);

        if (state >= 1) {
            const double lo = std::max(now, warmup);
            if (next > lo) in_stock_time += next - lo;
        }
        if (now + dt > cfg.horizon) break;
        now += dt;
        if (t_arrival <= t_return) {
            if (now > warmup) {
                ++sales;
                revenue += margin[state];
            }
            --state;
        } else {
            ++state;
        }
    }

    ObjectiveTriple out;
    out.profit = revenue / measured;
    out.market_share = static_cast<double>(sales) / measured;
    out.service_level = in_stock_time / measured;
    return out;
}

}  // namespace

SimEstimate simulate(const Instance& inst, const Policy& pol, const SimConfig& cfg) {
    inst.validate();
    pol.validate(inst);
    cfg.validate();

    const int R = cfg.replications;
    std::vector<ObjectiveTriple> reps(static_cast<std::size_t>(R));
    for (int k = 0; k < R; ++k)
        reps[k] = run_replication(inst, pol, cfg, detail::derive_stream(cfg.seed, k));

    SimEstimate est;
    est.replications = R;
    for (const auto& r : reps) {
        est.mean.profit += r.profit / R;
        est.mean.market_share += r.market_share / R;
        est.mean.service_level += r.service_level / R;
    }
    if (R > 1) {
        ObjectiveTriple ss;
        for (const auto& r : reps) {
            ss.profit += (r.profit - est.mean.profit) * (r.profit - est.mean.profit);
            ss.market_share += (r.market_share - est.mean.market_share) *
                               (r.market_share - est.mean.market_share);
            ss.service_level += (r.service_level - est.mean.service_level) *
                                (r.service_level - est.mean.service_level);
        }
        const double scale = 1.0 / (R * (R - 1.0));
        est.std_error.profit = std::sqrt(ss.profit * scale);
        est.std_error.market_share = std::sqrt(ss.market_share * scale);
        est.std_error.service_level = std::sqrt(ss.service_level * scale);
    }
    return est;
}

SimValidation validate_against_analytic(const Instance& inst, const Policy& pol,
                                        const SimConfig& cfg) {
    SimValidation v;
    v.estimate = simulate(inst, pol, cfg);
    v.analytic = objectives(inst, pol);

    const auto within3 = [](double sim, double exact, double se) {
        return std::abs(sim - exact) <= 3.0 * std::max(se, 1e-300);
    };
    // A zero standard error is legitimate for degenerate policies (e.g. the
    // all-zero policy is exact); require exact agreement there.
    const auto check = [&](double sim, double exact, double se) {
        return se > 0.0 ? within3(sim, exact, se) : sim == exact;
    };
    v.profit_ok = check(v.estimate.mean.profit, v.analytic.profit, v.estimate.std_error.profit);
    v.market_ok = check(v.estimate.mean.market_share, v.analytic.market_share,
                        v.estimate.std_error.market_share);
    v.service_ok = check(v.estimate.mean.service_level, v.analytic.service_level,
                         v.estimate.std_error.service_level);
    return v;
}

}  // namespace rrp
