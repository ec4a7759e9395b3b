#pragma once

#include <cstdint>

#include "rrp/loss_chain.hpp"

namespace rrp {

struct SimConfig {
    double horizon = 1e5;
    double warmup = -1.0;  // < 0 selects the default of 5% of horizon
    std::uint64_t seed = 1;
    int replications = 20;

    double effective_warmup() const { return warmup < 0.0 ? 0.05 * horizon : warmup; }
    void validate() const;
};

struct SimEstimate {
    ObjectiveTriple mean;
    ObjectiveTriple std_error;  // across replications
    int replications = 0;
};

/// Event-driven simulation of the loss system. Exponential clocks are
/// redrawn at every state change (exact under memorylessness); replication
/// streams are derived from the master seed by index, so changing the
/// replication count never reshuffles earlier streams.
SimEstimate simulate(const Instance& inst, const Policy& pol, const SimConfig& cfg);

struct SimValidation {
    SimEstimate estimate;
    ObjectiveTriple analytic;
    bool profit_ok = false;
    bool market_ok = false;
    bool service_ok = false;

    bool passed() const { return profit_ok && market_ok && service_ok; }
};

/// Passes iff |sim - analytic| <= 3 * standard error on each metric.
SimValidation validate_against_analytic(const Instance& inst, const Policy& pol,
                                        const SimConfig& cfg);

}  // namespace rrp
