#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rrp/guarantee_lab.hpp"
#include "rrp/simulator.hpp"
#include "rrp/static_policy.hpp"

namespace rrp {

enum class AlphaMode { FixedProfit, UniformSimplex };

/// Random-instance testbed: 1/mu ~ U[0.05,50], a ~ U[0.1,5], b ~ U[0.5,10],
/// p0 ~ U[0,20], c = 0.
struct TestbedSpec {
    DemandFamily family = DemandFamily::Linear;
    std::vector<int> capacities = {2, 3, 4, 5, 10, 20};
    int count = 1000;
    std::uint64_t seed = 20240601;
    AlphaMode alpha_mode = AlphaMode::FixedProfit;
};

/// Deterministic draw of instance #index for (spec, C); independent of
/// iteration order, so sweeps can run in parallel.
Instance testbed_instance(const TestbedSpec& spec, int capacity, int index);

struct SweepRow {
    std::string family;
    int capacity = 0;
    int count = 0;
    std::uint64_t seed = 0;
    RatioTuple worst_tilde;  // min over instances, per column
    RatioTuple worst_best;
    int minimizer_id = -1;  // instance index attaining the worst headline ratio
    double minimizer_alpha3 = 0.0;
};

/// Worst-case profit ratios under fixed alpha = (1,0,0).
std::vector<SweepRow> run_table1(const TestbedSpec& spec);
/// Worst-case weighted and per-objective ratios under uniform-simplex alpha.
std::vector<SweepRow> run_table2(const TestbedSpec& spec);

struct TightnessRow {
    double mu = 0.0;
    double R = 0.0;
    double gap = 0.0;  // R - 15/19
};

/// C=3, Reciprocal, alpha=(0,0,1), Lambda=1, policy (0, Lambda, Lambda).
std::vector<TightnessRow> run_tightness(const std::vector<double>& mu_list);

struct FullAuditReport {
    std::vector<AuditReport> lemma2;
    HAuditReport h_audit;
    C2AuditReport c2;
    Theorem2RegionReport theorem2;

    bool passed() const;
};

FullAuditReport run_full_audit(long lemma2_samples = 10000, std::uint64_t seed = 99);

std::string sweep_rows_csv(const std::vector<SweepRow>& rows, bool per_objective);
std::string tightness_csv(const std::vector<TightnessRow>& rows);

/// Runs fn(i) for i in [0, n) on a small thread pool; results must be
/// written to per-index slots.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace rrp
