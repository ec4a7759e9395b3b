#include "rrp/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "rng_util.hpp"

namespace rrp {

void parallel_for(int n, const std::function<void(int)>& fn) {
    const int workers =
        std::min<int>(n, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            try {
                for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(n);
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

namespace {

std::uint64_t cell_key(const TestbedSpec& spec, int capacity) {
    const auto fam = static_cast<std::uint64_t>(spec.family);
    return detail::splitmix64(spec.seed) ^ detail::splitmix64((fam << 32) | static_cast<std::uint64_t>(capacity));
}

}  // namespace

Instance testbed_instance(const TestbedSpec& spec, int capacity, int index) {
    auto rng = detail::make_rng(cell_key(spec, capacity), static_cast<std::uint64_t>(index));
    const double mu = 1.0 / detail::uniform(rng, 0.05, 50.0);
    const double a = detail::uniform(rng, 0.1, 5.0);
    const double b = detail::uniform(rng, 0.5, 10.0);
    const double p0 = detail::uniform(rng, 0.0, 20.0);

    Weights w{1.0, 0.0, 0.0};
    if (spec.alpha_mode == AlphaMode::UniformSimplex) {
        double e1 = -std::log1p(-detail::uniform01(rng));
        double e2 = -std::log1p(-detail::uniform01(rng));
        double e3 = -std::log1p(-detail::uniform01(rng));
        const double s = e1 + e2 + e3;
        w = Weights{e1 / s, e2 / s, 1.0 - e1 / s - e2 / s};
    }

    DemandCurve curve = DemandCurve::linear(a, b);
    switch (spec.family) {
        case DemandFamily::Linear: break;
        case DemandFamily::Exponential: curve = DemandCurve::exponential(a, b); break;
        case DemandFamily::Logistic: curve = DemandCurve::logistic(a, b, p0); break;
        case DemandFamily::Reciprocal:
            throw std::invalid_argument("testbed families are linear/exponential/logistic");
    }
    return Instance::make(capacity, mu, 0.0, w, curve);
}

namespace {

SweepRow run_cell(const TestbedSpec& spec, int capacity, bool headline_weighted) {
    struct Outcome {
        RatioTuple tilde;
        RatioTuple best;
        double alpha3 = 0.0;
    };
    std::vector<Outcome> results(static_cast<std::size_t>(spec.count));

    parallel_for(spec.count, [&](int index) {
        const Instance inst = testbed_instance(spec, capacity, index);
        const DynamicSolution dyn = solve_dynamic(inst);
        const StaticReport rep = ratio_report(inst, dyn);
        results[index] = {rep.ratios_tilde, rep.ratios_best, inst.weights.alpha3};
    });

    SweepRow row;
    row.family = to_string(spec.family);
    row.capacity = capacity;
    row.count = spec.count;
    row.seed = spec.seed;
    bool first = true;
    for (int i = 0; i < spec.count; ++i) {
        const Outcome& o = results[i];
        if (first) {
            row.worst_tilde = o.tilde;
            row.worst_best = o.best;
            first = false;
        } else {
            row.worst_tilde.profit = std::min(row.worst_tilde.profit, o.tilde.profit);
            row.worst_tilde.market_share = std::min(row.worst_tilde.market_share, o.tilde.market_share);
            row.worst_tilde.service_level =
                std::min(row.worst_tilde.service_level, o.tilde.service_level);
            row.worst_tilde.weighted = std::min(row.worst_tilde.weighted, o.tilde.weighted);
            row.worst_best.profit = std::min(row.worst_best.profit, o.best.profit);
            row.worst_best.market_share = std::min(row.worst_best.market_share, o.best.market_share);
            row.worst_best.service_level =
                std::min(row.worst_best.service_level, o.best.service_level);
            row.worst_best.weighted = std::min(row.worst_best.weighted, o.best.weighted);
        }
        const double headline = headline_weighted ? o.tilde.weighted : o.tilde.profit;
        const double incumbent =
            row.minimizer_id < 0
                ? std::numeric_limits<double>::infinity()
                : (headline_weighted ? results[row.minimizer_id].tilde.weighted
                                     : results[row.minimizer_id].tilde.profit);
        if (headline < incumbent) {
            row.minimizer_id = i;
            row.minimizer_alpha3 = o.alpha3;
        }
    }
    return row;
}

}  // namespace

std::vector<SweepRow> run_table1(const TestbedSpec& spec) {
    TestbedSpec s = spec;
    s.alpha_mode = AlphaMode::FixedProfit;
    std::vector<SweepRow> rows;
    rows.reserve(s.capacities.size());
    for (int C : s.capacities) rows.push_back(run_cell(s, C, /*headline_weighted=*/false));
    return rows;
}

std::vector<SweepRow> run_table2(const TestbedSpec& spec) {
    TestbedSpec s = spec;
    s.alpha_mode = AlphaMode::UniformSimplex;
    s.family = DemandFamily::Linear;
    std::vector<SweepRow> rows;
    rows.reserve(s.capacities.size());
    for (int C : s.capacities) rows.push_back(run_cell(s, C, /*headline_weighted=*/true));
    return rows;
}

std::vector<TightnessRow> run_tightness(const std::vector<double>& mu_list) {
    std::vector<TightnessRow> rows;
    rows.reserve(mu_list.size());
    for (double mu : mu_list) {
        const Instance inst = Instance::make(3, mu, 0.0, Weights{0.0, 0.0, 1.0},
                                             DemandCurve::reciprocal(), 1.0);
        Policy pol;
        pol.rates = {0.0, inst.rate_cap, inst.rate_cap};
        const double R = ratio_R(z_from_policy(inst, pol));
        rows.push_back({mu, R, R - 15.0 / 19.0});
    }
    return rows;
}

bool FullAuditReport::passed() const {
    for (const auto& rep : lemma2)
        if (!rep.passed()) return false;
    return h_audit.passed() && c2.passed() && theorem2.passed();
}

FullAuditReport run_full_audit(long lemma2_samples, std::uint64_t seed) {
    FullAuditReport report;
    for (int C : {4, 5, 6}) report.lemma2.push_back(audit_lemma2(C, lemma2_samples, seed));
    report.h_audit = audit_H(12);
    report.c2 = audit_c2_bound();
    report.theorem2 = audit_theorem2_region(10000, 100, seed + 1);
    return report;
}

namespace {

std::string format_row(const char* fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    return buf;
}

}  // namespace

std::string sweep_rows_csv(const std::vector<SweepRow>& rows, bool per_objective) {
    std::string out;
    if (per_objective) {
        out = "family,C,count,seed,worst_weighted_tilde,worst_profit_tilde,worst_market_tilde,"
              "worst_service_tilde,worst_weighted_best,minimizer_id,minimizer_alpha3\n";
        for (const auto& r : rows)
            out += format_row("%s,%d,%d,%llu,%.6f,%.6f,%.6f,%.6f,%.6f,%d,%.6f\n",
                              r.family.c_str(), r.capacity, r.count,
                              static_cast<unsigned long long>(r.seed), r.worst_tilde.weighted,
                              r.worst_tilde.profit, r.worst_tilde.market_share,
                              r.worst_tilde.service_level, r.worst_best.weighted, r.minimizer_id,
                              r.minimizer_alpha3);
    } else {
        out = "family,C,count,seed,worst_profit_tilde,worst_profit_best,minimizer_id\n";
        for (const auto& r : rows)
            out += format_row("%s,%d,%d,%llu,%.6f,%.6f,%d\n", r.family.c_str(), r.capacity,
                              r.count, static_cast<unsigned long long>(r.seed),
                              r.worst_tilde.profit, r.worst_best.profit, r.minimizer_id);
    }
    return out;
}

std::string tightness_csv(const std::vector<TightnessRow>& rows) {
    std::string out = "mu,R,gap\n";
    for (const auto& r : rows) out += format_row("%.10g,%.10f,%.10f\n", r.mu, r.R, r.gap);
    return out;
}

}  // namespace rrp
