#pragma once

// JSON (de)serialization for instances, policies, reports and experiment
// specs. Schemas are documented in the README.

#include <string>

#include "rrp/experiments.hpp"

namespace rrp {

std::string curve_to_json(const DemandCurve& curve);
DemandCurve curve_from_json(const std::string& json);

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& json);

Policy policy_from_json(const std::string& json, const Instance& inst);

MdpConfig mdp_config_from_json(const std::string& json);
SimConfig sim_config_from_json(const std::string& json);
TestbedSpec testbed_spec_from_json(const std::string& json);

struct SolveReport {
    Instance instance;
    DynamicSolution dynamic;
    StaticReport static_report;
};

SolveReport solve_full(const Instance& inst, const MdpConfig& cfg = {});
std::string solve_report_to_json(const SolveReport& report);
std::string solve_report_to_text(const SolveReport& report);

std::string sweep_rows_json(const std::vector<SweepRow>& rows, bool per_objective);
std::string tightness_json(const std::vector<TightnessRow>& rows);
std::string full_audit_json(const FullAuditReport& report);
std::string sim_validation_json(const SimValidation& v);

}  // namespace rrp
