#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "liereach/analysis.hpp"
#include "liereach/closure.hpp"
#include "liereach/dynamics.hpp"
#include "liereach/system.hpp"

namespace liereach {

inline constexpr const char* kVersion = "0.1.0";

/// Machine report of a classification. Thread counts are deliberately left
/// out so the bytes do not depend on them.
nlohmann::json verdict_report(const ControlSystem& system, const Verdict& verdict);
/// Plain-text rendering of the same report with the same numbers.
std::string verdict_text(const nlohmann::json& report);

/// Closure table: the echelon basis with orders, plus dim_A per cap.
nlohmann::json closure_report(const ControlSystem& system, const LieClosureResult& closure,
                              const std::vector<std::pair<int, int>>& growth);
std::string closure_text(const nlohmann::json& report);

nlohmann::json coverage_report(const ControlSystem& system, const Envelope& env, const LieClosureResult& closure,
                               const std::vector<Coverage>& coverage);
std::string coverage_text(const nlohmann::json& report);

/// Generic text rendering of a JSON object as "key: value" lines.
std::string json_text(const nlohmann::json& report);

/// Numbers in text reports use the JSON serializer so both renderings agree.
std::string format_number(double x);

/// "n,error" rows.
void write_trotter_csv(std::ostream& out, const FlowExperimentResult& r);
/// "param,error,bound" rows.
void write_attainability_csv(std::ostream& out, const FlowExperimentResult& r);
/// "duration,u1,...,um" rows.
void write_schedule_csv(std::ostream& out, const ControlSchedule& s, int controls);
/// Inverse of write_schedule_csv; the header line is optional. Throws ParseError.
ControlSchedule read_schedule_csv(const std::string& text, int controls);

}  // namespace liereach
