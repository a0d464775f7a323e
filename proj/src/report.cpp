#include "liereach/report.hpp"

#include <cmath>
#include <sstream>

#include "liereach/errors.hpp"

namespace liereach {

using nlohmann::json;

namespace {

json optional_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }
json optional_json(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

json system_json(const ControlSystem& s) {
  json j;
  j["name"] = s.name;
  j["algebra"] = s.env.algebra().name();
  j["h0"] = s.env.render(s.h0);
  json cs = json::array();
  for (const auto& c : s.controls) cs.push_back(s.env.render(c));
  j["controls"] = cs;
  j["manifold"] = manifold_name(s.manifold);
  return j;
}

json caps_json(const Caps& c) {
  return {{"order_cap", c.order_cap}, {"iter_cap", c.iter_cap}, {"k_max", c.effective_k_max()}};
}

json coverage_json(const Envelope& env, const Coverage& c) {
  json missing = json::array();
  for (const auto& m : c.missing) missing.push_back(env.render(m));
  return {{"n", c.n}, {"covered", c.covered}, {"total", c.total}, {"fraction", c.fraction()}, {"missing", missing}};
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

void text_lines(std::ostringstream& out, const json& v, const std::string& indent) {
  for (const auto& [key, val] : v.items()) {
    if (val.is_object()) {
      out << indent << key << ":\n";
      text_lines(out, val, indent + "  ");
    } else if (val.is_array() && !val.empty() && (val.front().is_object() || val.front().is_array())) {
      out << indent << key << ":\n";
      for (const auto& item : val) {
        if (item.is_object()) {
          std::string line;
          for (const auto& [k, x] : item.items()) {
            if (!line.empty()) line += ", ";
            line += k + "=" + (x.is_array() ? x.dump() : scalar_text(x));
          }
          out << indent << "  - " << line << "\n";
        } else {
          out << indent << "  - " << item.dump() << "\n";
        }
      }
    } else if (val.is_array()) {
      out << indent << key << ":";
      if (val.empty()) out << " []";
      out << "\n";
      for (const auto& item : val) out << indent << "  - " << scalar_text(item) << "\n";
    } else {
      out << indent << key << ": " << scalar_text(val) << "\n";
    }
  }
}

}  // namespace

std::string format_number(double x) { return json(x).dump(); }

std::string json_text(const json& report) {
  std::ostringstream out;
  text_lines(out, report, "");
  return out.str();
}

json verdict_report(const ControlSystem& system, const Verdict& verdict) {
  const Evidence& e = verdict.evidence;
  json j;
  j["tool"] = "liereach";
  j["version"] = kVersion;
  j["system"] = system_json(system);
  j["classification"] = classification_name(verdict.classification);
  j["failed_condition"] = e.failed_condition.empty() ? json(nullptr) : json(e.failed_condition);
  j["dim_A"] = e.dim_A;
  j["dim_B"] = e.dim_B;
  j["dim_C"] = e.dim_C;
  j["max_order"] = optional_json(e.max_order);
  j["saturated"] = e.saturated;
  j["exact_A"] = e.exact_A;
  j["iter_cap_hit"] = e.iter_cap_hit;
  json growth = json::array();
  for (const auto& [cap, dim] : e.growth) growth.push_back({{"cap", cap}, {"dim_A", dim}});
  j["growth"] = growth;
  j["condition_BC"] = optional_json(e.condition_bc);
  j["bc_witness"] = e.bc_witness ? json(*e.bc_witness) : json(nullptr);
  json cov = json::array();
  for (const auto& c : e.coverage) cov.push_back(coverage_json(system.env, c));
  j["coverage"] = cov;
  json tangent = json::array();
  for (const auto& t : e.tangent) tangent.push_back({{"state", t.state}, {"rank_C", t.rank_C}, {"rank_A", t.rank_A}});
  j["tangent"] = tangent;
  j["tangent_equal"] = optional_json(e.tangent_equal);
  j["rep_dim"] = optional_json(e.rep_dim);
  j["rep_image_rank"] = optional_json(e.rep_image_rank);
  j["caps"] = caps_json(e.caps);
  j["seed"] = e.caps.seed;
  j["notes"] = e.notes;
  return j;
}

std::string verdict_text(const json& report) { return json_text(report); }

json closure_report(const ControlSystem& system, const LieClosureResult& closure,
                    const std::vector<std::pair<int, int>>& growth) {
  json j;
  j["tool"] = "liereach";
  j["version"] = kVersion;
  j["system"] = system_json(system);
  j["order_cap"] = closure.order_cap;
  j["dim"] = closure.dim;
  j["max_order"] = optional_json(closure.max_order);
  j["saturated"] = closure.saturated;
  j["truncated"] = closure.truncated;
  j["iter_cap_hit"] = closure.iter_cap_hit;
  j["iterations"] = closure.iterations;
  json basis = json::array();
  for (const auto& b : closure.basis) basis.push_back({{"order", optional_json(b.order())}, {"element", system.env.render(b)}});
  j["basis"] = basis;
  json g = json::array();
  bool increasing = growth.size() > 1;
  for (std::size_t k = 0; k < growth.size(); ++k) {
    g.push_back({{"cap", growth[k].first}, {"dim", growth[k].second}});
    if (k > 0 && growth[k].second <= growth[k - 1].second) increasing = false;
  }
  j["growth"] = g;
  if (closure.exact_finite())
    j["note"] = "closure saturated below the cap: the algebra is finite dimensional";
  else if (increasing)
    j["note"] = "dim grows with the cap at every step; evidence of an infinite-dimensional algebra, not a proof";
  else
    j["note"] = "closure truncated at the cap";
  return j;
}

std::string closure_text(const json& report) { return json_text(report); }

json coverage_report(const ControlSystem& system, const Envelope& env, const LieClosureResult& closure,
                     const std::vector<Coverage>& coverage) {
  json j;
  j["tool"] = "liereach";
  j["version"] = kVersion;
  j["system"] = system_json(system);
  j["order_cap"] = closure.order_cap;
  j["dim"] = closure.dim;
  json cov = json::array();
  for (const auto& c : coverage) cov.push_back(coverage_json(env, c));
  j["coverage"] = cov;
  return j;
}

std::string coverage_text(const json& report) { return json_text(report); }

void write_trotter_csv(std::ostream& out, const FlowExperimentResult& r) {
  out << "n,error\n";
  for (const auto& row : r.rows)
    out << static_cast<long long>(std::llround(row.param)) << "," << format_number(row.error) << "\n";
}

void write_attainability_csv(std::ostream& out, const FlowExperimentResult& r) {
  out << "param,error,bound\n";
  for (const auto& row : r.rows)
    out << format_number(row.param) << "," << format_number(row.error) << ","
        << (std::isnan(row.bound) ? std::string("nan") : format_number(row.bound)) << "\n";
}

void write_schedule_csv(std::ostream& out, const ControlSchedule& s, int controls) {
  out << "duration";
  for (int k = 1; k <= controls; ++k) out << ",u" << k;
  out << "\n";
  for (const auto& seg : s.segments) {
    out << format_number(seg.duration);
    for (int k = 0; k < controls; ++k)
      out << "," << format_number(k < static_cast<int>(seg.u.size()) ? seg.u[static_cast<std::size_t>(k)] : 0.0);
    out << "\n";
  }
}

ControlSchedule read_schedule_csv(const std::string& text, int controls) {
  ControlSchedule s;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("duration", 0) == 0) continue;
    std::vector<double> values;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw ParseError("schedule line " + std::to_string(lineno) + ": not a number: '" + cell + "'");
      }
    }
    if (static_cast<int>(values.size()) != controls + 1)
      throw ParseError("schedule line " + std::to_string(lineno) + ": expected " + std::to_string(controls + 1) +
                       " columns");
    if (values[0] < 0) throw ParseError("schedule line " + std::to_string(lineno) + ": negative duration");
    s.segments.push_back({values[0], std::vector<double>(values.begin() + 1, values.end())});
  }
  if (s.segments.empty()) throw ParseError("schedule has no segments");
  return s;
}

}  // namespace liereach
