#include "toric/plan_json.hpp"

#include <algorithm>
#include <json.hpp>
#include <stdexcept>

namespace toric {

using nlohmann::json;

std::string plan_to_json(const UnknottingPlan& plan, int indent) {
  json j;
  j["p"] = plan.params.p;
  j["q"] = plan.params.q;
  j["d"] = plan.params.d;
  j["unknotting_number"] = unknotting_number(plan.params.p, plan.params.q);
  j["positions"] = plan.positions;
  json prov = json::array();
  for (const auto& pr : plan.provenance) {
    prov.push_back({{"position", pr.position}, {"step", pr.step}, {"set", pr.set}, {"block", pr.block}});
  }
  j["provenance"] = prov;
  json trace = json::array();
  for (const auto& s : plan.trace.steps) {
    trace.push_back({{"i", s.i}, {"p", s.p}, {"q", s.q}, {"m", s.m}, {"a", s.a}, {"parity", s.odd ? "odd" : "even"}});
  }
  j["trace"] = trace;
  j["terminal"] = plan.trace.terminal;
  return j.dump(indent);
}

namespace {

UCrossingData positions_from(const json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("plan positions must be an array");
  UCrossingData out;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw std::invalid_argument("plan positions must be integers");
    out.push_back(v.get<int>());
    if (out.back() < 1) throw std::invalid_argument("plan positions are 1-based");
  }
  for (std::size_t k = 1; k < out.size(); ++k) {
    if (out[k] <= out[k - 1]) throw std::invalid_argument("plan positions must be strictly increasing");
  }
  return out;
}

std::optional<int> int_field(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  if (!j[key].is_number_integer()) throw std::invalid_argument(std::string("plan field '") + key + "' must be an integer");
  return j[key].get<int>();
}

}  // namespace

PlanFile parse_plan_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("plan is not valid JSON: ") + e.what());
  }
  PlanFile out;
  if (j.is_array()) {
    out.positions = positions_from(j);
    return out;
  }
  if (!j.is_object() || !j.contains("positions")) {
    throw std::invalid_argument("plan must be an array or an object with \"positions\"");
  }
  out.positions = positions_from(j["positions"]);
  out.p = int_field(j, "p");
  out.q = int_field(j, "q");
  if (j.contains("reversed")) {
    if (!j["reversed"].is_boolean()) throw std::invalid_argument("plan field 'reversed' must be true or false");
    out.reversed = j["reversed"].get<bool>();
  }
  return out;
}

}  // namespace toric
