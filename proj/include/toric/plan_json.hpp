#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "toric/unknotting.hpp"

namespace toric {

std::string plan_to_json(const UnknottingPlan& plan, int indent = 2);

// What a plan file must provide: positions, optionally tagged with p and q.
struct PlanFile {
  std::optional<int> p;
  std::optional<int> q;
  UCrossingData positions;
  bool reversed = false;  // positions index into reverse(B(p,q))
};

// Accepts a full plan object, an object with only "positions", or a bare array.
// Throws std::invalid_argument on malformed input.
PlanFile parse_plan_json(std::string_view text);

}  // namespace toric
