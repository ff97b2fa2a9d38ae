#pragma once

#include <string>
#include <vector>

#include "toric/braid.hpp"

namespace toric {

struct SvgOptions {
  double column_width = 42;
  double row_gap = 30;
  double margin = 24;
  double stroke_width = 3;
  bool number_columns = true;
  std::string title;
};

// Strands run left to right, one column per letter. For sigma_i the strand
// entering on row i-1 passes over; for sigma_i^-1 it passes under.
// Highlighted 1-based positions get the "flipped" class.
std::string render_svg(const BraidWord& w, const std::vector<int>& highlighted, const SvgOptions& options = {});

}  // namespace toric
