#include "toric/svg.hpp"

#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toric {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

struct Point {
  double x, y;
};

std::string points_attr(const std::vector<Point>& pts) {
  std::string s;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k) s += ' ';
    s += num(pts[k].x) + "," + num(pts[k].y);
  }
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const BraidWord& w, const std::vector<int>& highlighted, const SvgOptions& o) {
  if (o.column_width <= 0 || o.row_gap <= 0 || o.margin < 0 || o.stroke_width <= 0) {
    throw std::invalid_argument("SVG geometry must be positive");
  }
  const std::set<int> flipped(highlighted.begin(), highlighted.end());
  for (int pos : flipped) {
    if (pos < 1 || static_cast<std::size_t>(pos) > w.length()) {
      throw std::out_of_range("highlighted position " + std::to_string(pos) + " is not a crossing of the word");
    }
  }
  const int n = w.strands();
  const std::size_t cols = w.length();
  const double label_space = o.number_columns ? 18 : 0;
  const double width = 2 * o.margin + static_cast<double>(std::max<std::size_t>(cols, 1)) * o.column_width;
  const double height = 2 * o.margin + (n - 1) * o.row_gap + label_space;
  auto row_y = [&](int r) { return o.margin + r * o.row_gap; };
  auto col_x = [&](std::size_t c) { return o.margin + static_cast<double>(c) * o.column_width; };

  std::vector<int> strand_at(n);  // strand occupying each row
  std::iota(strand_at.begin(), strand_at.end(), 0);
  std::vector<std::vector<Point>> open(n);
  std::vector<std::vector<std::vector<Point>>> done(n);
  for (int s = 0; s < n; ++s) open[s].push_back({col_x(0), row_y(s)});

  std::ostringstream glyphs;
  for (std::size_t c = 0; c < cols; ++c) {
    const Letter l = w[c];
    const int upper = l.index - 1;  // rows upper and upper+1 swap
    const double x0 = col_x(c), x1 = col_x(c + 1);
    for (int r = 0; r < n; ++r) {
      if (r == upper || r == upper + 1) continue;
      open[strand_at[r]].push_back({x1, row_y(r)});
    }
    const int down = strand_at[upper];    // moves from row upper to upper+1
    const int up = strand_at[upper + 1];  // moves from row upper+1 to upper
    const int over = l.sign > 0 ? down : up;
    const int under = l.sign > 0 ? up : down;
    const int under_from = under == down ? upper : upper + 1;
    const int under_to = under == down ? upper + 1 : upper;
    const int over_to = over == down ? upper + 1 : upper;
    open[over].push_back({x1, row_y(over_to)});
    const double ya = row_y(under_from), yb = row_y(under_to);
    open[under].push_back({x0 + (x1 - x0) / 3, ya + (yb - ya) / 3});
    done[under].push_back(std::move(open[under]));
    open[under] = {{x0 + 2 * (x1 - x0) / 3, ya + 2 * (yb - ya) / 3}, {x1, yb}};
    std::swap(strand_at[upper], strand_at[upper + 1]);

    const int position = static_cast<int>(c) + 1;
    const bool is_flipped = flipped.count(position) > 0;
    const double cx = (x0 + x1) / 2, cy = (row_y(upper) + row_y(upper + 1)) / 2;
    glyphs << "  <g class=\"crossing" << (is_flipped ? " flipped" : "") << "\" data-position=\"" << position
           << "\" data-letter=\"" << l.sign * l.index << "\">";
    glyphs << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(o.row_gap / 3) << "\"/>";
    if (o.number_columns) {
      glyphs << "<text x=\"" << num(cx) << "\" y=\"" << num(height - o.margin / 2) << "\">" << position << "</text>";
    }
    glyphs << "</g>\n";
  }
  for (int s = 0; s < n; ++s) done[s].push_back(std::move(open[s]));

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  if (!o.title.empty()) out << "  <title>" << escape(o.title) << "</title>\n";
  out << "  <style>\n"
      << "    .strand { fill: none; stroke: #222; stroke-width: " << num(o.stroke_width)
      << "; stroke-linecap: round; stroke-linejoin: round; }\n"
      << "    .crossing circle { fill: none; stroke: none; }\n"
      << "    .crossing.flipped circle { fill: #f4c430; fill-opacity: 0.35; stroke: #d62728; stroke-width: 1.5; }\n"
      << "    .crossing text { font: 9px sans-serif; text-anchor: middle; fill: #666; }\n"
      << "    .crossing.flipped text { fill: #d62728; font-weight: bold; }\n"
      << "  </style>\n";
  out << glyphs.str();
  for (int s = 0; s < n; ++s) {
    for (const auto& piece : done[s]) {
      if (piece.size() < 2) continue;
      out << "  <polyline class=\"strand\" data-strand=\"" << s + 1 << "\" points=\"" << points_attr(piece)
          << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace toric
