#include "toric/word_problem.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

namespace toric {

HandleReduction handle_reduce(const BraidWord& w, std::size_t step_cap) {
  std::vector<Letter> cur = w.letters();
  const int n = w.strands();
  std::vector<long> last(static_cast<std::size_t>(n) + 1, -1);
  std::size_t reductions = 0;

  while (true) {
    // A sigma_i handle ending at j starts at the last sigma_i before j,
    // provided no lower generator occurs in between.
    long start = -1;
    long stop = -1;
    std::fill(last.begin(), last.end(), -1);
    for (std::size_t j = 0; j < cur.size(); ++j) {
      const int i = cur[j].index;
      const long s = last[i];
      if (s >= 0 && cur[s].sign == -cur[j].sign) {
        start = s;
        stop = static_cast<long>(j);
        break;
      }
      last[i] = static_cast<long>(j);
      for (int k = i + 1; k < n; ++k) last[k] = -1;
    }
    if (start < 0) break;
    if (++reductions > step_cap) throw StepCapExceeded(step_cap);

    const int i = cur[start].index;
    const int e = cur[start].sign;
    std::vector<Letter> next(cur.begin(), cur.begin() + start);
    next.reserve(cur.size() + 2 * static_cast<std::size_t>(stop - start));
    for (long k = start + 1; k < stop; ++k) {
      const Letter& l = cur[k];
      if (l.index == i + 1) {
        next.push_back({i + 1, -e});
        next.push_back({i, l.sign});
        next.push_back({i + 1, e});
      } else {
        next.push_back(l);
      }
    }
    next.insert(next.end(), cur.begin() + stop + 1, cur.end());
    cur = std::move(next);
  }
  return {BraidWord(n, std::move(cur)), reductions};
}

bool is_identity(const BraidWord& w, std::size_t step_cap) {
  if (exponent_sum(w) != 0) return false;
  if (!underlying_permutation(w).is_identity()) return false;
  return handle_reduce(w, step_cap).word.empty();
}

bool are_equal(const BraidWord& a, const BraidWord& b, std::size_t step_cap) {
  return is_identity(concat(a, inverse(b)), step_cap);
}

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 9> kRuleNames{{
    {Rule::free_cancel, "free-cancel"},
    {Rule::free_insert, "free-insert"},
    {Rule::far_commute, "far-commute"},
    {Rule::braid_relation, "braid-relation"},
    {Rule::lemma_slide, "lemma-slide"},
    {Rule::rotate, "rotate"},
    {Rule::conjugate, "conjugate"},
    {Rule::destabilize, "destabilize"},
    {Rule::stabilize, "stabilize"},
}};

[[noreturn]] void illegal(const std::string& why) { throw IllegalStep(why); }

void need_span(const std::vector<Letter>& letters, std::size_t site, std::size_t count,
               std::string_view rule) {
  if (site + count > letters.size()) {
    illegal(std::string(rule) + " at " + std::to_string(site) + " runs past the end of the word");
  }
}

// sigma_i^g sigma_j^{g_j} ... sigma_m^{g_m}  ->
// sigma_j^{g_j} ... sigma_{i-1}^{g_i} sigma_i^{g_{i-1}} ... sigma_m^{g_m} sigma_{i-1}^g
std::vector<Letter> slide_forward(const std::vector<Letter>& seg) {
  if (seg.size() < 3) illegal("lemma-slide needs at least three letters");
  const Letter head = seg.front();
  const int j = seg[1].index;
  for (std::size_t k = 1; k < seg.size(); ++k) {
    if (seg[k].index != j + static_cast<int>(k) - 1) illegal("lemma-slide run is not ascending");
  }
  const int m = seg.back().index;
  const int i = head.index;
  if (!(j < i && i <= m)) illegal("lemma-slide head index outside the run");
  auto exp_of = [&](int idx) { return seg[static_cast<std::size_t>(idx - j) + 1].sign; };
  const int g = head.sign;
  if (!(g == exp_of(i - 1) || exp_of(i - 1) == exp_of(i))) {
    illegal("lemma-slide sign condition fails");
  }
  std::vector<Letter> out;
  for (int idx = j; idx <= m; ++idx) {
    int s = exp_of(idx);
    if (idx == i - 1) s = exp_of(i);
    if (idx == i) s = exp_of(i - 1);
    out.push_back({idx, s});
  }
  out.push_back({i - 1, g});
  return out;
}

std::vector<Letter> slide_backward(const std::vector<Letter>& seg) {
  if (seg.size() < 3) illegal("lemma-slide needs at least three letters");
  const Letter tail = seg.back();
  const int i = tail.index + 1;
  const int j = seg.front().index;
  for (std::size_t k = 0; k + 1 < seg.size(); ++k) {
    if (seg[k].index != j + static_cast<int>(k)) illegal("lemma-slide run is not ascending");
  }
  const int m = seg[seg.size() - 2].index;
  if (!(j < i && i <= m)) illegal("lemma-slide tail index outside the run");
  auto exp_of = [&](int idx) { return seg[static_cast<std::size_t>(idx - j)].sign; };
  std::vector<Letter> out{{i, tail.sign}};
  for (int idx = j; idx <= m; ++idx) {
    int s = exp_of(idx);
    if (idx == i - 1) s = exp_of(i);
    if (idx == i) s = exp_of(i - 1);
    out.push_back({idx, s});
  }
  // the restored left-hand side must satisfy the sign condition itself
  const int g = tail.sign;
  const int g_prev = exp_of(i);
  const int g_cur = exp_of(i - 1);
  if (!(g == g_prev || g_prev == g_cur)) illegal("lemma-slide sign condition fails");
  return out;
}

}  // namespace

std::string_view rule_name(Rule r) {
  for (auto [rule, name] : kRuleNames) {
    if (rule == r) return name;
  }
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (auto [rule, n] : kRuleNames) {
    if (n == name) return rule;
  }
  return std::nullopt;
}

BraidWord apply_step(const BraidWord& w, const RewriteStep& step) {
  std::vector<Letter> letters = w.letters();
  const std::size_t s = step.site;
  const auto name = rule_name(step.rule);
  switch (step.rule) {
    case Rule::free_cancel: {
      need_span(letters, s, 2, name);
      if (!cancels(letters[s], letters[s + 1])) illegal("free-cancel letters are not inverse");
      letters.erase(letters.begin() + s, letters.begin() + s + 2);
      return BraidWord(w.strands(), std::move(letters));
    }
    case Rule::free_insert: {
      if (s > letters.size()) illegal("free-insert site past the end of the word");
      const Letter l = step.letter;
      letters.insert(letters.begin() + s, {l, l.inverse()});
      return BraidWord(w.strands(), std::move(letters));
    }
    case Rule::far_commute: {
      need_span(letters, s, 2, name);
      if (std::abs(letters[s].index - letters[s + 1].index) < 2) {
        illegal("far-commute letters are adjacent generators");
      }
      std::swap(letters[s], letters[s + 1]);
      return BraidWord(w.strands(), std::move(letters));
    }
    case Rule::braid_relation: {
      need_span(letters, s, 3, name);
      const Letter a = letters[s], b = letters[s + 1], c = letters[s + 2];
      if (a.index != c.index || std::abs(a.index - b.index) != 1) {
        illegal("braid-relation needs an i, i+-1, i pattern");
      }
      if (!(a.sign == b.sign || b.sign == c.sign)) illegal("braid-relation sign condition fails");
      letters[s] = {b.index, c.sign};
      letters[s + 1] = {a.index, b.sign};
      letters[s + 2] = {b.index, a.sign};
      return BraidWord(w.strands(), std::move(letters));
    }
    case Rule::lemma_slide: {
      need_span(letters, s, step.span, name);
      std::vector<Letter> seg(letters.begin() + s, letters.begin() + s + step.span);
      std::vector<Letter> out = step.backward ? slide_backward(seg) : slide_forward(seg);
      std::copy(out.begin(), out.end(), letters.begin() + s);
      return BraidWord(w.strands(), std::move(letters));
    }
    case Rule::rotate: {
      if (s > letters.size()) illegal("rotate amount exceeds the word length");
      std::rotate(letters.begin(), letters.begin() + s, letters.end());
      return BraidWord(w.strands(), std::move(letters));
    }
    case Rule::conjugate: {
      try {
        return conjugate(w, BraidWord(w.strands(), step.conjugator));
      } catch (const std::invalid_argument& e) {
        illegal(std::string("conjugate: ") + e.what());
      }
    }
    case Rule::destabilize: {
      if (!can_destabilize(w) || s + 1 != letters.size()) {
        illegal("destabilize needs a unique terminal top generator at the given site");
      }
      return destabilize(w);
    }
    case Rule::stabilize: {
      if (step.sign != 1 && step.sign != -1) illegal("stabilize sign must be +-1");
      if (s != letters.size()) illegal("stabilize site must be the word length");
      return stabilize(w, step.sign);
    }
  }
  illegal("unknown rule");
}

CertificateCheck check_certificate(const Certificate& c) {
  BraidWord cur = c.start;
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const RewriteStep& step = c.steps[k];
    if (c.kind == CertificateKind::group_equality && is_markov_move(step.rule)) {
      return {false, k, "Markov move in a group-equality certificate"};
    }
    try {
      cur = apply_step(cur, step);
    } catch (const IllegalStep& e) {
      return {false, k, e.what()};
    }
  }
  if (!(cur == c.end)) {
    return {false, c.steps.size(), "replay ends at '" + cur.to_string() + "' on " +
                                       std::to_string(cur.strands()) + " strands, not the stated end"};
  }
  return {true, std::nullopt, {}};
}

namespace {

std::string word_line(std::string_view tag, const BraidWord& w) {
  std::string s(tag);
  s += ' ';
  s += std::to_string(w.strands());
  s += " :";
  if (!w.empty()) {
    s += ' ';
    s += w.to_string();
  }
  return s;
}

BraidWord parse_word_line(std::string_view rest, std::size_t line_no) {
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": expected '<strands> : <letters>'");
  }
  std::string_view head = rest.substr(0, colon);
  while (!head.empty() && head.back() == ' ') head.remove_suffix(1);
  while (!head.empty() && head.front() == ' ') head.remove_prefix(1);
  int strands = 0;
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), strands);
  if (ec != std::errc{} || ptr != head.data() + head.size()) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": bad strand count");
  }
  return BraidWord::parse(rest.substr(colon + 1), strands);
}

std::string letters_param(const std::vector<Letter>& letters) {
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(letters[i].sign * letters[i].index);
  }
  return s;
}

long parse_long(std::string_view v, std::size_t line_no) {
  long out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": bad number '" + std::string(v) + "'");
  }
  return out;
}

Letter signed_letter(long v, std::size_t line_no) {
  if (v == 0) throw std::invalid_argument("line " + std::to_string(line_no) + ": zero letter");
  return {static_cast<int>(v > 0 ? v : -v), v > 0 ? 1 : -1};
}

}  // namespace

std::string serialize_certificate(const Certificate& c) {
  std::ostringstream out;
  out << "kind "
      << (c.kind == CertificateKind::group_equality ? "group-equality" : "markov-equivalence") << '\n';
  out << word_line("start", c.start) << '\n';
  for (const auto& step : c.steps) {
    out << rule_name(step.rule) << ' ' << step.site;
    switch (step.rule) {
      case Rule::free_insert:
        out << " letter=" << step.letter.sign * step.letter.index;
        break;
      case Rule::lemma_slide:
        out << " span=" << step.span << " dir=" << (step.backward ? "backward" : "forward");
        break;
      case Rule::conjugate:
        out << " g=" << letters_param(step.conjugator);
        break;
      case Rule::stabilize:
        out << " sign=" << step.sign;
        break;
      default:
        break;
    }
    out << '\n';
  }
  out << word_line("end", c.end) << '\n';
  return out.str();
}

Certificate parse_certificate(std::string_view text) {
  Certificate c;
  bool have_start = false, have_end = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    std::string rest;
    std::getline(fields, rest);
    if (have_end) throw std::invalid_argument("line " + std::to_string(line_no) + ": content after 'end'");
    if (head == "kind") {
      std::istringstream k(rest);
      std::string kind;
      k >> kind;
      if (kind == "group-equality") {
        c.kind = CertificateKind::group_equality;
      } else if (kind == "markov-equivalence") {
        c.kind = CertificateKind::markov_equivalence;
      } else {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown kind '" + kind + "'");
      }
      continue;
    }
    if (head == "start") {
      c.start = parse_word_line(rest, line_no);
      have_start = true;
      continue;
    }
    if (head == "end") {
      c.end = parse_word_line(rest, line_no);
      have_end = true;
      continue;
    }
    if (!have_start) throw std::invalid_argument("line " + std::to_string(line_no) + ": step before 'start'");
    auto rule = rule_from_name(head);
    if (!rule) throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown rule '" + head + "'");
    RewriteStep step;
    step.rule = *rule;
    std::istringstream params(rest);
    std::string site;
    if (!(params >> site)) throw std::invalid_argument("line " + std::to_string(line_no) + ": missing site");
    const long site_value = parse_long(site, line_no);
    if (site_value < 0) throw std::invalid_argument("line " + std::to_string(line_no) + ": negative site");
    step.site = static_cast<std::size_t>(site_value);
    std::string kv;
    while (params >> kv) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected key=value, got '" + kv + "'");
      }
      const std::string key = kv.substr(0, eq);
      const std::string value = kv.substr(eq + 1);
      if (key == "letter") {
        step.letter = signed_letter(parse_long(value, line_no), line_no);
      } else if (key == "span") {
        step.span = static_cast<std::size_t>(parse_long(value, line_no));
      } else if (key == "dir") {
        if (value != "forward" && value != "backward") {
          throw std::invalid_argument("line " + std::to_string(line_no) + ": dir must be forward or backward");
        }
        step.backward = value == "backward";
      } else if (key == "sign") {
        step.sign = static_cast<int>(parse_long(value, line_no));
      } else if (key == "g") {
        std::string_view rest_g = value;
        while (!rest_g.empty()) {
          const auto comma = rest_g.find(',');
          step.conjugator.push_back(signed_letter(parse_long(rest_g.substr(0, comma), line_no), line_no));
          if (comma == std::string_view::npos) break;
          rest_g.remove_prefix(comma + 1);
        }
      } else {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown parameter '" + key + "'");
      }
    }
    c.steps.push_back(std::move(step));
  }
  if (!have_start || !have_end) throw std::invalid_argument("certificate needs both 'start' and 'end' lines");
  return c;
}

}  // namespace toric
