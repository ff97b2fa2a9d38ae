#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "toric/invariants.hpp"
#include "toric/plan_json.hpp"
#include "toric/svg.hpp"
#include "toric/unknotting.hpp"
#include "toric/word_problem.hpp"

namespace toric::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t env_budget(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0' || v <= 0) throw UsageError(std::string(name) + " must be a positive integer, got '" + raw + "'");
  return static_cast<std::size_t>(v);
}

struct Budgets {
  std::size_t crossing = kDefaultCrossingBudget;
  std::size_t search = kDefaultSearchBudget;
  std::size_t both = 0;
  std::size_t crossing_flag = 0;
  std::size_t search_flag = 0;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--budget", both, "Crossing and search budget together")->check(CLI::PositiveNumber);
    cmd->add_option("--crossing-budget", crossing_flag, "Largest word the Jones polynomial is computed for")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--search-budget", search_flag, "Work limit for the certificate search")->check(CLI::PositiveNumber);
  }

  VerdictOptions resolve() const {
    VerdictOptions o;
    o.crossing_budget = env_budget("TORIC_CROSSING_BUDGET", crossing);
    o.search_budget = env_budget("TORIC_SEARCH_BUDGET", search);
    if (both > 0) o.crossing_budget = o.search_budget = both;
    if (crossing_flag > 0) o.crossing_budget = crossing_flag;
    if (search_flag > 0) o.search_budget = search_flag;
    return o;
  }
};

std::string list(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

std::string list(const std::vector<long>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
  if (!f.flush()) throw UsageError("cannot write " + path);
}

int exit_for(TrivialityStatus s) {
  switch (s) {
    case TrivialityStatus::certified_trivial_unlink:
      return kVerified;
    case TrivialityStatus::certified_nontrivial:
      return kNontrivial;
    case TrivialityStatus::inconclusive:
      return kInconclusive;
  }
  return kInconclusive;
}

std::string jones_text(const LaurentPolynomial& p) { return format_pretty(p, "t", 2); }

void check_positions(const UCrossingData& positions, int p, int q) {
  const int n = q * (p - 1);
  for (int x : positions) {
    if (x < 1 || x > n) {
      throw UsageError("position " + std::to_string(x) + " is outside 1.." + std::to_string(n) + " for B(" +
                       std::to_string(p) + "," + std::to_string(q) + ")");
    }
  }
}

void print_trace(std::ostream& out, const EuclidTrace& tr) {
  out << "trace:\n";
  for (const auto& s : tr.steps) {
    out << "  " << s.i << (s.odd ? " odd  " : " even ") << "p=" << s.p << " q=" << s.q << " m=" << s.m << " a=" << s.a
        << "\n";
  }
  out << "terminal: " << tr.terminal << "\n";
}

UnknottingPlan procedure_plan(int p, int q) {
  UnknottingPlan plan;
  plan.params = ToricParams::make(p, q);
  plan.trace = euclid_trace(p, q);
  plan.positions = u_crossing_data(p, q);
  for (int x : plan.positions) plan.provenance.push_back({x, 0, "U", 0});
  return plan;
}

json verdict_json(const TrivialityVerdict& v) {
  const auto& ev = v.evidence;
  json j;
  j["verdict"] = std::string(status_name(v.status));
  j["components"] = ev.components;
  j["expected_components"] = ev.expected_components;
  j["alexander"] = format_pretty(ev.alexander);
  j["alexander_matches"] = ev.alexander_matches;
  if (ev.jones) {
    j["jones"] = jones_text(*ev.jones);
    j["jones_matches"] = ev.jones_matches;
  } else {
    j["jones"] = nullptr;
    j["jones_note"] = ev.jones_note;
  }
  j["certificate_attempted"] = ev.certificate_attempted;
  j["certificate_steps"] = ev.certificate ? json(ev.certificate->steps.size()) : json(nullptr);
  if (!ev.certificate_note.empty()) j["certificate_note"] = ev.certificate_note;
  return j;
}

void print_verdict(std::ostream& out, const TrivialityVerdict& v) {
  const auto& ev = v.evidence;
  out << "components: " << ev.components << " (unlink: " << ev.expected_components << ")\n";
  out << "alexander: " << format_pretty(ev.alexander) << (ev.alexander_matches ? " (matches unlink)" : " (differs)")
      << "\n";
  if (ev.jones) {
    out << "jones: " << jones_text(*ev.jones) << (ev.jones_matches ? " (matches unlink)" : " (differs)") << "\n";
  } else {
    out << "jones: skipped, " << ev.jones_note << "\n";
  }
  if (ev.certificate) {
    out << "certificate: " << ev.certificate->steps.size() << " steps, checked\n";
  } else if (ev.certificate_attempted) {
    out << "certificate: none, " << ev.certificate_note << "\n";
  } else {
    out << "certificate: not attempted\n";
  }
  out << "verdict: " << status_name(v.status) << "\n";
}

int cmd_ucd(std::ostream& out, int p, int q, bool procedure, bool mirror, bool as_json) {
  UnknottingPlan plan = procedure ? procedure_plan(p, q) : minimal_ucd(p, q);
  if (mirror) plan.positions = mirrored_ucd(plan);
  if (as_json) {
    json j = json::parse(plan_to_json(plan));
    if (mirror) {
      j["reversed"] = true;
      j.erase("provenance");
    }
    j["source"] = procedure ? "procedure" : "minimal";
    out << j.dump(2) << "\n";
    return kVerified;
  }
  const auto& pr = plan.params;
  out << "K(" << p << "," << q << "): " << pr.crossings() << " crossings, d = " << pr.d << "\n";
  out << (procedure ? "procedure" : "minimal") << (mirror ? " (mirrored, for the reversed braid)" : "") << ": "
      << list(plan.positions) << "\n";
  out << "count: " << plan.positions.size() << "\n";
  out << "unknotting number: " << unknotting_number(p, q) << "\n";
  print_trace(out, plan.trace);
  return kVerified;
}

int cmd_verify(std::ostream& out, int p, int q, const std::string& plan_path, const VerdictOptions& base,
               const std::string& cert_in, const std::string& cert_out, bool as_json) {
  const auto params = ToricParams::make(p, q);
  UCrossingData positions;
  bool reversed = false;
  std::string source = "minimal";
  if (!plan_path.empty()) {
    PlanFile f;
    try {
      f = parse_plan_json(read_file(plan_path));
    } catch (const std::invalid_argument& e) {
      throw UsageError(plan_path + ": " + e.what());
    }
    if ((f.p && *f.p != p) || (f.q && *f.q != q)) {
      throw UsageError(plan_path + " was written for different torus parameters");
    }
    positions = f.positions;
    reversed = f.reversed;
    source = plan_path;
  } else {
    positions = minimal_ucd(p, q).positions;
  }
  check_positions(positions, p, q);
  const BraidWord w = flipped_toric_braid(p, q, positions, reversed);

  VerdictOptions options = base;
  std::optional<Certificate> supplied;
  if (!cert_in.empty()) {
    try {
      supplied = parse_certificate(read_file(cert_in));
    } catch (const std::invalid_argument& e) {
      throw UsageError(cert_in + ": " + e.what());
    }
    const auto check = check_certificate(*supplied);
    if (!check.ok) throw UsageError(cert_in + ": step " + (check.failed_step ? std::to_string(*check.failed_step) : std::string("end")) + ": " + check.reason);
    if (supplied->start.strands() != w.strands() || supplied->start.letters() != w.letters()) {
      throw UsageError(cert_in + " does not start from the flipped braid");
    }
    if (supplied->end.length() != 0 || supplied->end.strands() != params.d) {
      throw UsageError(cert_in + " does not end at the trivial braid on " + std::to_string(params.d) + " strands");
    }
    options.try_certificate = false;
  }

  TrivialityVerdict v = triviality_verdict(w, params.d, options);
  if (supplied && v.status != TrivialityStatus::certified_nontrivial) {
    v.evidence.certificate = supplied;
    v.evidence.certificate_note = "supplied by " + cert_in;
    v.status = TrivialityStatus::certified_trivial_unlink;
  }
  if (!cert_out.empty() && v.evidence.certificate) write_file(cert_out, serialize_certificate(*v.evidence.certificate));

  if (as_json) {
    json j = verdict_json(v);
    j["p"] = p;
    j["q"] = q;
    j["positions"] = positions;
    j["reversed"] = reversed;
    out << j.dump(2) << "\n";
  } else {
    out << (reversed ? "reverse(B(" : "B(") << p << "," << q << (reversed ? "))" : ")") << " on " << w.strands()
        << " strands, " << w.length() << " crossings, flipped " << list(positions) << " (" << source << ")\n";
    print_verdict(out, v);
  }
  if (!cert_out.empty() && !v.evidence.certificate) out << "no certificate written to " << cert_out << "\n";
  return exit_for(v.status);
}

int cmd_invariant(std::ostream& out, const std::string& kind, const std::string& braid, int strands, bool canonical,
                  bool as_json, const VerdictOptions& options) {
  BraidWord w(1);
  try {
    w = BraidWord::parse(braid, strands);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  LaurentPolynomial poly;
  int denominator = 1;
  if (kind == "alexander") {
    poly = alexander_of_closure(w);
  } else {
    try {
      poly = jones_of_closure(w, options.crossing_budget);
    } catch (const CrossingBudgetExceeded& e) {
      throw UsageError(e.what());
    }
    denominator = 2;
  }
  if (as_json) {
    json j;
    j["kind"] = kind;
    j["strands"] = strands;
    j["braid"] = w.to_string();
    j["polynomial"] = format_pretty(poly, "t", denominator);
    j["canonical"] = format_canonical(poly, "t", denominator);
    json terms = json::array();
    for (const auto& [e, c] : poly.terms()) terms.push_back({{"exponent", e}, {"denominator", denominator}, {"coefficient", c}});
    j["terms"] = terms;
    out << j.dump(2) << "\n";
  } else {
    out << (canonical ? format_canonical(poly, "t", denominator) : format_pretty(poly, "t", denominator)) << "\n";
  }
  return kVerified;
}

int cmd_render(std::ostream& out, int p, int q, const std::string& highlight, const std::string& path,
               const SvgOptions& geometry) {
  ToricParams::make(p, q);
  UCrossingData positions;
  if (highlight == "minimal") positions = minimal_ucd(p, q).positions;
  if (highlight == "procedure") positions = u_crossing_data(p, q);
  const BraidWord w = flipped_toric_braid(p, q, positions);
  SvgOptions o = geometry;
  if (o.title.empty()) o.title = "B(" + std::to_string(p) + "," + std::to_string(q) + ")";
  const std::string svg = render_svg(w, positions, o);
  if (path.empty() || path == "-") {
    out << svg;
  } else {
    write_file(path, svg);
    out << "wrote " << path << ": " << w.length() << " crossings, " << positions.size() << " flipped\n";
  }
  return kVerified;
}

int cmd_parity(std::ostream& out, int p, int q, bool as_printed, bool corrected, const VerdictOptions& options) {
  ToricParams::make(p, q);
  if (std::gcd(p, q) != 1) throw UsageError("parity handles knots only; gcd(p,q) = " + std::to_string(std::gcd(p, q)));
  if (!as_printed && !corrected) as_printed = corrected = true;
  const auto r = matlab_parity(p, q);
  const auto minimal = minimal_ucd(p, q).positions;
  auto sorted = r.mukd1;
  std::sort(sorted.begin(), sorted.end());
  out << "MUKD1: " << list(r.mukd1) << "\n";
  out << "MUKD1 as a set " << (sorted == minimal ? "equals" : "differs from") << " minimal " << list(minimal) << "\n";
  out << "loop bound: " << r.loop_bound;
  if (r.loop_bound_truncates) {
    out << ", truncates the recursion; literal W = " << list(r.mukd1_literal) << "\n";
  } else {
    out << ", covers the recursion\n";
  }
  const int n = q * (p - 1);
  if (as_printed) {
    out << "MUKD2 as printed: " << list(r.mukd2_as_printed) << "\n";
    if (!r.as_printed_in_range) {
      out << "MUKD2 as printed: invalid, positions outside 1.." << n << "\n";
    } else {
      UCrossingData v(r.mukd2_as_printed.begin(), r.mukd2_as_printed.end());
      std::sort(v.begin(), v.end());
      if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
        out << "MUKD2 as printed: invalid, repeated positions\n";
      } else {
        out << "MUKD2 as printed on reverse(B(" << p << "," << q
            << ")): " << status_name(verify_positions(p, q, v, true, options).status) << "\n";
      }
    }
  }
  if (corrected) {
    out << "MUKD2 corrected: " << list(r.mukd2_corrected) << "\n";
    out << "MUKD2 corrected on reverse(B(" << p << "," << q
        << ")): " << status_name(verify_positions(p, q, r.mukd2_corrected, true, options).status) << "\n";
  }
  return kVerified;
}

struct TableRow {
  int p = 0, q = 0, d = 0;
  std::size_t procedure = 0, minimal = 0;
  std::optional<TrivialityVerdict> verdict;
};

int cmd_table(std::ostream& out, int pmin, int pmax, int qmin, int qmax, bool verify, unsigned threads,
              const VerdictOptions& options) {
  if (pmin < 2 || qmin < 1 || pmax < pmin || qmax < qmin) throw UsageError("table needs 2 <= pmin <= pmax and 1 <= qmin <= qmax");
  std::vector<TableRow> rows;
  for (int p = pmin; p <= pmax; ++p) {
    for (int q = qmin; q <= qmax; ++q) rows.push_back({p, q, std::gcd(p, q), 0, 0, std::nullopt});
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < rows.size(); k = next++) {
      auto& r = rows[k];
      r.procedure = u_crossing_data(r.p, r.q).size();
      const auto plan = minimal_ucd(r.p, r.q);
      r.minimal = plan.positions.size();
      if (verify) r.verdict = verify_plan(plan, options);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, rows.size()));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  out << "p,q,d,crossings,unknotting_number,procedure_count,minimal_count,procedure_is_minimal";
  if (verify) out << ",components,alexander,jones,certificate,verdict";
  out << "\n";
  for (const auto& r : rows) {
    const int u = unknotting_number(r.p, r.q);
    out << r.p << "," << r.q << "," << r.d << "," << r.q * (r.p - 1) << "," << u << "," << r.procedure << ","
        << r.minimal << "," << (static_cast<int>(r.procedure) == u ? "yes" : "no");
    if (r.verdict) {
      const auto& ev = r.verdict->evidence;
      out << "," << ev.components << "," << (ev.alexander_matches ? "unlink" : "differs") << ","
          << (ev.jones ? (ev.jones_matches ? "unlink" : "differs") : "skipped") << ","
          << (ev.certificate ? "found" : ev.certificate_attempted ? "none" : "not-tried") << ","
          << status_name(r.verdict->status);
    }
    out << "\n";
  }
  return kVerified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unknotting crossing data for torus knots and links"};
  app.require_subcommand(1);
  app.fallthrough(false);

  int p = 0, q = 0;
  auto add_pq = [&](CLI::App* cmd) {
    cmd->add_option("p", p, "Number of strands")->required();
    cmd->add_option("q", q, "Number of twists")->required();
  };

  auto* ucd = app.add_subcommand("ucd", "Print crossing data for B(p,q)");
  add_pq(ucd);
  bool procedure = false, minimal = false, mirror = false, ucd_json = false;
  auto* proc_flag = ucd->add_flag("--procedure", procedure, "Data from the one-pass procedure");
  ucd->add_flag("--minimal", minimal, "Data from the Euclid recursion (default)")->excludes(proc_flag);
  ucd->add_flag("--mirror", mirror, "Map positions onto the reversed braid");
  ucd->add_flag("--json", ucd_json, "Emit a plan as JSON");

  auto* verify = app.add_subcommand("verify", "Flip crossings and decide whether the closure is an unlink");
  add_pq(verify);
  std::string plan_path, cert_in, cert_out;
  bool verify_json = false;
  Budgets verify_budgets;
  verify->add_option("--plan", plan_path, "Plan JSON with the positions to flip");
  verify->add_option("--certificate", cert_in, "Check this certificate instead of searching");
  verify->add_option("--emit-certificate", cert_out, "Write the certificate that was found");
  verify->add_flag("--json", verify_json, "Emit the report as JSON");
  verify_budgets.add_flags(verify);

  auto* invariant = app.add_subcommand("invariant", "Alexander or Jones polynomial of a closed braid");
  std::string kind, braid;
  int strands = 0;
  bool canonical = false, inv_json = false;
  Budgets inv_budgets;
  invariant->add_option("kind", kind, "alexander or jones")->required()->check(CLI::IsMember({"alexander", "jones"}));
  invariant->add_option("--braid", braid, "Signed generator indices, e.g. \"1 -2 1\"")->required();
  invariant->add_option("--strands", strands, "Number of strands")->required()->check(CLI::PositiveNumber);
  invariant->add_flag("--canonical", canonical, "Every term written out, ascending");
  invariant->add_flag("--json", inv_json, "Emit JSON");
  inv_budgets.add_flags(invariant);

  auto* render = app.add_subcommand("render", "Draw B(p,q) as SVG with flipped crossings marked");
  add_pq(render);
  std::string highlight = "minimal", svg_path;
  SvgOptions geometry;
  render->add_option("--highlight", highlight, "minimal, procedure or none")
      ->check(CLI::IsMember({"minimal", "procedure", "none"}));
  render->add_option("-o,--output", svg_path, "Output file (stdout if omitted)");
  render->add_option("--column-width", geometry.column_width)->check(CLI::PositiveNumber);
  render->add_option("--row-gap", geometry.row_gap)->check(CLI::PositiveNumber);
  render->add_option("--title", geometry.title);

  auto* parity = app.add_subcommand("parity", "Run the MATLAB program and check both MUKD2 formulas");
  add_pq(parity);
  bool as_printed = false, corrected = false;
  Budgets parity_budgets;
  parity->add_flag("--as-printed", as_printed, "The MUKD2 formula exactly as given");
  parity->add_flag("--corrected", corrected, "MUKD2 as q(p-1) + 1 - W");
  parity_budgets.add_flags(parity);

  auto* table = app.add_subcommand("table", "CSV of counts and verdicts over a grid");
  int pmin = 2, pmax = 8, qmin = 1, qmax = 8;
  unsigned threads = 0;
  bool counts_only = false;
  Budgets table_budgets;
  table->add_option("--pmin", pmin);
  table->add_option("--pmax", pmax);
  table->add_option("--qmin", qmin);
  table->add_option("--qmax", qmax);
  table->add_option("--threads", threads, "Worker threads (0: one per core)");
  table->add_flag("--counts-only", counts_only, "Skip verification");
  table_budgets.add_flags(table);

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerified;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kVerified;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*ucd) return cmd_ucd(out, p, q, procedure, mirror, ucd_json);
    if (*verify) return cmd_verify(out, p, q, plan_path, verify_budgets.resolve(), cert_in, cert_out, verify_json);
    if (*invariant) return cmd_invariant(out, kind, braid, strands, canonical, inv_json, inv_budgets.resolve());
    if (*render) return cmd_render(out, p, q, highlight, svg_path, geometry);
    if (*parity) return cmd_parity(out, p, q, as_printed, corrected, parity_budgets.resolve());
    if (*table) return cmd_table(out, pmin, pmax, qmin, qmax, !counts_only, threads, table_budgets.resolve());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace toric::cli
