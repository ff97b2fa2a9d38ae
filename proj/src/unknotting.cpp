#include "toric/unknotting.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

void check_params(int p, int q) {
  if (p < 2 || q < 1) {
    throw std::invalid_argument("torus parameters need p >= 2 and q >= 1, got (" + std::to_string(p) + "," +
                                std::to_string(q) + ")");
  }
}

// {k(p-1) - j : k = 2..top, 0 <= j <= k-2}
void staircase(std::vector<int>& out, int p, int top, int offset) {
  for (int k = 2; k <= top; ++k) {
    for (int j = k - 2; j >= 0; --j) out.push_back(offset + k * (p - 1) - j);
  }
}

}  // namespace

ToricParams ToricParams::make(int p, int q) {
  check_params(p, q);
  return {p, q, std::gcd(p, q)};
}

UCrossingData u_crossing_data(int p, int q) {
  check_params(p, q);
  std::vector<int> out;
  if (p >= q) {
    staircase(out, p, q, 0);
  } else {
    const int m = q / p;
    const int a = q % p;
    for (int j = 0; j < m; ++j) staircase(out, p, p, j * p * (p - 1));
    staircase(out, p, a, m * p * (p - 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int unknotting_number(int p, int q) {
  check_params(p, q);
  return ((p - 1) * (q - 1) + std::gcd(p, q) - 1) / 2;
}

EuclidTrace euclid_trace(int p, int q) {
  check_params(p, q);
  EuclidTrace trace;
  int pi = p, qi = q;
  int a_prev2 = 0, a_prev1 = 0;  // a_{i-2}, a_{i-1}
  for (int i = 1;; ++i) {
    EuclidStep s;
    s.i = i;
    s.odd = i % 2 == 1;
    if (i == 2) {
      pi = p;
      qi = a_prev1;
    } else if (i >= 3) {
      pi = s.odd ? a_prev1 : a_prev2;
      qi = s.odd ? a_prev2 : a_prev1;
    }
    s.p = pi;
    s.q = qi;
    if (s.odd) {
      s.m = qi / pi;
      s.a = qi % pi;
    } else {
      s.m = pi / qi;
      s.a = pi % qi;
    }
    trace.steps.push_back(s);
    if (s.a == 0) {
      trace.terminal = "a=0";
      break;
    }
    if (s.a == 1) {
      trace.terminal = "a=1";
      break;
    }
    if (s.odd && s.a == pi - 1) {
      trace.terminal = "a=p-1";
      break;
    }
    a_prev2 = a_prev1;
    a_prev1 = s.a;
  }
  return trace;
}

UnknottingPlan minimal_ucd(int p, int q) {
  UnknottingPlan plan;
  plan.params = ToricParams::make(p, q);
  plan.trace = euclid_trace(p, q);
  const int P1 = p - 1;
  std::map<int, Provenance> found;
  auto add = [&](int position, int step, const char* set, int block) {
    if (!found.emplace(position, Provenance{position, step, set, block}).second) {
      throw std::logic_error("recursion produced position " + std::to_string(position) + " twice");
    }
  };

  long offset_blocks = 0;  // sum of m_k p_k over earlier odd steps
  for (const auto& s : plan.trace.steps) {
    const int offset = static_cast<int>(offset_blocks * P1);
    if (s.odd) {
      for (int j = 0; j <= s.m; ++j) {
        const int l = j < s.m ? s.p : s.a;
        for (int k = 1; k <= l - 1; ++k) {
          for (int g = 1; g <= k; ++g) {
            add(offset + j * s.p * P1 + k * P1 + s.p - g, s.i, j < s.m ? "X" : "Y", j);
          }
        }
      }
      offset_blocks += static_cast<long>(s.m) * s.p;
    } else {
      for (int j = 1; j <= s.m - 1; ++j) {
        for (int k = 1; k <= s.q - 1; ++k) {
          for (int g = 1; g <= k; ++g) add(offset + k * P1 + (s.p - j * s.q) - g, s.i, "Xij", j);
        }
      }
    }
  }
  for (auto& [pos, prov] : found) {
    plan.positions.push_back(pos);
    plan.provenance.push_back(prov);
  }
  return plan;
}

UCrossingData mirrored_positions(const UCrossingData& positions, int p, int q) {
  const int n = q * (p - 1);
  UCrossingData out;
  out.reserve(positions.size());
  for (int x : positions) out.push_back(n + 1 - x);
  std::sort(out.begin(), out.end());
  return out;
}

UCrossingData mirrored_ucd(const UnknottingPlan& plan) {
  return mirrored_positions(plan.positions, plan.params.p, plan.params.q);
}

namespace {

int decimal_digits(int v) { return static_cast<int>(std::to_string(v).size()); }

// Runs the program's main loop for at most `bound` values of i (i = 3..bound),
// or without limit when bound <= 0. Returns W.
std::vector<int> matlab_w(int P, int Q, int bound) {
  std::map<int, int> pp, qq, aa, mm;
  std::map<int, std::vector<int>> V;  // rows, by i-2
  pp[3] = P;
  qq[3] = Q;
  aa[2] = P;
  aa[1] = Q;
  int count = 3;
  for (int i = 3; bound <= 0 || i <= bound; ++i) {
    ++count;
    if (i % 2 == 0) {
      aa[i] = pp[i] % qq[i];
      mm[i] = (pp[i] - aa[i]) / qq[i];
      std::vector<int> B3;
      if (mm[i] >= 2) {
        for (int j = 1; j <= mm[i] - 1; ++j) {
          for (int k = 1; k <= qq[i] - 1; ++k) {
            for (int g = 1; g <= k; ++g) B3.push_back(k * (P - 1) + (pp[i] - j * qq[i] - g));
          }
        }
      }
      V[i - 2] = B3;
      const int r = pp[i] % qq[i];
      if (r != 1 && r != 0) {
        pp[i + 1] = aa[i];
        qq[i + 1] = aa[i - 1];
      } else {
        break;
      }
    } else {
      aa[i] = qq[i] % pp[i];
      mm[i] = (qq[i] - aa[i]) / pp[i];
      std::set<int> B;  // union(B1, B2) is sorted and deduplicated
      for (int j = 1; j <= mm[i]; ++j) {
        for (int k = 1; k <= pp[i] - 1; ++k) {
          for (int g = 1; g <= k; ++g) B.insert(((j - 1) * pp[i] + k) * (P - 1) + pp[i] - g);
        }
      }
      if (aa[i] > 1) {
        for (int k = 1; k <= aa[i] - 1; ++k) {
          for (int g = 1; g <= k; ++g) B.insert(mm[i] * pp[i] * (P - 1) + k * (P - 1) + (pp[i] - g));
        }
      }
      V[i - 2] = std::vector<int>(B.begin(), B.end());
      const int r = qq[i] % pp[i];
      if (r != 1 && r != pp[i] - 1 && r != 0) {
        pp[i + 1] = aa[i - 1];
        qq[i + 1] = aa[i];
      } else {
        break;
      }
    }
  }
  const int n = count - 1;
  std::vector<int> W = V[1];
  long W1old = 0;
  const int last_zc = n % 2 == 1 ? n : n - 1;
  for (int zc = 3; zc <= last_zc; zc += 2) {
    W1old += static_cast<long>(mm[zc]) * pp[zc];
    std::set<int> u(V[zc - 1].begin(), V[zc - 1].end());
    u.insert(V[zc].begin(), V[zc].end());
    for (int x : u) W.push_back(static_cast<int>(W1old * (P - 1)) + x);
  }
  return W;
}

}  // namespace

MatlabParity matlab_parity(int p, int q) {
  check_params(p, q);
  if (std::gcd(p, q) != 1) throw std::invalid_argument("the MATLAB program handles knots only: gcd(p,q) must be 1");
  MatlabParity out;
  out.loop_bound = 5 * decimal_digits(std::min(p, q));
  out.mukd1 = matlab_w(p, q, 0);
  out.mukd1_literal = matlab_w(p, q, out.loop_bound);
  out.loop_bound_truncates = out.mukd1_literal != out.mukd1;
  const long as_printed_base = static_cast<long>(p - 1) * (q - 1) / 2 + 1;
  const int n = q * (p - 1);
  for (int w : out.mukd1) {
    const long v = as_printed_base - w;
    out.mukd2_as_printed.push_back(v);
    if (v < 1 || v > n) out.as_printed_in_range = false;
    out.mukd2_corrected.push_back(n + 1 - w);
  }
  std::sort(out.mukd2_corrected.begin(), out.mukd2_corrected.end());
  return out;
}

BraidWord flipped_toric_braid(int p, int q, const UCrossingData& positions, bool reversed) {
  BraidWord b = toric_braid(p, q);
  if (reversed) b = reverse(b);
  return apply_crossing_changes(b, positions);
}

TrivialityVerdict verify_positions(int p, int q, const UCrossingData& positions, bool reversed,
                                   const VerdictOptions& options) {
  const BraidWord w = flipped_toric_braid(p, q, positions, reversed);
  return triviality_verdict(w, std::gcd(p, q), options);
}

TrivialityVerdict verify_plan(const UnknottingPlan& plan, const VerdictOptions& options) {
  return verify_positions(plan.params.p, plan.params.q, plan.positions, false, options);
}

BraidWord eta_product(int n) {
  if (n < 1) throw std::invalid_argument("eta product needs n >= 1");
  std::vector<Letter> ls;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) ls.push_back({k, k <= n - i + 1 ? 1 : -1});
  }
  return BraidWord(n + 1, ls);
}

BraidWord cancelling_staircase(int n) {
  if (n < 1) throw std::invalid_argument("staircase needs n >= 1");
  std::vector<Letter> ls;
  for (int c = 0; c <= n; ++c) {
    for (int k = 1; k <= n; ++k) ls.push_back({k, k <= n - c ? 1 : -1});
  }
  return BraidWord(n + 1, ls);
}

std::pair<BraidWord, BraidWord> staircase_instance(int p, int a, const std::vector<std::vector<int>>& signs) {
  if (!(p > a && a >= 1)) throw std::invalid_argument("staircase instance needs p > a >= 1");
  const int width = p - a - 1;
  if (static_cast<int>(signs.size()) != a) throw std::invalid_argument("sign matrix needs a rows");
  for (const auto& row : signs) {
    if (static_cast<int>(row.size()) != width) throw std::invalid_argument("sign matrix rows need p-a-1 entries");
    for (int g : row) {
      if (g != 1 && g != -1) throw std::invalid_argument("signs must be +1 or -1");
    }
  }
  std::vector<Letter> lhs, rhs;
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= width; ++j) {
      lhs.push_back({j, signs[i - 1][j - 1]});
      rhs.push_back({j, signs[i - 1][j - 1]});
    }
    for (int k = p - a; k <= p - i; ++k) lhs.push_back({k, 1});
    for (int k = p - i + 1; k <= p - 1; ++k) lhs.push_back({k, -1});
  }
  return {BraidWord(p, lhs), BraidWord(p - a, rhs)};
}

}  // namespace toric
