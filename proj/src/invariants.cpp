#include "toric/invariants.hpp"

#include <cstdint>
#include <map>

#include "toric/certify.hpp"

namespace toric {

namespace {

using L = LaurentPolynomial;

L t(int e) { return L::monomial(1, e); }

struct Block {
  int first = 0;  // index of the first row/column of the block
  std::vector<std::vector<L>> entries;
};

Block reduced_block(int n, const Letter& l) {
  const int i = l.index;
  const bool pos = l.sign > 0;
  if (n == 2) return {0, {{pos ? -t(1) : -t(-1)}}};
  if (i == 1) {
    if (pos) return {0, {{-t(1), 0}, {1, 1}}};
    return {0, {{-t(-1), 0}, {t(-1), 1}}};
  }
  if (i == n - 1) {
    if (pos) return {n - 3, {{1, t(1)}, {0, -t(1)}}};
    return {n - 3, {{1, 1}, {0, -t(-1)}}};
  }
  if (pos) return {i - 2, {{1, t(1), 0}, {0, -t(1), 0}, {0, 1, 1}}};
  return {i - 2, {{1, 1, 0}, {0, -t(-1), 0}, {0, t(-1), 1}}};
}

Block unreduced_block(const Letter& l) {
  if (l.sign > 0) return {l.index - 1, {{1 - t(1), t(1)}, {1, 0}}};
  return {l.index - 1, {{0, 1}, {t(-1), 1 - t(-1)}}};
}

// M <- M * G, where G is the identity outside the block
void right_multiply(LaurentMatrix& m, const Block& g) {
  const auto size = g.entries.size();
  for (auto& row : m) {
    std::vector<L> updated(size);
    for (std::size_t j = 0; j < size; ++j) {
      for (std::size_t k = 0; k < size; ++k) {
        if (!g.entries[k][j].is_zero()) updated[j] += row[g.first + k] * g.entries[k][j];
      }
    }
    for (std::size_t j = 0; j < size; ++j) row[g.first + j] = std::move(updated[j]);
  }
}

using Matching = std::vector<std::uint8_t>;

// Counts the loops formed when every top point k is joined to bottom point n+k.
int closure_loops(const Matching& m, int n) {
  std::vector<bool> seen(2 * n, false);
  int loops = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[start]) continue;
    ++loops;
    int p = start;
    while (!seen[p]) {
      seen[p] = true;
      const int q = m[p];
      seen[q] = true;
      p = q < n ? q + n : q - n;
    }
  }
  return loops;
}

}  // namespace

LaurentMatrix burau_matrix(const BraidWord& w, bool reduced) {
  const int n = w.strands();
  const int size = reduced ? n - 1 : n;
  LaurentMatrix m(size, std::vector<L>(size));
  for (int i = 0; i < size; ++i) m[i][i] = 1;
  for (const auto& l : w.letters()) right_multiply(m, reduced ? reduced_block(n, l) : unreduced_block(l));
  return m;
}

LaurentPolynomial determinant(LaurentMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  L sign = 1;
  L previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return L{};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        L num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = num.divide_exact(previous);
        if (!q) throw std::logic_error("Bareiss step is not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = L{};
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

LaurentPolynomial normalize_alexander(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  L out = p.shifted(-p.min_exponent());
  if (out.coefficient(0) < 0) out = -out;
  return out;
}

LaurentPolynomial alexander_of_closure(const BraidWord& w) {
  const int n = w.strands();
  if (n == 1) return 1;
  LaurentMatrix m = burau_matrix(w, true);
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < n - 1; ++j) m[i][j] = (i == j ? L(1) : L{}) - m[i][j];
  }
  const L det = determinant(std::move(m));
  // det(I - M) = (1 + t + ... + t^(n-1)) * Alexander
  auto q = (det * (1 - t(1))).divide_exact(1 - t(n));
  if (!q) throw std::logic_error("Burau determinant not divisible by the closure factor");
  return normalize_alexander(*q);
}

LaurentPolynomial kauffman_bracket(const BraidWord& w, std::size_t crossing_budget) {
  if (w.length() > crossing_budget) throw CrossingBudgetExceeded(w.length(), crossing_budget);
  const int n = w.strands();
  const L delta = -t(2) - t(-2);

  Matching start(2 * n);
  for (int k = 0; k < n; ++k) {
    start[k] = static_cast<std::uint8_t>(n + k);
    start[n + k] = static_cast<std::uint8_t>(k);
  }
  std::map<Matching, L> states{{start, 1}};

  for (const auto& l : w.letters()) {
    const int a = n + l.index - 1;
    const int b = a + 1;
    const L keep = t(l.sign);
    const L cupcap = t(-l.sign);
    std::map<Matching, L> next;
    for (const auto& [m, coef] : states) {
      next[m] += coef * keep;
      Matching s = m;
      L factor = cupcap;
      if (s[a] == b) {
        factor *= delta;
      } else {
        const int pa = s[a];
        const int pb = s[b];
        s[pa] = static_cast<std::uint8_t>(pb);
        s[pb] = static_cast<std::uint8_t>(pa);
        s[a] = static_cast<std::uint8_t>(b);
        s[b] = static_cast<std::uint8_t>(a);
      }
      next[s] += coef * factor;
    }
    states.clear();
    for (auto& [m, coef] : next) {
      if (!coef.is_zero()) states.emplace(m, std::move(coef));
    }
  }

  L result;
  for (const auto& [m, coef] : states) {
    result += coef * delta.pow(static_cast<unsigned>(closure_loops(m, n) - 1));
  }
  return result;
}

LaurentPolynomial jones_of_closure(const BraidWord& w, std::size_t crossing_budget) {
  const L bracket = kauffman_bracket(w, crossing_budget);
  const int writhe = exponent_sum(w);
  const L correction = L::monomial(writhe % 2 == 0 ? 1 : -1, -3 * writhe);
  // A = t^(-1/4): A^k becomes t^(-k/4), i.e. -k/2 half-steps
  return (bracket * correction).substitute_power(-1, 2);
}

LaurentPolynomial unlink_jones(int components) {
  if (components < 1) throw std::invalid_argument("an unlink has at least one component");
  return (-t(1) - t(-1)).pow(static_cast<unsigned>(components - 1));
}

LaurentPolynomial unlink_alexander(int components) {
  if (components < 1) throw std::invalid_argument("an unlink has at least one component");
  return components == 1 ? L(1) : L{};
}

std::string_view status_name(TrivialityStatus s) {
  switch (s) {
    case TrivialityStatus::certified_trivial_unlink:
      return "CertifiedTrivialUnlink";
    case TrivialityStatus::certified_nontrivial:
      return "CertifiedNontrivial";
    case TrivialityStatus::inconclusive:
      return "Inconclusive";
  }
  return "?";
}

TrivialityVerdict triviality_verdict(const BraidWord& w, int d, const VerdictOptions& options) {
  TrivialityVerdict v;
  auto& ev = v.evidence;
  ev.expected_components = d;
  ev.components = component_count_of_closure(w);
  ev.alexander = alexander_of_closure(w);
  ev.alexander_matches = ev.alexander == unlink_alexander(d);
  try {
    ev.jones = jones_of_closure(w, options.crossing_budget);
    ev.jones_matches = *ev.jones == unlink_jones(d);
  } catch (const CrossingBudgetExceeded& e) {
    ev.jones_note = e.what();
  }

  const bool differs = ev.components != d || !ev.alexander_matches || (ev.jones && !ev.jones_matches);
  if (differs) {
    v.status = TrivialityStatus::certified_nontrivial;
    return v;
  }

  if (options.try_certificate) {
    ev.certificate_attempted = true;
    CertifyResult r = certify_unknot(w, options.search_budget);
    ev.certificate = std::move(r.certificate);
    ev.certificate_note = std::move(r.note);
  }
  // Alexander alone does not detect the unknot, so something stronger must agree.
  v.status = ev.jones_matches || ev.certificate ? TrivialityStatus::certified_trivial_unlink
                                                : TrivialityStatus::inconclusive;
  return v;
}

}  // namespace toric
