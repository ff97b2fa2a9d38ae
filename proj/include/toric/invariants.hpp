#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/braid.hpp"
#include "toric/laurent.hpp"
#include "toric/word_problem.hpp"

namespace toric {

using LaurentMatrix = std::vector<std::vector<LaurentPolynomial>>;

inline constexpr std::size_t kDefaultCrossingBudget = 20;
inline constexpr std::size_t kDefaultSearchBudget = 200'000;

class CrossingBudgetExceeded : public std::runtime_error {
 public:
  CrossingBudgetExceeded(std::size_t crossings, std::size_t budget)
      : std::runtime_error("word has " + std::to_string(crossings) + " crossings, budget is " +
                           std::to_string(budget)),
        crossings_(crossings),
        budget_(budget) {}
  std::size_t crossings() const { return crossings_; }
  std::size_t budget() const { return budget_; }

 private:
  std::size_t crossings_;
  std::size_t budget_;
};

// Burau matrix of the word in the variable t; reduced is (n-1)x(n-1),
// unreduced is n x n.
LaurentMatrix burau_matrix(const BraidWord& w, bool reduced = true);
LaurentPolynomial determinant(LaurentMatrix m);

// Multiplies by +-t^k so the lowest exponent is 0 with a positive coefficient.
LaurentPolynomial normalize_alexander(const LaurentPolynomial& p);

// Normalized; 0 for split links. One strand gives the unknot's 1.
LaurentPolynomial alexander_of_closure(const BraidWord& w);

// Bracket of the closure in the variable A, one-loop diagram = 1.
LaurentPolynomial kauffman_bracket(const BraidWord& w, std::size_t crossing_budget = kDefaultCrossingBudget);

// Exponents count half-steps of t: the stored exponent k means t^(k/2).
LaurentPolynomial jones_of_closure(const BraidWord& w, std::size_t crossing_budget = kDefaultCrossingBudget);
LaurentPolynomial unlink_jones(int components);
LaurentPolynomial unlink_alexander(int components);

enum class TrivialityStatus { certified_trivial_unlink, certified_nontrivial, inconclusive };

std::string_view status_name(TrivialityStatus s);

struct TrivialityEvidence {
  int expected_components = 1;
  int components = 1;
  LaurentPolynomial alexander;
  bool alexander_matches = false;
  std::optional<LaurentPolynomial> jones;  // absent when refused by the budget
  bool jones_matches = false;
  std::string jones_note;
  bool certificate_attempted = false;
  std::optional<Certificate> certificate;
  std::string certificate_note;
};

struct TrivialityVerdict {
  TrivialityStatus status = TrivialityStatus::inconclusive;
  TrivialityEvidence evidence;
};

struct VerdictOptions {
  std::size_t crossing_budget = kDefaultCrossingBudget;
  std::size_t search_budget = kDefaultSearchBudget;
  bool try_certificate = true;
};

TrivialityVerdict triviality_verdict(const BraidWord& w, int d, const VerdictOptions& options = {});

}  // namespace toric
