#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "toric/braid.hpp"

namespace toric {

inline constexpr std::size_t kDefaultHandleStepCap = 1'000'000;

// Handle reduction ran out of its step allowance before deciding.
class StepCapExceeded : public std::runtime_error {
 public:
  explicit StepCapExceeded(std::size_t cap)
      : std::runtime_error("handle reduction exceeded its cap of " + std::to_string(cap) +
                           " reductions"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

struct HandleReduction {
  BraidWord word{1};
  std::size_t reductions = 0;
};

// Dehornoy handle reduction, always reducing the handle whose right end is
// leftmost. The result is handle free: empty iff the input is the identity.
HandleReduction handle_reduce(const BraidWord& w, std::size_t step_cap = kDefaultHandleStepCap);

bool is_identity(const BraidWord& w, std::size_t step_cap = kDefaultHandleStepCap);
bool are_equal(const BraidWord& a, const BraidWord& b, std::size_t step_cap = kDefaultHandleStepCap);

enum class Rule {
  free_cancel,     // sigma^e sigma^-e at site -> nothing
  free_insert,     // nothing -> sigma^e sigma^-e before site
  far_commute,     // swap letters at site, site+1 with |i-j| >= 2
  braid_relation,  // three letter relation with alpha1 = alpha2 or alpha2 = alpha3
  lemma_slide,     // sigma_i^g pushed through an ascending run (either direction)
  rotate,          // M1: cyclic rotation, first `site` letters moved to the end
  conjugate,       // M1: w -> g w g^-1
  destabilize,     // M2: remove the terminal, unique top generator
  stabilize,       // M2: append sigma_n^sign on one more strand
};

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);

// Markov moves change the braid, only the closure is preserved.
inline bool is_markov_move(Rule r) {
  return r == Rule::rotate || r == Rule::conjugate || r == Rule::destabilize || r == Rule::stabilize;
}

struct RewriteStep {
  Rule rule = Rule::free_cancel;
  std::size_t site = 0;
  Letter letter{};                 // free_insert: the letter inserted first
  int sign = 1;                    // stabilize
  std::size_t span = 0;            // lemma_slide: number of letters in the segment
  bool backward = false;           // lemma_slide: right-to-left orientation
  std::vector<Letter> conjugator;  // conjugate

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

// Thrown by apply_step when the step is not a legal instance of its rule.
class IllegalStep : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

BraidWord apply_step(const BraidWord& w, const RewriteStep& step);

enum class CertificateKind { group_equality, markov_equivalence };

struct Certificate {
  BraidWord start{1};
  std::vector<RewriteStep> steps;
  BraidWord end{1};
  CertificateKind kind = CertificateKind::markov_equivalence;
};

struct CertificateCheck {
  bool ok = false;
  std::optional<std::size_t> failed_step;  // 0-based index of the first bad step
  std::string reason;

  explicit operator bool() const { return ok; }
};

CertificateCheck check_certificate(const Certificate& c);

// Line format:
//   kind markov-equivalence
//   start <strands> : <letters>
//   <rule> <site> [key=value ...]     one line per step
//   end <strands> : <letters>
std::string serialize_certificate(const Certificate& c);
Certificate parse_certificate(std::string_view text);

}  // namespace toric
