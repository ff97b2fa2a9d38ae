#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/braid.hpp"
#include "toric/word_problem.hpp"

namespace toric {

// Applies rewrite steps to a word while recording them, so that any
// sequence of transformations can be replayed as a certificate.
class Rewriter {
 public:
  explicit Rewriter(BraidWord start);

  const BraidWord& word() const { return word_; }
  const std::vector<RewriteStep>& steps() const { return steps_; }
  Certificate certificate(CertificateKind kind = CertificateKind::markov_equivalence) const;

  void apply(const RewriteStep& step);
  void free_cancel(std::size_t site);
  void free_insert(std::size_t site, Letter first);
  void far_commute(std::size_t site);
  void braid_relation(std::size_t site);
  void lemma_slide(std::size_t site, std::size_t span, bool backward);
  void rotate(std::size_t k);  // no step recorded when k is a multiple of the length
  void conjugate(const std::vector<Letter>& g);
  void destabilize();
  void stabilize(int sign);

  // Moves the letter at `from` to `to` by far commutations only.
  void move(std::size_t from, std::size_t to);

  // Removes cancelling pairs, including the pair formed by the last and first letter.
  bool cyclic_free_reduce();

  // Needs the top generator to be absent: conjugates by sigma_1...sigma_{n-1},
  // raising every index by one.
  void shift_up();

  // Replaces the first `length` letters, which must form a trivial braid, by nothing,
  // through a chain of expanded handle reductions. Returns false if the cap runs out.
  bool delete_trivial_prefix(std::size_t length, std::size_t reduction_cap);

 private:
  BraidWord start_;
  BraidWord word_;
  std::vector<RewriteStep> steps_;
};

struct CertifyResult {
  std::optional<Certificate> certificate;
  std::string note;
  std::size_t work = 0;
};

// Searches for Markov moves and relations taking w to the empty word on
// as many strands as its closure has components.
CertifyResult certify_unknot(const BraidWord& w, std::size_t search_budget);

}  // namespace toric
