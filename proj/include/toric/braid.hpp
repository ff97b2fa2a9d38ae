#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

// One elementary generator sigma_index^sign.
struct Letter {
  int index = 1;
  int sign = 1;

  Letter inverse() const { return {index, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

inline bool cancels(const Letter& a, const Letter& b) {
  return a.index == b.index && a.sign == -b.sign;
}

// A braid word on an explicit number of strands, read top to bottom.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<Letter> letters = {});

  // Whitespace separated nonzero integers; k is sigma_k, -k is sigma_k^-1.
  static BraidWord parse(std::string_view text, int strands);

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

// image[s-1] is the bottom endpoint (1-based) of the strand starting at s.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int strand) const { return image_[strand - 1]; }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;
  int cycle_count() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

// (sigma_1 sigma_2 ... sigma_{p-1})^q on p strands.
BraidWord toric_braid(int p, int q);

// Negates the sign of every listed 1-based position.
BraidWord apply_crossing_changes(const BraidWord& w, std::span<const int> positions);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);
BraidWord reverse(const BraidWord& w);
BraidWord free_reduce(const BraidWord& w);

// Moves the first k letters to the end (conjugation by their product).
BraidWord rotate(const BraidWord& w, std::size_t k);

Permutation underlying_permutation(const BraidWord& w);
int component_count_of_closure(const BraidWord& w);
int exponent_sum(const BraidWord& w);

// g w g^-1, as a literal unreduced word.
BraidWord conjugate(const BraidWord& w, const BraidWord& g);

// Appends sigma_n^sign and adds a strand.
BraidWord stabilize(const BraidWord& w, int sign = 1);

// Removes a terminal sigma_{n-1}^{+-1} that is the only letter of index n-1.
// Throws std::invalid_argument when the pattern is absent.
BraidWord destabilize(const BraidWord& w);

bool can_destabilize(const BraidWord& w);

}  // namespace toric
