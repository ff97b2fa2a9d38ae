#include "toric/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace toric {

namespace {

void check_letter(const Letter& l, int strands) {
  if (l.sign != 1 && l.sign != -1) {
    throw std::invalid_argument("letter sign must be +1 or -1");
  }
  if (l.index < 1 || l.index >= strands) {
    throw std::invalid_argument("generator sigma_" + std::to_string(l.index) +
                                " is not defined on " + std::to_string(strands) +
                                " strands");
  }
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) {
    throw std::invalid_argument("a braid needs at least one strand");
  }
  for (const auto& l : letters_) check_letter(l, strands_);
}

BraidWord BraidWord::parse(std::string_view text, int strands) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view token = text.substr(i, j - i);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0) {
      throw std::invalid_argument("bad braid letter '" + std::string(text.substr(i, j - i)) + "'");
    }
    letters.push_back({value > 0 ? value : -value, value > 0 ? 1 : -1});
    i = j;
  }
  return BraidWord(strands, std::move(letters));
}

std::string BraidWord::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ' ';
    out << letters_[i].sign * letters_[i].index;
  }
  return out.str();
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 1 || v > size() || seen[v - 1]) {
      throw std::invalid_argument("permutation image is not a bijection");
    }
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (int s = 1; s <= size(); ++s) {
    if (image_[s - 1] != s) return false;
  }
  return true;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(image_.size(), false);
  int cycles = 0;
  for (int s = 1; s <= size(); ++s) {
    if (seen[s - 1]) continue;
    ++cycles;
    for (int t = s; !seen[t - 1]; t = image_[t - 1]) seen[t - 1] = true;
  }
  return cycles;
}

BraidWord toric_braid(int p, int q) {
  if (p < 2 || q < 1) {
    throw std::invalid_argument("toric braid B(p,q) needs p >= 2 and q >= 1");
  }
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(q) * (p - 1));
  for (int k = 0; k < q; ++k) {
    for (int i = 1; i < p; ++i) letters.push_back({i, 1});
  }
  return BraidWord(p, std::move(letters));
}

BraidWord apply_crossing_changes(const BraidWord& w, std::span<const int> positions) {
  std::vector<Letter> letters = w.letters();
  for (int pos : positions) {
    if (pos < 1 || static_cast<std::size_t>(pos) > letters.size()) {
      throw std::out_of_range("crossing position " + std::to_string(pos) +
                              " outside [1, " + std::to_string(letters.size()) + "]");
    }
    letters[pos - 1].sign = -letters[pos - 1].sign;
  }
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw std::invalid_argument("cannot concatenate braids on different strand counts");
  }
  std::vector<Letter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<Letter> letters;
  letters.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord reverse(const BraidWord& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.length());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && cancels(stack.back(), l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

BraidWord rotate(const BraidWord& w, std::size_t k) {
  if (w.empty()) return w;
  std::vector<Letter> letters = w.letters();
  std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k % letters.size()),
              letters.end());
  return BraidWord(w.strands(), std::move(letters));
}

Permutation underlying_permutation(const BraidWord& w) {
  // position[k] is the strand currently at column k
  std::vector<int> position(w.strands());
  std::iota(position.begin(), position.end(), 1);
  for (const auto& l : w.letters()) std::swap(position[l.index - 1], position[l.index]);
  std::vector<int> image(w.strands());
  for (int col = 0; col < w.strands(); ++col) image[position[col] - 1] = col + 1;
  return Permutation(std::move(image));
}

int component_count_of_closure(const BraidWord& w) {
  return underlying_permutation(w).cycle_count();
}

int exponent_sum(const BraidWord& w) {
  int sum = 0;
  for (const auto& l : w.letters()) sum += l.sign;
  return sum;
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
  return concat(concat(g, w), inverse(g));
}

BraidWord stabilize(const BraidWord& w, int sign) {
  std::vector<Letter> letters = w.letters();
  letters.push_back({w.strands(), sign});
  return BraidWord(w.strands() + 1, std::move(letters));
}

bool can_destabilize(const BraidWord& w) {
  const int top = w.strands() - 1;
  if (top < 1 || w.empty() || w.letters().back().index != top) return false;
  return std::count_if(w.letters().begin(), w.letters().end(),
                       [top](const Letter& l) { return l.index == top; }) == 1;
}

BraidWord destabilize(const BraidWord& w) {
  if (!can_destabilize(w)) {
    throw std::invalid_argument(
        "destabilize needs a single terminal occurrence of the top generator");
  }
  std::vector<Letter> letters(w.letters().begin(), w.letters().end() - 1);
  return BraidWord(w.strands() - 1, std::move(letters));
}

}  // namespace toric
