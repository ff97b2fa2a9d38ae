#pragma once

// Artin's faithful action of B_n on the free group F_n, used as an
// independent identity test for braid words.

#include <vector>

#include "toric/braid.hpp"

namespace oracle {

using FreeWord = std::vector<int>;  // +-j for x_j^{+-1}, 1-based

inline void push_reduced(FreeWord& w, int g) {
  if (!w.empty() && w.back() == -g) {
    w.pop_back();
  } else {
    w.push_back(g);
  }
}

inline FreeWord inverse(const FreeWord& w) {
  FreeWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline bool artin_trivial(const toric::BraidWord& b) {
  const int n = b.strands();
  std::vector<FreeWord> img(n + 1);
  for (int j = 1; j <= n; ++j) img[j] = {j};
  for (const auto& l : b.letters()) {
    const int i = l.index;
    std::vector<FreeWord> rule(n + 1);
    for (int j = 1; j <= n; ++j) rule[j] = {j};
    if (l.sign > 0) {
      rule[i] = {i, i + 1, -i};
      rule[i + 1] = {i};
    } else {
      rule[i] = {i + 1};
      rule[i + 1] = {-(i + 1), i, i + 1};
    }
    for (int j = 1; j <= n; ++j) {
      FreeWord next;
      for (int g : img[j]) {
        const FreeWord piece = g > 0 ? rule[g] : inverse(rule[-g]);
        for (int h : piece) push_reduced(next, h);
      }
      img[j] = std::move(next);
    }
  }
  for (int j = 1; j <= n; ++j) {
    if (img[j] != FreeWord{j}) return false;
  }
  return true;
}

}  // namespace oracle
