#include "toric/certify.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>

namespace toric {

Rewriter::Rewriter(BraidWord start) : start_(start), word_(std::move(start)) {}

Certificate Rewriter::certificate(CertificateKind kind) const {
  Certificate c;
  c.start = start_;
  c.steps = steps_;
  c.end = word_;
  c.kind = kind;
  return c;
}

void Rewriter::apply(const RewriteStep& step) {
  word_ = apply_step(word_, step);
  steps_.push_back(step);
}

namespace {

RewriteStep make(Rule r, std::size_t site) {
  RewriteStep s;
  s.rule = r;
  s.site = site;
  return s;
}

}  // namespace

void Rewriter::free_cancel(std::size_t site) { apply(make(Rule::free_cancel, site)); }

void Rewriter::free_insert(std::size_t site, Letter first) {
  RewriteStep s = make(Rule::free_insert, site);
  s.letter = first;
  apply(s);
}

void Rewriter::far_commute(std::size_t site) { apply(make(Rule::far_commute, site)); }

void Rewriter::braid_relation(std::size_t site) { apply(make(Rule::braid_relation, site)); }

void Rewriter::lemma_slide(std::size_t site, std::size_t span, bool backward) {
  RewriteStep s = make(Rule::lemma_slide, site);
  s.span = span;
  s.backward = backward;
  apply(s);
}

void Rewriter::rotate(std::size_t k) {
  if (word_.empty() || k % word_.length() == 0) return;
  apply(make(Rule::rotate, k % word_.length()));
}

void Rewriter::conjugate(const std::vector<Letter>& g) {
  RewriteStep s = make(Rule::conjugate, 0);
  s.conjugator = g;
  apply(s);
}

void Rewriter::destabilize() { apply(make(Rule::destabilize, word_.length() - 1)); }

void Rewriter::stabilize(int sign) {
  RewriteStep s = make(Rule::stabilize, word_.length());
  s.sign = sign;
  apply(s);
}

void Rewriter::move(std::size_t from, std::size_t to) {
  while (from < to) {
    far_commute(from);
    ++from;
  }
  while (from > to) {
    far_commute(from - 1);
    --from;
  }
}

bool Rewriter::cyclic_free_reduce() {
  bool changed = false;
  while (true) {
    const auto& ls = word_.letters();
    bool found = false;
    for (std::size_t k = 0; k + 1 < ls.size(); ++k) {
      if (cancels(ls[k], ls[k + 1])) {
        free_cancel(k);
        found = true;
        break;
      }
    }
    if (found) {
      changed = true;
      continue;
    }
    if (ls.size() >= 2 && cancels(ls.back(), ls.front())) {
      rotate(ls.size() - 1);
      free_cancel(0);
      changed = true;
      continue;
    }
    return changed;
  }
}

void Rewriter::shift_up() {
  const int n = word_.strands();
  const std::size_t len = word_.length();
  const std::size_t span = static_cast<std::size_t>(n - 1);
  std::vector<Letter> delta;
  for (int i = 1; i < n; ++i) delta.push_back({i, 1});
  conjugate(delta);
  for (std::size_t k = 0; k < len; ++k) {
    // delta occupies [k, k + span), the next letter of w sits right after it
    std::size_t pos = k + span;
    const int i = word_[pos].index;
    while (word_[pos - 1].index >= i + 2) {
      far_commute(pos - 1);
      --pos;
    }
    braid_relation(pos - 2);
    pos -= 2;
    while (pos > k) {
      far_commute(pos - 1);
      --pos;
    }
  }
  for (std::size_t j = span; j-- > 0;) free_cancel(len + j);
}

bool Rewriter::delete_trivial_prefix(std::size_t length, std::size_t reduction_cap) {
  const int n = word_.strands();
  std::vector<long> last(static_cast<std::size_t>(n) + 1);
  std::size_t reductions = 0;
  while (length > 0) {
    long start = -1;
    long stop = -1;
    std::fill(last.begin(), last.end(), -1);
    for (std::size_t j = 0; j < length; ++j) {
      const Letter l = word_[j];
      const long s = last[l.index];
      if (s >= 0 && word_[s].sign == -l.sign) {
        start = s;
        stop = static_cast<long>(j);
        break;
      }
      last[l.index] = static_cast<long>(j);
      for (int k = l.index + 1; k < n; ++k) last[k] = -1;
    }
    if (start < 0) return false;  // handle free but nonempty: the prefix was not trivial
    if (++reductions > reduction_cap) return false;

    // walk sigma_i^e rightwards through the handle
    const int i = word_[start].index;
    const int e = word_[start].sign;
    std::size_t pos = static_cast<std::size_t>(start);
    std::size_t end = static_cast<std::size_t>(stop);
    while (true) {
      const Letter next = word_[pos + 1];
      if (pos + 1 == end) {
        free_cancel(pos);
        length -= 2;
        break;
      }
      if (next.index >= i + 2) {
        far_commute(pos);
        ++pos;
        continue;
      }
      // next is sigma_{i+1}^d
      if (pos + 2 == end) {
        braid_relation(pos);
        // sigma_i^e sigma_{i+1}^d sigma_i^-e became sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e
        break;
      }
      free_insert(pos, {i + 1, -e});
      braid_relation(pos + 1);
      // now sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e sigma_i^e at pos..pos+3
      pos += 3;
      end += 2;
      length += 2;
    }
  }
  return true;
}

namespace {

struct Search {
  std::size_t budget;
  std::size_t work = 0;

  bool spend(std::size_t amount) {
    work += amount;
    return work <= budget;
  }
};

std::vector<std::size_t> top_positions(const BraidWord& w) {
  std::vector<std::size_t> out;
  const int top = w.strands() - 1;
  for (std::size_t k = 0; k < w.length(); ++k) {
    if (w[k].index == top) out.push_back(k);
  }
  return out;
}

// Two cyclically consecutive top letters separated by at most one
// sigma_{top-1} can be merged: cancelled, or traded for one top letter.
bool reduce_top_pair(Rewriter& rw) {
  const BraidWord& w = rw.word();
  const int top = w.strands() - 1;
  const auto tops = top_positions(w);
  const std::size_t len = w.length();
  if (tops.size() < 2) return false;

  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t a = 0; a < tops.size(); ++a) {
      const std::size_t first = tops[a];
      const std::size_t second = tops[(a + 1) % tops.size()];
      const std::size_t gap = (second + len - first) % len;  // offset of second from first
      std::size_t below = 0;
      std::size_t below_at = 0;
      for (std::size_t k = 1; k < gap; ++k) {
        if (w[(first + k) % len].index == top - 1) {
          ++below;
          below_at = k;
        }
      }
      const int e = w[first].sign;
      const int f = w[second].sign;
      if (pass == 0 && below == 0 && e == -f) {
        rw.rotate(first);
        rw.move(0, gap - 1);
        rw.free_cancel(gap - 1);
        return true;
      }
      if (pass == 1 && below == 1) {
        const int g = w[(first + below_at) % len].sign;
        if (!(e == g || g == f)) continue;
        rw.rotate(first);
        rw.move(0, below_at - 1);
        rw.move(gap, below_at + 1);
        rw.braid_relation(below_at - 1);
        return true;
      }
    }
  }
  return false;
}

// Finds the longest cyclic subword that is the identity and deletes it.
bool delete_trivial_subword(Rewriter& rw, Search& search) {
  const BraidWord& w = rw.word();
  const std::size_t len = w.length();
  const int n = w.strands();
  for (std::size_t span = len - len % 2; span >= 2; span -= 2) {
    for (std::size_t start = 0; start < (span == len ? 1 : len); ++start) {
      std::vector<Letter> seg;
      seg.reserve(span);
      int sum = 0;
      for (std::size_t k = 0; k < span; ++k) {
        seg.push_back(w[(start + k) % len]);
        sum += seg.back().sign;
      }
      if (sum != 0) continue;
      BraidWord piece(n, std::move(seg));
      if (!underlying_permutation(piece).is_identity()) continue;
      if (!search.spend(1)) return false;
      HandleReduction hr;
      try {
        hr = handle_reduce(piece, search.budget);
      } catch (const StepCapExceeded&) {
        return false;
      }
      if (!search.spend(hr.reductions)) return false;
      if (!hr.word.empty()) continue;
      rw.rotate(start);
      return rw.delete_trivial_prefix(span, hr.reductions * 4 + 16);
    }
  }
  return false;
}

// A relation applicable up to far commutation: letters at a and b share an
// index, the one at c is adjacent to it, and everything else in between
// commutes with both ends. With c unset the pair cancels outright.
struct CyclicMove {
  std::size_t a = 0;
  std::size_t c = 0;
  std::size_t b = 0;
  bool cancel = false;
};

std::vector<CyclicMove> cyclic_moves(const std::vector<Letter>& w) {
  std::vector<CyclicMove> out;
  const std::size_t len = w.size();
  for (std::size_t a = 0; a < len; ++a) {
    const int i = w[a].index;
    std::optional<std::size_t> c;
    for (std::size_t k = 1; k < len; ++k) {
      const std::size_t pos = (a + k) % len;
      const int d = std::abs(w[pos].index - i);
      if (d >= 2) continue;
      if (d == 1) {
        if (c) break;
        c = pos;
        continue;
      }
      if (!c) {
        if (w[pos].sign == -w[a].sign) out.push_back({a, 0, pos, true});
      } else if (w[a].sign == w[*c].sign || w[*c].sign == w[pos].sign) {
        out.push_back({a, *c, pos, false});
      }
      break;
    }
  }
  return out;
}

std::vector<Letter> apply_cyclic_move(const std::vector<Letter>& w, const CyclicMove& mv) {
  const std::size_t len = w.size();
  auto at = [&](std::size_t k) { return w[(mv.a + k) % len]; };
  const std::size_t b = (mv.b + len - mv.a) % len;
  std::vector<Letter> out;
  out.reserve(len);
  if (mv.cancel) {
    for (std::size_t k = 1; k < b; ++k) out.push_back(at(k));
  } else {
    const std::size_t c = (mv.c + len - mv.a) % len;
    const Letter x = at(0), y = at(c), z = at(b);
    for (std::size_t k = 1; k < c; ++k) out.push_back(at(k));
    out.push_back({y.index, z.sign});
    out.push_back({x.index, y.sign});
    out.push_back({y.index, x.sign});
    for (std::size_t k = c + 1; k < b; ++k) out.push_back(at(k));
  }
  for (std::size_t k = b + 1; k < len; ++k) out.push_back(at(k));
  return out;
}

void replay_cyclic_move(Rewriter& rw, const CyclicMove& mv) {
  const std::size_t len = rw.word().length();
  const std::size_t b = (mv.b + len - mv.a) % len;
  rw.rotate(mv.a);
  if (mv.cancel) {
    rw.move(0, b - 1);
    rw.free_cancel(b - 1);
    return;
  }
  const std::size_t c = (mv.c + len - mv.a) % len;
  rw.move(0, c - 1);
  rw.move(b, c + 1);
  rw.braid_relation(c - 1);
}

std::vector<std::int8_t> rotation_key(const std::vector<Letter>& w) {
  std::vector<std::int8_t> enc;
  enc.reserve(w.size());
  for (const auto& l : w) enc.push_back(static_cast<std::int8_t>(l.sign * l.index));
  std::vector<std::int8_t> best = enc;
  for (std::size_t r = 1; r < enc.size(); ++r) {
    std::rotate(enc.begin(), enc.begin() + 1, enc.end());
    if (enc < best) best = enc;
  }
  return best;
}

int top_count(const std::vector<Letter>& w, int top) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [top](const Letter& l) { return l.index == top; }));
}

// Breadth-first search through cyclic relations of equal length until some
// word is shorter or uses the top generator less often; replays that path.
bool plateau_search(Rewriter& rw, Search& search) {
  const int top = rw.word().strands() - 1;
  struct Node {
    std::vector<Letter> word;
    long parent;
    CyclicMove move;
  };
  std::vector<Node> nodes{{rw.word().letters(), -1, {}}};
  const int start_tops = top_count(nodes[0].word, top);
  std::set<std::vector<std::int8_t>> seen{rotation_key(nodes[0].word)};
  long found = -1;
  for (std::size_t head = 0; head < nodes.size() && found < 0; ++head) {
    if (!search.spend(1)) return false;
    const auto moves = cyclic_moves(nodes[head].word);
    for (const auto& mv : moves) {
      std::vector<Letter> next = apply_cyclic_move(nodes[head].word, mv);
      const bool better = mv.cancel || top_count(next, top) < start_tops;
      if (!better && !seen.insert(rotation_key(next)).second) continue;
      nodes.push_back({std::move(next), static_cast<long>(head), mv});
      if (better) {
        found = static_cast<long>(nodes.size()) - 1;
        break;
      }
    }
  }
  if (found < 0) return false;
  std::vector<CyclicMove> path;
  for (long k = found; nodes[k].parent >= 0; k = nodes[k].parent) path.push_back(nodes[k].move);
  for (auto it = path.rbegin(); it != path.rend(); ++it) replay_cyclic_move(rw, *it);
  return true;
}

}  // namespace

CertifyResult certify_unknot(const BraidWord& w, std::size_t search_budget) {
  CertifyResult result;
  const int target = component_count_of_closure(w);
  Rewriter rw(w);
  Search search{search_budget};
  std::size_t shifts_without_progress = 0;

  while (true) {
    rw.cyclic_free_reduce();
    const BraidWord& cur = rw.word();
    if (cur.empty()) {
      if (cur.strands() == target) {
        result.certificate = rw.certificate();
        result.note = "reduced to the empty word on " + std::to_string(target) + " strands";
      } else {
        // an empty braid on more strands than components cannot occur
        result.note = "empty word on the wrong strand count";
      }
      break;
    }
    if (!search.spend(1)) {
      result.note = "search budget exhausted";
      break;
    }
    const auto tops = top_positions(cur);
    if (tops.empty()) {
      if (++shifts_without_progress > static_cast<std::size_t>(cur.strands())) {
        result.note = "no generator left to destabilize";
        break;
      }
      rw.shift_up();
      continue;
    }
    if (tops.size() == 1) {
      rw.rotate(tops.front() + 1);
      rw.destabilize();
      shifts_without_progress = 0;
      continue;
    }
    if (reduce_top_pair(rw)) continue;
    if (delete_trivial_subword(rw, search)) continue;
    if (plateau_search(rw, search)) continue;
    result.note = search.work > search.budget ? "search budget exhausted" : "no reducing move found";
    break;
  }
  result.work = search.work;
  return result;
}

}  // namespace toric
