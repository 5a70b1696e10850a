#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "uniorder/poset.hpp"

namespace uniorder {

struct NotComparable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite word over {0,1}; possibly empty.
struct Word {
  std::string bits;

  Word() = default;
  explicit Word(std::string b) : bits(std::move(b)) {
    for (char c : bits)
      if (c != '0' && c != '1') throw std::invalid_argument("Word: alphabet is {0,1}");
  }

  int length() const { return static_cast<int>(bits.size()); }
  auto operator<=>(const Word&) const = default;
};

inline bool is_prefix(const Word& shorter, const Word& longer) {
  return shorter.bits.size() <= longer.bits.size() &&
         longer.bits.compare(0, shorter.bits.size(), shorter.bits) == 0;
}

// w <= w2 in the word order iff w2 is an initial segment of w: longer words
// are smaller.
inline bool leq_w(const Word& w, const Word& w2) { return is_prefix(w2, w); }

// Finite prefix-free set of words; element of the master order W.
class AntichainSet {
 public:
  AntichainSet() = default;
  explicit AntichainSet(std::vector<Word> words) : words_(std::move(words)) {
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    for (size_t i = 0; i < words_.size(); ++i)
      for (size_t j = 0; j < words_.size(); ++j)
        if (i != j && is_prefix(words_[i], words_[j]))
          throw std::invalid_argument("AntichainSet: not prefix-free: '" + words_[i].bits +
                                      "' prefixes '" + words_[j].bits + "'");
  }

  const std::vector<Word>& words() const { return words_; }
  bool empty() const { return words_.empty(); }
  size_t size() const { return words_.size(); }
  bool contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
  }

  auto operator<=>(const AntichainSet&) const = default;

 private:
  std::vector<Word> words_;  // sorted
};

// Keeps exactly the words with no proper prefix inside the set; the result is
// prefix-free.
inline AntichainSet min_words(const std::vector<Word>& a) {
  std::vector<Word> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Word> keep;
  for (const Word& w : sorted) {
    bool minimal = true;
    for (const Word& p : sorted)
      if (p != w && is_prefix(p, w)) {
        minimal = false;
        break;
      }
    if (minimal) keep.push_back(w);
  }
  return AntichainSet(std::move(keep));
}

// A <= B iff every word of A has some word of B as an initial segment.
inline bool leq_W(const AntichainSet& a, const AntichainSet& b) {
  for (const Word& w : a.words()) {
    bool covered = false;
    for (const Word& u : b.words())
      if (leq_w(w, u)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

struct WordOrderCmp {
  bool leq(const AntichainSet& a, const AntichainSet& b) const { return leq_W(a, b); }
  bool eq(const AntichainSet& a, const AntichainSet& b) const { return a == b; }
};

// The online embedding Psi of arbitrary finite posets into (W, <=_W).
// Step n:  L = union of earlier images below n;  U = length-n words with last
// letter 0 such that every image required above n contributes a prefix;
// the image of n is min(L u U).
inline std::vector<AntichainSet> psi_embed(const FinitePoset& p) {
  int n = p.size();
  std::vector<AntichainSet> psi;
  psi.reserve(n);
  for (int k = 1; k <= n; ++k) {
    std::vector<Word> pool;
    for (int m = 1; m < k; ++m)
      if (p.leq(m, k))
        for (const Word& w : psi[m - 1].words()) pool.push_back(w);

    std::vector<int> above;  // m < k with k <= m
    for (int m = 1; m < k; ++m)
      if (p.leq(k, m)) above.push_back(m);

    // all length-k words with last letter 0 passing the prefix condition
    for (std::uint64_t mask = 0; mask < (1ull << (k - 1)); ++mask) {
      std::string bits(static_cast<size_t>(k), '0');
      for (int pos = 0; pos < k - 1; ++pos)
        if (mask >> pos & 1) bits[static_cast<size_t>(pos)] = '1';
      Word cand(bits);
      bool ok = true;
      for (int m : above) {
        bool has_prefix = false;
        for (const Word& w : psi[m - 1].words())
          if (is_prefix(w, cand)) {
            has_prefix = true;
            break;
          }
        if (!has_prefix) {
          ok = false;
          break;
        }
      }
      if (ok) pool.push_back(cand);
    }
    psi.push_back(min_words(pool));
  }
  return psi;
}

// Psi as an online strategy for the representation game.
struct PsiStrategy {
  std::vector<AntichainSet> operator()(const FinitePoset& prefix) const {
    return psi_embed(prefix);
  }
};

// The witness word of Thm 2.4(2): W of length n with {W} <= Psi([k]) exactly
// for k in the upward closure of S.  Letter k is 0 for k in the closure and 1
// otherwise; both branches of the inductive proof collapse to this choice
// (appending 1 outside the closure is always safe because U-words end in 0).
inline Word witness_word(const FinitePoset& p, const std::set<int>& s) {
  int n = p.size();
  for (int k : s)
    if (k < 1 || k > n) throw std::out_of_range("witness_word: set element out of range");
  std::string bits;
  bits.reserve(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    bool in_up_closure = s.count(k) > 0;
    for (int m : s)
      if (p.leq(m, k)) in_up_closure = true;
    bits.push_back(in_up_closure ? '0' : '1');
  }
  return Word(bits);
}

// Gap predicate: lower is upper with exactly one word replaced by its two
// one-letter extensions.
inline bool is_gap(const AntichainSet& lower, const AntichainSet& upper) {
  if (!(leq_W(lower, upper) && lower != upper))
    throw NotComparable("is_gap: arguments are not strictly comparable");
  std::vector<Word> only_upper, only_lower;
  for (const Word& w : upper.words())
    if (!lower.contains(w)) only_upper.push_back(w);
  for (const Word& w : lower.words())
    if (!upper.contains(w)) only_lower.push_back(w);
  if (only_upper.size() != 1 || only_lower.size() != 2) return false;
  const Word& s = only_upper[0];
  Word s0(s.bits + "0"), s1(s.bits + "1");
  return (only_lower[0] == s0 && only_lower[1] == s1) ||
         (only_lower[0] == s1 && only_lower[1] == s0);
}

struct GapProbe {
  bool gap = true;
  std::optional<AntichainSet> middle;  // strict middle when not a gap
};

namespace detail {

inline bool strictly_between(const AntichainSet& lower, const AntichainSet& mid,
                             const AntichainSet& upper) {
  return mid != lower && mid != upper && leq_W(lower, mid) && leq_W(mid, upper);
}

// All prefixes of w (including the empty word, excluding w itself).
inline std::vector<Word> proper_prefixes(const Word& w) {
  std::vector<Word> out;
  for (size_t len = 0; len < w.bits.size(); ++len) out.emplace_back(w.bits.substr(0, len));
  return out;
}

}  // namespace detail

// Independent check of the gap law.  Searches for a strict middle among
// (a) antichains obtained by cutting lower-words back toward their covers and
// (b) lower plus one extra word below upper, up to depth_bound.  Any strict
// middle whose words fit in depth_bound reduces to one of these two shapes.
// When a middle exists the explicit element from the density construction is
// reported (cut form preferred).
inline GapProbe gap_oracle(const AntichainSet& lower, const AntichainSet& upper,
                           int depth_bound) {
  if (!(leq_W(lower, upper) && lower != upper))
    throw NotComparable("gap_oracle: arguments are not strictly comparable");
  GapProbe probe;

  // (a) replace one lower-word by a proper prefix of it that still extends an
  // upper word: the min(lower \ {s}) u {s'} middle from the proposition.
  for (const Word& s : lower.words()) {
    for (const Word& sp : detail::proper_prefixes(s)) {
      bool below_upper = false;
      for (const Word& u : upper.words())
        if (is_prefix(u, sp)) {
          below_upper = true;
          break;
        }
      if (!below_upper) continue;
      std::vector<Word> pool;
      for (const Word& w : lower.words())
        if (w != s) pool.push_back(w);
      pool.push_back(sp);
      AntichainSet cand = min_words(pool);
      if (detail::strictly_between(lower, cand, upper)) {
        probe.gap = false;
        if (!probe.middle) probe.middle = cand;
        return probe;
      }
    }
  }

  // (b) lower plus a single extra word of length <= depth_bound extending an
  // upper word, prefix-incomparable with all of lower.
  std::vector<Word> frontier;
  for (const Word& u : upper.words()) frontier.push_back(u);
  while (!frontier.empty()) {
    Word e = frontier.back();
    frontier.pop_back();
    bool comparable = false;
    for (const Word& w : lower.words())
      if (is_prefix(w, e) || is_prefix(e, w)) {
        comparable = true;
        break;
      }
    if (!comparable) {
      std::vector<Word> pool = lower.words();
      pool.push_back(e);
      AntichainSet cand = min_words(pool);
      if (detail::strictly_between(lower, cand, upper)) {
        probe.gap = false;
        if (!probe.middle) probe.middle = cand;
        return probe;
      }
    }
    if (e.length() < depth_bound) {
      frontier.emplace_back(e.bits + "0");
      frontier.emplace_back(e.bits + "1");
    }
  }
  return probe;
}

// The tree view of section 2.2 is the same data: words are root paths in the
// infinite binary tree.  Exposed so rendering code can name the conversion.
inline AntichainSet to_tree(const AntichainSet& a) { return a; }
inline AntichainSet from_tree(const AntichainSet& a) { return a; }

}  // namespace uniorder
