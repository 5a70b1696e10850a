#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "uniorder/rational.hpp"
#include "uniorder/words.hpp"

namespace uniorder {

struct NotStrict : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Interval {
  Rat lo, hi;  // closed [lo, hi]
  auto operator<=>(const Interval&) const = default;
};

inline bool covers(const Interval& outer, const Interval& inner) {
  return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

// Finite set of pairwise disjoint closed intervals inside [0,1].
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    std::sort(intervals_.begin(), intervals_.end());
    for (const Interval& iv : intervals_) {
      if (!(0 <= iv.lo && iv.lo < iv.hi && iv.hi <= 1))
        throw std::invalid_argument("IntervalSet: need 0 <= a < b <= 1");
    }
    for (size_t i = 0; i + 1 < intervals_.size(); ++i)
      if (intervals_[i].hi >= intervals_[i + 1].lo)
        throw std::invalid_argument("IntervalSet: intervals must be pairwise disjoint");
  }

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  size_t size() const { return intervals_.size(); }

  auto operator<=>(const IntervalSet&) const = default;

 private:
  std::vector<Interval> intervals_;  // sorted by lo, disjoint
};

// A <= B iff every interval of A is covered by some interval of B.
inline bool leq_I(const IntervalSet& a, const IntervalSet& b) {
  for (const Interval& x : a.intervals()) {
    bool found = false;
    for (const Interval& y : b.intervals())
      if (covers(y, x)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

struct IntervalOrderCmp {
  bool leq(const IntervalSet& a, const IntervalSet& b) const { return leq_I(a, b); }
  bool eq(const IntervalSet& a, const IntervalSet& b) const { return a == b; }
};

// n_W = sum w_i / 3^i, exact.  Lands in [0, 1/2].
inline Rat ternary_value(const Word& w) {
  Rat acc = 0;
  Rat power = 1;
  for (char c : w.bits) {
    power /= 3;
    if (c == '1') acc += power;
  }
  return acc;
}

// [n_W, n_W + 2/3^{|W|+1}] per word; prefix-freeness makes the images
// disjoint because distinct branches land in different ternary cells.
inline IntervalSet embed_W_to_I(const AntichainSet& a) {
  std::vector<Interval> out;
  for (const Word& w : a.words()) {
    Rat lo = ternary_value(w);
    Rat len = Rat(2) / pow(Int(3), w.length() + 1);
    out.push_back({lo, lo + len});
  }
  return IntervalSet(std::move(out));
}

// The density construction: locate an interval of B not fully covered by A,
// then shorten it (never split when shortening suffices) at the midpoint of
// its leftmost uncovered gap.  Splitting uses the gap thirds so the two parts
// stay disjoint.
inline IntervalSet densify(const IntervalSet& a, const IntervalSet& b) {
  if (!(leq_I(a, b) && a != b && !leq_I(b, a)))
    throw NotStrict("densify: need a strictly below b");

  for (size_t target = 0; target < b.intervals().size(); ++target) {
    const Interval& big = b.intervals()[target];
    std::vector<Interval> inside;
    for (const Interval& x : a.intervals())
      if (covers(big, x)) inside.push_back(x);

    // leftmost maximal uncovered gap within big
    Rat gap_lo, gap_hi;
    bool have_gap = false;
    Rat cursor = big.lo;
    for (const Interval& x : inside) {
      if (x.lo > cursor) {
        gap_lo = cursor;
        gap_hi = x.lo;
        have_gap = true;
        break;
      }
      cursor = x.hi;
    }
    if (!have_gap && cursor < big.hi) {
      gap_lo = cursor;
      gap_hi = big.hi;
      have_gap = true;
    }
    if (!have_gap) continue;  // big fully covered, try the next interval

    std::vector<Interval> result;
    for (size_t i = 0; i < b.intervals().size(); ++i)
      if (i != target) result.push_back(b.intervals()[i]);

    if (gap_lo == big.lo) {
      result.push_back({(gap_lo + gap_hi) / 2, big.hi});  // shorten from the left
    } else if (gap_hi == big.hi) {
      result.push_back({big.lo, (gap_lo + gap_hi) / 2});  // shorten from the right
    } else {
      Rat third = (gap_hi - gap_lo) / 3;
      result.push_back({big.lo, gap_lo + third});
      result.push_back({gap_lo + 2 * third, big.hi});
    }
    return IntervalSet(std::move(result));
  }
  throw NotStrict("densify: no uncovered interval found");  // unreachable for strict pairs
}

}  // namespace uniorder
