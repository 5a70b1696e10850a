#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "uniorder/poset.hpp"
#include "uniorder/words.hpp"

namespace uniorder {

struct EmptyWordError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncated 0-1 vector.
struct BitVector {
  std::vector<std::uint8_t> bits;
  auto operator<=>(const BitVector&) const = default;
  int length() const { return static_cast<int>(bits.size()); }
  int bit_count() const { return length(); }
};

// v <= w iff v is at least as long and dominates w on w's coordinates.
inline bool leq_v(const BitVector& v, const BitVector& w) {
  if (v.bits.size() < w.bits.size()) return false;
  for (size_t i = 0; i < w.bits.size(); ++i)
    if (v.bits[i] < w.bits[i]) return false;
  return true;
}

class VectorSet {
 public:
  VectorSet() = default;
  explicit VectorSet(std::vector<BitVector> vs) : vs_(std::move(vs)) {
    std::sort(vs_.begin(), vs_.end());
    vs_.erase(std::unique(vs_.begin(), vs_.end()), vs_.end());
  }
  const std::vector<BitVector>& vectors() const { return vs_; }
  bool empty() const { return vs_.empty(); }
  size_t size() const { return vs_.size(); }
  int total_bits() const {
    int n = 0;
    for (const BitVector& v : vs_) n += v.length();
    return n;
  }
  auto operator<=>(const VectorSet&) const = default;

 private:
  std::vector<BitVector> vs_;  // sorted, deduplicated
};

inline bool leq_TV(const VectorSet& a, const VectorSet& b) {
  for (const BitVector& v : a.vectors()) {
    bool found = false;
    for (const BitVector& w : b.vectors())
      if (leq_v(v, w)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

struct VectorOrderCmp {
  bool leq(const VectorSet& a, const VectorSet& b) const { return leq_TV(a, b); }
  bool eq(const VectorSet& a, const VectorSet& b) const { return a == b; }
};

// Drops vectors dominated by another member; leq_TV-equivalent normal form
// for fixtures.  Comparisons elsewhere use the raw sets.
inline VectorSet canonicalize(const VectorSet& s) {
  std::vector<BitVector> keep;
  for (const BitVector& v : s.vectors()) {
    bool dominated = false;
    for (const BitVector& w : s.vectors())
      if (!(v == w) && leq_v(v, w) && !leq_v(w, v)) {
        dominated = true;
        break;
      }
    if (!dominated) keep.push_back(v);
  }
  return VectorSet(std::move(keep));
}

namespace detail {

// Letter gadget: 0 -> (0,1), 1 -> (1,0).  The two codes are incomparable
// coordinatewise, which makes the map transport the prefix order exactly.
inline BitVector word_gadget(const Word& w) {
  BitVector v;
  v.bits.reserve(2 * w.bits.size());
  for (char c : w.bits) {
    if (c == '0') {
      v.bits.push_back(0);
      v.bits.push_back(1);
    } else {
      v.bits.push_back(1);
      v.bits.push_back(0);
    }
  }
  return v;
}

}  // namespace detail

inline BitVector word_to_vector(const Word& w) {
  if (w.bits.empty()) throw EmptyWordError("word_to_vector: empty word");
  return detail::word_gadget(w);
}

// Elementwise gadget image.  The empty word is allowed inside a set and maps
// to the empty vector, the top of the vector order, matching {empty word}
// being the top antichain.
inline VectorSet embed_W_to_TV(const AntichainSet& a) {
  std::vector<BitVector> vs;
  for (const Word& w : a.words()) vs.push_back(detail::word_gadget(w));
  return VectorSet(std::move(vs));
}

// The direct quadratic-size online embedding: v([k]) has length k with bit m
// set iff k <= m in the poset; the image of k collects v([m]) for m below k.
inline BitVector psi_prime_vector(const FinitePoset& p, int k) {
  BitVector v;
  v.bits.resize(static_cast<size_t>(k));
  for (int m = 1; m <= k; ++m) v.bits[static_cast<size_t>(m - 1)] = p.leq(k, m) ? 1 : 0;
  return v;
}

inline std::vector<VectorSet> psi_prime(const FinitePoset& p) {
  int n = p.size();
  std::vector<VectorSet> out;
  out.reserve(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    std::vector<BitVector> vs;
    for (int m = 1; m <= k; ++m)
      if (p.leq(m, k)) vs.push_back(psi_prime_vector(p, m));
    out.emplace_back(std::move(vs));
  }
  return out;
}

struct PsiPrimeStrategy {
  std::vector<VectorSet> operator()(const FinitePoset& prefix) const { return psi_prime(prefix); }
};

}  // namespace uniorder
