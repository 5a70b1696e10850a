#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "uniorder/vectors.hpp"
#include "uniorder/words.hpp"

namespace uniorder {

struct LengthError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PeriodError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Power-of-two-periodic subset of the integers, stored as the canonical
// signature: position i set iff the residue class i mod 2^k belongs to the
// set, with the minimal power-of-two period (no doubled signature).
class PeriodicSet {
 public:
  PeriodicSet() : sig_("0") {}

  const std::string& signature() const { return sig_; }
  int period() const { return static_cast<int>(sig_.size()); }
  bool contains(long long n) const {
    long long r = n % period();
    if (r < 0) r += period();
    return sig_[static_cast<size_t>(r)] == '1';
  }

  // Signature expanded to length p (a multiple of the period).
  std::string signature_at(int p) const {
    if (p < period() || p % period() != 0)
      throw PeriodError("signature_at: length must be a multiple of the period");
    std::string out;
    out.reserve(static_cast<size_t>(p));
    while (static_cast<int>(out.size()) < p) out += sig_;
    return out;
  }

  auto operator<=>(const PeriodicSet&) const = default;

  friend PeriodicSet from_signature(const std::string& bits);

 private:
  explicit PeriodicSet(std::string canonical) : sig_(std::move(canonical)) {}
  std::string sig_;
};

inline bool is_power_of_two(long long v) { return v > 0 && (v & (v - 1)) == 0; }

// Canonicalizes by halving while both halves agree.
inline PeriodicSet from_signature(const std::string& bits) {
  if (bits.empty() || !is_power_of_two(static_cast<long long>(bits.size())))
    throw LengthError("from_signature: length must be a power of two");
  for (char c : bits)
    if (c != '0' && c != '1') throw std::invalid_argument("from_signature: alphabet is {0,1}");
  std::string s = bits;
  while (s.size() > 1) {
    size_t half = s.size() / 2;
    if (s.compare(0, half, s, half, half) != 0) break;
    s.resize(half);
  }
  return PeriodicSet(std::move(s));
}

// Inclusion: expand both signatures to the common period and test bitwise
// implication.
inline bool subset(const PeriodicSet& a, const PeriodicSet& b) {
  int p = std::max(a.period(), b.period());
  std::string sa = a.signature_at(p), sb = b.signature_at(p);
  for (int i = 0; i < p; ++i)
    if (sa[static_cast<size_t>(i)] == '1' && sb[static_cast<size_t>(i)] == '0') return false;
  return true;
}

struct PeriodicOrderCmp {
  bool leq(const PeriodicSet& a, const PeriodicSet& b) const { return subset(a, b); }
  bool eq(const PeriodicSet& a, const PeriodicSet& b) const { return a == b; }
};

// S^(i): the inclusion-maximal subset of S with period i.  Residue r survives
// iff every lift r + j*i lies in S.
inline PeriodicSet restrict_period(const PeriodicSet& s, int i) {
  if (!is_power_of_two(i)) throw PeriodError("restrict_period: period must be a power of two");
  if (i > s.period()) throw PeriodError("restrict_period: period exceeds the period of the set");
  std::string out(static_cast<size_t>(i), '1');
  for (int r = 0; r < i; ++r)
    for (int j = r; j < s.period(); j += i)
      if (s.signature()[static_cast<size_t>(j)] == '0') {
        out[static_cast<size_t>(r)] = '0';
        break;
      }
  return from_signature(out);
}

// Image of an antichain as a periodic set.  Each letter occupies two bits of
// the residue (the vector-order gadget), read from the least significant end:
// n belongs iff the low bits of n spell the gadget image of some word of A.
// The two-bit code keeps sibling words from covering their parent's residue
// class, so inclusion transports the antichain order exactly in both
// directions.  (Reading single letters directly off the low bits, as the
// construction is usually phrased, collapses {00,01} and {0} to the same set;
// see lsb_match_set.)
inline PeriodicSet embed_W_to_S(const AntichainSet& a) {
  int maxlen = 0;
  for (const Word& w : a.words()) maxlen = std::max(maxlen, w.length());
  long long p = 1ll << (2 * maxlen);
  std::string sig(static_cast<size_t>(p), '0');
  for (const Word& w : a.words()) {
    BitVector g = detail::word_gadget(w);
    long long fixed = 0;
    for (int j = 0; j < g.length(); ++j)
      if (g.bits[static_cast<size_t>(j)]) fixed |= 1ll << j;
    long long free_bits = 2 * (maxlen - w.length());
    for (long long m = 0; m < (1ll << free_bits); ++m)
      sig[static_cast<size_t>(fixed | (m << (2 * w.length())))] = '1';
  }
  return from_signature(sig);
}

// The literal least-significant-digit reading: n belongs iff for some word
// w1..wm of A, bit j-1 of n equals wj for j = 1..m.  This is the natural
// residue predicate of the word set but it is not injective on antichains
// ({00,01} and {0} both give the even numbers), so it only transports the
// order in the forward direction.
inline PeriodicSet lsb_match_set(const AntichainSet& a) {
  int maxlen = 0;
  for (const Word& w : a.words()) maxlen = std::max(maxlen, w.length());
  long long p = 1ll << maxlen;
  std::string sig(static_cast<size_t>(p), '0');
  for (const Word& w : a.words()) {
    long long fixed = 0;
    for (int j = 0; j < w.length(); ++j)
      if (w.bits[static_cast<size_t>(j)] == '1') fixed |= 1ll << j;
    long long free_bits = maxlen - w.length();
    for (long long m = 0; m < (1ll << free_bits); ++m)
      sig[static_cast<size_t>(fixed | (m << w.length()))] = '1';
  }
  return from_signature(sig);
}

// True iff no periodic set lies strictly below upper while containing both
// lower1 and lower2.  Any such set must drop at least one residue of upper
// that is forced by neither lower set, so scanning single-residue drops at
// the common period is a complete search.
inline bool three_extension_probe(const PeriodicSet& upper, const PeriodicSet& lower1,
                                  const PeriodicSet& lower2) {
  if (!subset(lower1, upper) || !subset(lower2, upper))
    throw std::invalid_argument("three_extension_probe: lower sets must lie inside upper");
  int p = std::max({upper.period(), lower1.period(), lower2.period()});
  std::string su = upper.signature_at(p);
  std::string s1 = lower1.signature_at(p);
  std::string s2 = lower2.signature_at(p);
  for (int r = 0; r < p; ++r) {
    size_t i = static_cast<size_t>(r);
    if (su[i] == '1' && s1[i] == '0' && s2[i] == '0') {
      std::string cand = su;
      cand[i] = '0';
      PeriodicSet x = from_signature(cand);
      if (subset(lower1, x) && subset(lower2, x) && subset(x, upper) && x != upper)
        return false;  // strict majorant of both lowers below upper exists
    }
  }
  return true;
}

// The paper's 3-extension failure: nothing strictly below the odd numbers
// contains both period-4 halves of them.
inline bool three_extension_gap_check() {
  return three_extension_probe(from_signature("01"), from_signature("0100"),
                               from_signature("0001"));
}

}  // namespace uniorder
