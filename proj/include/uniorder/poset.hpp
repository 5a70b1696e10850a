#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uniorder/rational.hpp"

namespace uniorder {

struct CycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StrategyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite partial order on elements 1..n, dense boolean matrix.
// Ground truth for every embedding test in the library.
class FinitePoset {
 public:
  explicit FinitePoset(int n) : n_(n), leq_(static_cast<size_t>(n) * n, 0) {
    if (n < 0) throw std::invalid_argument("FinitePoset: negative size");
    for (int i = 0; i < n; ++i) cell(i, i) = 1;
  }

  int size() const { return n_; }

  // 1-based, matching the element names used everywhere else.
  bool leq(int i, int j) const {
    check_range(i);
    check_range(j);
    return cell(i - 1, j - 1) != 0;
  }
  bool less(int i, int j) const { return i != j && leq(i, j); }

  // Induced suborder on elements 1..k.
  FinitePoset restriction(int k) const {
    check_range(k);
    FinitePoset r(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) r.cell(i, j) = cell(i, j);
    return r;
  }

  FinitePoset dual() const {
    FinitePoset d(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) d.cell(i, j) = cell(j, i);
    return d;
  }

  // Covering pairs (transitive reduction), sorted; the interchange format.
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (i == j || !cell(i, j)) continue;
        bool covered = true;
        for (int k = 0; k < n_; ++k)
          if (k != i && k != j && cell(i, k) && cell(k, j)) {
            covered = false;
            break;
          }
        if (covered) out.emplace_back(i + 1, j + 1);
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const FinitePoset& o) const = default;

  static FinitePoset antichain(int n) { return FinitePoset(n); }

  static FinitePoset chain(int n) {
    FinitePoset p(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) p.cell(i, j) = 1;
    return p;
  }

  friend FinitePoset make_poset(int n, const std::vector<std::pair<int, int>>& covers);
  friend std::vector<FinitePoset> enumerate_posets(int n);
  friend FinitePoset random_poset(int n, std::uint64_t seed, const Rat& density);

 private:
  char& cell(int i, int j) { return leq_[static_cast<size_t>(i) * n_ + j]; }
  const char& cell(int i, int j) const { return leq_[static_cast<size_t>(i) * n_ + j]; }
  void check_range(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("FinitePoset: element " + std::to_string(i));
  }

  int n_;
  std::vector<char> leq_;
};

// Reflexive-transitive closure of the cover relation; rejects cycles.
inline FinitePoset make_poset(int n, const std::vector<std::pair<int, int>>& covers) {
  FinitePoset p(n);
  for (auto [a, b] : covers) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw std::out_of_range("make_poset: cover pair out of range");
    p.cell(a - 1, b - 1) = 1;
  }
  // Floyd-Warshall style closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.cell(i, k))
        for (int j = 0; j < n; ++j)
          if (p.cell(k, j)) p.cell(i, j) = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.cell(i, j) && p.cell(j, i))
        throw CycleError("make_poset: covers close into a cycle through " +
                         std::to_string(i + 1) + " and " + std::to_string(j + 1));
  return p;
}

constexpr int kEnumeratePosetGuard = 5;

// Every labeled partial order on [n], each exactly once.  Backtracking over
// the strict part with transitivity propagation; counts are cross-checked in
// the tests against a brute-force scan of all reflexive relations.
inline std::vector<FinitePoset> enumerate_posets(int n) {
  if (n < 0 || n > kEnumeratePosetGuard)
    throw SizeError("enumerate_posets: n beyond guard " + std::to_string(kEnumeratePosetGuard));
  std::vector<FinitePoset> out;
  if (n == 0) {
    out.emplace_back(0);
    return out;
  }
  std::vector<std::pair<int, int>> slots;  // ordered pairs i<j, 0-based
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

  FinitePoset p(n);
  auto consistent = [&](int a, int b) {
    // adding a<b; reject if b<=a already
    return !p.cell(b, a);
  };
  auto closure_ok = [&]() {
    FinitePoset q = p;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (q.cell(i, k))
          for (int j = 0; j < n; ++j)
            if (q.cell(k, j)) q.cell(i, j) = 1;
    return q == p;
  };
  // assign each unordered slot one of: incomparable, i<j, j<i
  auto rec = [&](auto&& self, size_t s) -> void {
    if (s == slots.size()) {
      if (closure_ok()) out.push_back(p);
      return;
    }
    auto [i, j] = slots[s];
    self(self, s + 1);
    if (consistent(i, j)) {
      p.cell(i, j) = 1;
      self(self, s + 1);
      p.cell(i, j) = 0;
    }
    if (consistent(j, i)) {
      p.cell(j, i) = 1;
      self(self, s + 1);
      p.cell(j, i) = 0;
    }
  };
  rec(rec, 0);
  return out;
}

// Deterministic for fixed arguments: random DAG edges (i<j kept with the given
// probability) followed by transitive closure.
inline FinitePoset random_poset(int n, std::uint64_t seed, const Rat& density) {
  if (n < 1) throw std::invalid_argument("random_poset: n must be positive");
  if (density < 0 || density > 1) throw std::invalid_argument("random_poset: density outside [0,1]");
  std::mt19937_64 rng(seed);
  Int num = numerator(density), den = denominator(density);
  Int scale = Int(1) << 64;
  FinitePoset p(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // keep edge iff draw/2^64 < density, compared exactly
      Int draw = Int(rng());
      if (draw * den < num * scale) p.cell(i, j) = 1;
    }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.cell(i, k))
        for (int j = 0; j < n; ++j)
          if (p.cell(k, j)) p.cell(i, j) = 1;
  return p;
}

inline FinitePoset dual(const FinitePoset& p) { return p.dual(); }

// Abstract order interface: anything with leq/eq over opaque elements.  leq is
// expected reflexive and transitive; antisymmetry is checked by the oracle,
// not assumed (some targets are quasi-orders).
template <typename C, typename El>
concept Comparator = requires(const C& c, const El& a, const El& b) {
  { c.leq(a, b) } -> std::convertible_to<bool>;
  { c.eq(a, b) } -> std::convertible_to<bool>;
};

struct Violation {
  int i, j;
  bool expected, observed;
  bool operator==(const Violation&) const = default;
};

struct EmbeddingReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// Brute-force certificate: ok iff p.leq(i,j) <=> cmp.leq(images[i], images[j])
// for all pairs, and images are injective under cmp.eq.
template <typename El, typename C>
  requires Comparator<C, El>
EmbeddingReport is_embedding(const FinitePoset& p, std::span<const El> images, const C& cmp) {
  if (static_cast<int>(images.size()) != p.size())
    throw std::invalid_argument("is_embedding: image count mismatch");
  EmbeddingReport rep;
  int n = p.size();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      bool expected = p.leq(i, j);
      bool observed = static_cast<bool>(cmp.leq(images[i - 1], images[j - 1]));
      if (expected != observed) rep.violations.push_back({i, j, expected, observed});
      if (i < j && cmp.eq(images[i - 1], images[j - 1]))
        rep.violations.push_back({i, j, false, true});  // injectivity failure
    }
  rep.ok = rep.violations.empty();
  return rep;
}

template <typename El, typename C>
  requires Comparator<C, El>
EmbeddingReport is_embedding(const FinitePoset& p, const std::vector<El>& images, const C& cmp) {
  return is_embedding(p, std::span<const El>(images), cmp);
}

// The online representation game.  The revealer presents elements 1..n in
// natural order; after each reveal the strategy must return images for the
// whole prefix and may never revise an earlier image.
template <typename El, typename Strategy, typename C>
  requires Comparator<C, El>
EmbeddingReport online_game(const FinitePoset& revealed, Strategy&& strategy, const C& cmp) {
  int n = revealed.size();
  std::vector<El> images;
  for (int k = 1; k <= n; ++k) {
    std::vector<El> step = strategy(revealed.restriction(k));
    if (static_cast<int>(step.size()) != k)
      throw StrategyError("online_game: strategy returned " + std::to_string(step.size()) +
                          " images after reveal " + std::to_string(k));
    for (int m = 0; m + 1 < k; ++m)
      if (!cmp.eq(step[m], images[m]))
        throw StrategyError("online_game: strategy revised image of element " + std::to_string(m + 1));
    images = std::move(step);
  }
  return is_embedding(revealed, std::span<const El>(images), cmp);
}

}  // namespace uniorder
