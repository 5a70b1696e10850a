#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uniorder/periodic.hpp"
#include "uniorder/words.hpp"

namespace uniorder {

// Oriented path: edge i connects vertex i-1 to vertex i, +1 forward and -1
// backward.  Every arc points from the lower level to the higher one.
class OrientedPath {
 public:
  OrientedPath() = default;
  explicit OrientedPath(std::vector<std::int8_t> dirs) : dirs_(std::move(dirs)) {
    for (auto d : dirs_)
      if (d != 1 && d != -1) throw std::invalid_argument("OrientedPath: dirs are +1/-1");
  }

  static OrientedPath from_string(std::string_view s) {
    std::vector<std::int8_t> dirs;
    dirs.reserve(s.size());
    for (char c : s) {
      if (c == '>')
        dirs.push_back(1);
      else if (c == '<')
        dirs.push_back(-1);
      else
        throw std::invalid_argument("OrientedPath: expected '>' or '<'");
    }
    return OrientedPath(std::move(dirs));
  }

  std::string to_string() const {
    std::string s;
    s.reserve(dirs_.size());
    for (auto d : dirs_) s.push_back(d == 1 ? '>' : '<');
    return s;
  }

  const std::vector<std::int8_t>& dirs() const { return dirs_; }
  int length() const { return static_cast<int>(dirs_.size()); }  // edges
  int num_vertices() const { return length() + 1; }

  // Level of vertex i: forward minus backward edges among the first i.
  int level(int vertex) const {
    if (vertex < 0 || vertex > length()) throw std::out_of_range("OrientedPath::level");
    int l = 0;
    for (int e = 0; e < vertex; ++e) l += dirs_[static_cast<size_t>(e)];
    return l;
  }

  std::vector<int> levels() const {
    std::vector<int> ls(static_cast<size_t>(num_vertices()));
    for (int i = 1; i <= length(); ++i)
      ls[static_cast<size_t>(i)] = ls[static_cast<size_t>(i - 1)] + dirs_[static_cast<size_t>(i - 1)];
    return ls;
  }

  int algebraic_length() const { return levels().back(); }

  OrientedPath reversed() const {
    std::vector<std::int8_t> rd(dirs_.rbegin(), dirs_.rend());
    for (auto& d : rd) d = static_cast<std::int8_t>(-d);
    return OrientedPath(std::move(rd));
  }

  bool operator==(const OrientedPath&) const = default;

 private:
  std::vector<std::int8_t> dirs_;
};

inline OrientedPath concat(const OrientedPath& a, const OrientedPath& b) {
  std::vector<std::int8_t> dirs = a.dirs();
  dirs.insert(dirs.end(), b.dirs().begin(), b.dirs().end());
  return OrientedPath(std::move(dirs));
}

inline OrientedPath concat(std::initializer_list<OrientedPath> parts) {
  std::vector<std::int8_t> dirs;
  for (const OrientedPath& p : parts) dirs.insert(dirs.end(), p.dirs().begin(), p.dirs().end());
  return OrientedPath(std::move(dirs));
}

inline int level(const OrientedPath& p, int vertex) { return p.level(vertex); }
inline int algebraic_length(const OrientedPath& p) { return p.algebraic_length(); }
inline OrientedPath reverse(const OrientedPath& p) { return p.reversed(); }

// A plank is a path rooted at its initial vertex.
struct Plank {
  OrientedPath path;
};

using Hom = std::vector<int>;  // image vertex per source vertex

namespace detail {

// Layered feasibility DP over source positions.  Exact for path sources:
// feasible[i] holds the vertices of q that extend to a homomorphism of the
// length-i prefix, so any surviving terminal vertex can be traced back to a
// full mapping.
struct HomDp {
  std::vector<std::vector<char>> feasible;  // [i][w]

  HomDp(const OrientedPath& p, const OrientedPath& q, const std::vector<char>& start) {
    int m = p.length(), n = q.num_vertices();
    feasible.assign(static_cast<size_t>(m + 1), std::vector<char>(static_cast<size_t>(n), 0));
    feasible[0] = start;
    const auto& pd = p.dirs();
    const auto& qd = q.dirs();
    for (int i = 1; i <= m; ++i) {
      auto& cur = feasible[static_cast<size_t>(i)];
      const auto& prev = feasible[static_cast<size_t>(i - 1)];
      int d = pd[static_cast<size_t>(i - 1)];
      for (int w = 0; w < n; ++w) {
        if (!prev[static_cast<size_t>(w)]) continue;
        // arc from u=w to neighbors matching direction d
        if (d == 1) {
          if (w + 1 < n && qd[static_cast<size_t>(w)] == 1) cur[static_cast<size_t>(w + 1)] = 1;
          if (w - 1 >= 0 && qd[static_cast<size_t>(w - 1)] == -1) cur[static_cast<size_t>(w - 1)] = 1;
        } else {
          if (w + 1 < n && qd[static_cast<size_t>(w)] == -1) cur[static_cast<size_t>(w + 1)] = 1;
          if (w - 1 >= 0 && qd[static_cast<size_t>(w - 1)] == 1) cur[static_cast<size_t>(w - 1)] = 1;
        }
      }
    }
  }

  // Trace one mapping ending at terminal image t (must be feasible).
  Hom trace(const OrientedPath& p, const OrientedPath& q, int t) const {
    int m = p.length();
    Hom h(static_cast<size_t>(m + 1));
    h[static_cast<size_t>(m)] = t;
    const auto& pd = p.dirs();
    const auto& qd = q.dirs();
    for (int i = m; i >= 1; --i) {
      int w = h[static_cast<size_t>(i)];
      int d = pd[static_cast<size_t>(i - 1)];
      int pick = -1;
      for (int u : {w - 1, w + 1}) {
        if (u < 0 || u >= q.num_vertices()) continue;
        if (!feasible[static_cast<size_t>(i - 1)][static_cast<size_t>(u)]) continue;
        bool arc_ok;
        if (d == 1)
          arc_ok = (u == w - 1) ? qd[static_cast<size_t>(u)] == 1 : qd[static_cast<size_t>(w)] == -1;
        else
          arc_ok = (u == w - 1) ? qd[static_cast<size_t>(u)] == -1 : qd[static_cast<size_t>(w)] == 1;
        if (arc_ok) {
          pick = u;
          break;
        }
      }
      if (pick < 0) throw std::logic_error("HomDp::trace: broken feasibility chain");
      h[static_cast<size_t>(i - 1)] = pick;
    }
    return h;
  }
};

inline bool verify_hom(const OrientedPath& p, const OrientedPath& q, const Hom& h) {
  if (static_cast<int>(h.size()) != p.num_vertices()) return false;
  for (int v : h)
    if (v < 0 || v >= q.num_vertices()) return false;
  const auto& pd = p.dirs();
  const auto& qd = q.dirs();
  for (int i = 0; i < p.length(); ++i) {
    int a = h[static_cast<size_t>(i)], b = h[static_cast<size_t>(i + 1)];
    if (std::abs(a - b) != 1) return false;
    int lo = std::min(a, b);
    // source edge i has arc (a -> b) when forward, (b -> a) when backward;
    // target edge lo--lo+1 has arc (lo -> lo+1) iff qd[lo] == 1
    int tail = pd[static_cast<size_t>(i)] == 1 ? a : b;
    int head = pd[static_cast<size_t>(i)] == 1 ? b : a;
    int t_tail = qd[static_cast<size_t>(lo)] == 1 ? lo : lo + 1;
    int t_head = qd[static_cast<size_t>(lo)] == 1 ? lo + 1 : lo;
    if (tail != t_tail || head != t_head) return false;
  }
  return true;
}

}  // namespace detail

// Homomorphism decider; returns a verified mapping or nothing.
inline std::optional<Hom> hom_exists(const OrientedPath& p, const OrientedPath& q) {
  std::vector<char> start(static_cast<size_t>(q.num_vertices()), 1);
  detail::HomDp dp(p, q, start);
  const auto& last = dp.feasible.back();
  for (int t = 0; t < q.num_vertices(); ++t)
    if (last[static_cast<size_t>(t)]) {
      Hom h = dp.trace(p, q, t);
      if (!detail::verify_hom(p, q, h)) throw std::logic_error("hom_exists: trace failed verification");
      return h;
    }
  return std::nullopt;
}

// Rooted variant: the initial vertex must map to the initial vertex.
inline std::optional<Hom> plank_hom_exists(const OrientedPath& p, const OrientedPath& q) {
  std::vector<char> start(static_cast<size_t>(q.num_vertices()), 0);
  start[0] = 1;
  detail::HomDp dp(p, q, start);
  const auto& last = dp.feasible.back();
  for (int t = 0; t < q.num_vertices(); ++t)
    if (last[static_cast<size_t>(t)]) {
      Hom h = dp.trace(p, q, t);
      if (!detail::verify_hom(p, q, h)) throw std::logic_error("plank_hom_exists: trace failed verification");
      return h;
    }
  return std::nullopt;
}

inline std::optional<Hom> plank_hom_exists(const Plank& p, const Plank& q) {
  return plank_hom_exists(p.path, q.path);
}

// All vertices of q that some homomorphism assigns to in(p).
inline std::vector<int> hom_initial_images(const OrientedPath& p, const OrientedPath& q) {
  std::vector<int> images;
  for (int s = 0; s < q.num_vertices(); ++s) {
    std::vector<char> start(static_cast<size_t>(q.num_vertices()), 0);
    start[static_cast<size_t>(s)] = 1;
    detail::HomDp dp(p, q, start);
    const auto& last = dp.feasible.back();
    if (std::any_of(last.begin(), last.end(), [](char c) { return c != 0; }))
      images.push_back(s);
  }
  return images;
}

// All vertices of q that some homomorphism with in(p) pinned to `pinned_start`
// assigns to term(p).
inline std::vector<int> hom_terminal_images(const OrientedPath& p, const OrientedPath& q,
                                            int pinned_start) {
  std::vector<char> start(static_cast<size_t>(q.num_vertices()), 0);
  start.at(static_cast<size_t>(pinned_start)) = 1;
  detail::HomDp dp(p, q, start);
  std::vector<int> images;
  const auto& last = dp.feasible.back();
  for (int t = 0; t < q.num_vertices(); ++t)
    if (last[static_cast<size_t>(t)]) images.push_back(t);
  return images;
}

// Number of homomorphisms p -> q (saturating).
inline long long hom_count(const OrientedPath& p, const OrientedPath& q) {
  constexpr long long kCap = 1ll << 60;
  int m = p.length(), n = q.num_vertices();
  std::vector<long long> cur(static_cast<size_t>(n), 1);
  const auto& pd = p.dirs();
  const auto& qd = q.dirs();
  for (int i = 1; i <= m; ++i) {
    std::vector<long long> next(static_cast<size_t>(n), 0);
    int d = pd[static_cast<size_t>(i - 1)];
    for (int w = 0; w < n; ++w) {
      if (!cur[static_cast<size_t>(w)]) continue;
      auto add = [&](int v) {
        next[static_cast<size_t>(v)] = std::min(kCap, next[static_cast<size_t>(v)] + cur[static_cast<size_t>(w)]);
      };
      if (d == 1) {
        if (w + 1 < n && qd[static_cast<size_t>(w)] == 1) add(w + 1);
        if (w - 1 >= 0 && qd[static_cast<size_t>(w - 1)] == -1) add(w - 1);
      } else {
        if (w + 1 < n && qd[static_cast<size_t>(w)] == -1) add(w + 1);
        if (w - 1 >= 0 && qd[static_cast<size_t>(w - 1)] == 1) add(w - 1);
      }
    }
    cur = std::move(next);
  }
  long long total = 0;
  for (long long c : cur) total = std::min(kCap, total + c);
  return total;
}

struct PathHomCmp {
  bool leq(const OrientedPath& a, const OrientedPath& b) const {
    return hom_exists(a, b).has_value();
  }
  bool eq(const OrientedPath& a, const OrientedPath& b) const {
    return hom_exists(a, b).has_value() && hom_exists(b, a).has_value();
  }
};

struct PlankHomCmp {
  bool leq(const OrientedPath& a, const OrientedPath& b) const {
    return plank_hom_exists(a, b).has_value();
  }
  bool eq(const OrientedPath& a, const OrientedPath& b) const {
    return plank_hom_exists(a, b).has_value() && plank_hom_exists(b, a).has_value();
  }
};

}  // namespace uniorder
