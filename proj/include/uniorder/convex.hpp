#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "uniorder/intervals.hpp"
#include "uniorder/rational.hpp"

namespace uniorder {

struct EmptyInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Point {
  Rat x, y;
  auto operator<=>(const Point&) const = default;
};

// > 0 left turn, < 0 right turn, == 0 collinear; exact.
inline int orientation(const Point& a, const Point& b, const Point& c) {
  Rat cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (cross > 0) return 1;
  if (cross < 0) return -1;
  return 0;
}

// Convex hull of a finite rational point set, vertices in counterclockwise
// order starting from the lexicographically smallest point.  Strictly convex:
// collinear middle points are dropped.  Degenerate inputs give a 1- or
// 2-vertex hull.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point> ccw_vertices) : verts_(std::move(ccw_vertices)) {
    if (verts_.empty()) throw EmptyInput("ConvexPolygon: no vertices");
  }

  const std::vector<Point>& vertices() const { return verts_; }
  size_t size() const { return verts_.size(); }

  bool operator==(const ConvexPolygon&) const = default;

 private:
  std::vector<Point> verts_;
};

namespace detail {

// Monotone chain; returns {lower, upper} chains, both including the leftmost
// and rightmost points.
inline std::pair<std::vector<Point>, std::vector<Point>> hull_chains(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto build = [&](bool lower) {
    std::vector<Point> chain;
    for (const Point& p : pts) {
      while (chain.size() >= 2) {
        int o = orientation(chain[chain.size() - 2], chain.back(), p);
        if ((lower && o <= 0) || (!lower && o >= 0))
          chain.pop_back();
        else
          break;
      }
      chain.push_back(p);
    }
    return chain;
  };
  return {build(true), build(false)};
}

}  // namespace detail

inline ConvexPolygon convex_hull(const std::vector<Point>& points) {
  if (points.empty()) throw EmptyInput("convex_hull: no points");
  auto [lower, upper] = detail::hull_chains(points);
  if (lower.size() <= 2 && upper.size() <= 2) {
    // single point or segment
    std::vector<Point> vs = lower;
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return ConvexPolygon(std::move(vs));
  }
  std::vector<Point> ccw = lower;
  for (size_t i = upper.size() - 1; i >= 1; --i) ccw.push_back(upper[i - 1]);
  ccw.pop_back();  // first point repeated at the end of the upper sweep
  return ConvexPolygon(std::move(ccw));
}

// Parabola construction: (a,a^2), ((a+b)/2, ab), (b,b^2) per interval.  The
// middle point is the intersection of the parabola tangents at a and b.
inline std::vector<Point> parabola_points(const IntervalSet& a) {
  std::vector<Point> pts;
  for (const Interval& iv : a.intervals()) {
    pts.push_back({iv.lo, iv.lo * iv.lo});
    pts.push_back({(iv.lo + iv.hi) / 2, iv.lo * iv.hi});
    pts.push_back({iv.hi, iv.hi * iv.hi});
  }
  return pts;
}

inline ConvexPolygon embed_I_to_C(const IntervalSet& a) {
  if (a.empty()) throw EmptyInput("embed_I_to_C: empty interval set");
  return convex_hull(parabola_points(a));
}

namespace detail {

inline bool point_on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

inline bool point_in_polygon(const Point& p, const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  if (v.size() == 1) return p == v[0];
  if (v.size() == 2) return point_on_segment(p, v[0], v[1]);
  for (size_t i = 0; i < v.size(); ++i)
    if (orientation(v[i], v[(i + 1) % v.size()], p) < 0) return false;
  return true;
}

}  // namespace detail

// Inclusion test; checking the vertices of the inner hull suffices because
// both operands are convex.
inline bool contains(const ConvexPolygon& inner, const ConvexPolygon& outer) {
  for (const Point& p : inner.vertices())
    if (!detail::point_in_polygon(p, outer)) return false;
  return true;
}

inline bool leq_C(const ConvexPolygon& a, const ConvexPolygon& b) { return contains(a, b); }

struct ConvexOrderCmp {
  bool leq(const ConvexPolygon& a, const ConvexPolygon& b) const { return leq_C(a, b); }
  bool eq(const ConvexPolygon& a, const ConvexPolygon& b) const { return a == b; }
};

// Convex piecewise-linear function given by its breakpoints.
class PLFunction {
 public:
  explicit PLFunction(std::vector<Point> breakpoints) : pts_(std::move(breakpoints)) {
    if (pts_.size() < 2) throw std::invalid_argument("PLFunction: need at least two breakpoints");
    for (size_t i = 0; i + 1 < pts_.size(); ++i)
      if (!(pts_[i].x < pts_[i + 1].x))
        throw std::invalid_argument("PLFunction: breakpoints must increase in x");
    for (size_t i = 0; i + 2 < pts_.size(); ++i)
      if (orientation(pts_[i], pts_[i + 1], pts_[i + 2]) < 0)
        throw std::invalid_argument("PLFunction: slopes must be nondecreasing");
  }

  const std::vector<Point>& breakpoints() const { return pts_; }
  Rat domain_lo() const { return pts_.front().x; }
  Rat domain_hi() const { return pts_.back().x; }

  Rat operator()(const Rat& x) const {
    if (x < domain_lo() || x > domain_hi()) throw DomainMismatch("PLFunction: x outside domain");
    for (size_t i = 0; i + 1 < pts_.size(); ++i) {
      if (x <= pts_[i + 1].x) {
        const Point &a = pts_[i], &b = pts_[i + 1];
        return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
      }
    }
    return pts_.back().y;
  }

  bool operator==(const PLFunction&) const = default;

 private:
  std::vector<Point> pts_;
};

// Anchors on the parabola strictly outside [0,1]; both hulls then share their
// upper chord and inclusion reduces to pointwise comparison of lower chains,
// with the order reversed.
inline const Point kPlAnchorLeft{Rat(-1), Rat(1)};
inline const Point kPlAnchorRight{Rat(2), Rat(4)};

// Lower boundary of the anchored hull as a convex PL function on [-1, 2].
// Contract: A <=_I B  iff  pl_lower_chain(B) <= pl_lower_chain(A) pointwise.
inline PLFunction pl_lower_chain(const IntervalSet& a) {
  if (a.empty()) throw EmptyInput("pl_lower_chain: empty interval set");
  std::vector<Point> pts = parabola_points(a);
  pts.push_back(kPlAnchorLeft);
  pts.push_back(kPlAnchorRight);
  auto [lower, upper] = detail::hull_chains(std::move(pts));
  (void)upper;
  return PLFunction(std::move(lower));
}

// f <= g everywhere; for piecewise-linear functions checking the union of
// breakpoints is enough.
inline bool pointwise_leq(const PLFunction& f, const PLFunction& g) {
  if (f.domain_lo() != g.domain_lo() || f.domain_hi() != g.domain_hi())
    throw DomainMismatch("pointwise_leq: domains differ");
  std::vector<Rat> xs;
  for (const Point& p : f.breakpoints()) xs.push_back(p.x);
  for (const Point& p : g.breakpoints()) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (const Rat& x : xs)
    if (f(x) > g(x)) return false;
  return true;
}

}  // namespace uniorder
