#pragma once

// Planar primitives over Q(sqrt 2): points, segments, lines, incidence,
// intersection and grid enumeration.

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gridlink/radical_sum.hpp"
#include "gridlink/scalar.hpp"

namespace gridlink {

struct Point {
  Scalar x;
  Scalar y;

  Point() = default;
  Point(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {}

  friend bool operator==(const Point&, const Point&) = default;
  /// Lexicographic (x, then y).
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }

  std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Scalar& k, const Point& p) { return {k * p.x, k * p.y}; }

inline Scalar cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Scalar dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

/// A lattice node of G_n^2: integer coordinates in [0, n).
struct GridNode {
  long x = 0;
  long y = 0;

  friend bool operator==(const GridNode&, const GridNode&) = default;
  friend auto operator<=>(const GridNode&, const GridNode&) = default;

  Point point() const { return {Scalar(x), Scalar(y)}; }
  std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

inline bool in_grid(const GridNode& g, long n) { return g.x >= 0 && g.y >= 0 && g.x < n && g.y < n; }

/// Grid node at p, if p is an integer point of G_n^2.
inline std::optional<GridNode> as_grid_node(const Point& p, long n) {
  auto x = as_long(p.x);
  auto y = as_long(p.y);
  if (!x || !y) return std::nullopt;
  GridNode g{*x, *y};
  if (!in_grid(g, n)) return std::nullopt;
  return g;
}

/// Ordered, non-degenerate segment a -> b.
class Segment {
 public:
  Segment(Point a, Point b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ == b_) throw DomainError("degenerate segment at " + a_.str());
  }

  const Point& a() const noexcept { return a_; }
  const Point& b() const noexcept { return b_; }
  Point direction() const { return b_ - a_; }

 private:
  Point a_;
  Point b_;
};

/// Infinite line through two distinct points.
class Line {
 public:
  Line(Point p, Point q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_ == q_) throw DomainError("line through coincident points " + p_.str());
  }
  explicit Line(const Segment& s) : Line(s.a(), s.b()) {}

  const Point& p() const noexcept { return p_; }
  const Point& q() const noexcept { return q_; }
  Point direction() const { return q_ - p_; }

  bool contains(const Point& r) const { return cross(direction(), r - p_).is_zero(); }

 private:
  Point p_;
  Point q_;
};

struct Parallel {};
struct Coincident {};
using Intersection = std::variant<Point, Parallel, Coincident>;

/// Intersection of two lines, exact.
inline Intersection line_intersection(const Line& l1, const Line& l2) {
  const Point r = l1.direction();
  const Point s = l2.direction();
  const Scalar den = cross(r, s);
  if (den.is_zero()) {
    if (l1.contains(l2.p())) return Coincident{};
    return Parallel{};
  }
  const Scalar t = cross(l2.p() - l1.p(), s) / den;
  return l1.p() + t * r;
}

/// Parameter of the intersection along l1 (l1.p() at 0, l1.q() at 1), if the lines cross.
inline std::optional<Scalar> intersection_parameter(const Line& l1, const Line& l2) {
  const Scalar den = cross(l1.direction(), l2.direction());
  if (den.is_zero()) return std::nullopt;
  return cross(l2.p() - l1.p(), l2.direction()) / den;
}

/// Parameter of p along s (a at 0, b at 1); p must lie on the carrier line.
inline Scalar parameter_on(const Segment& s, const Point& p) {
  const Point d = s.direction();
  if (!d.x.is_zero()) return (p.x - s.a().x) / d.x;
  return (p.y - s.a().y) / d.y;
}

inline bool point_on_segment(const Point& p, const Segment& s) {
  if (!cross(s.direction(), p - s.a()).is_zero()) return false;
  const Scalar t = parameter_on(s, p);
  return t.sign() >= 0 && t <= Scalar(1);
}

/// True iff the carrier lines coincide.
inline bool segments_collinear(const Segment& s1, const Segment& s2) {
  const Point d = s1.direction();
  return cross(d, s2.a() - s1.a()).is_zero() && cross(d, s2.b() - s1.a()).is_zero();
}

/// A grid node hit by a segment, with its parameter along the segment.
struct LatticeHit {
  GridNode node;
  Scalar t;
};

namespace detail {

// Iterate the integer values of the driving coordinate inside [lo, hi] ∩ [0, n).
inline std::pair<long, long> integer_window(const Scalar& u, const Scalar& v, long n) {
  const Scalar& lo = u <= v ? u : v;
  const Scalar& hi = u <= v ? v : u;
  Integer first = ceil_of(lo);
  Integer last = floor_of(hi);
  if (first < 0) first = 0;
  if (last > n - 1) last = n - 1;
  if (first > last) return {1, 0};
  return {first.get_si(), last.get_si()};
}

}  // namespace detail

/// Grid nodes of G_n^2 on the closed segment, ordered from s.a() to s.b().
inline std::vector<LatticeHit> lattice_hits(const Segment& s, long n) {
  std::vector<LatticeHit> hits;
  const Point d = s.direction();
  const bool drive_x = !d.x.is_zero();
  const Scalar& a0 = drive_x ? s.a().x : s.a().y;
  const Scalar& b0 = drive_x ? s.b().x : s.b().y;
  const Scalar& a1 = drive_x ? s.a().y : s.a().x;
  const Scalar& d0 = drive_x ? d.x : d.y;
  const Scalar& d1 = drive_x ? d.y : d.x;
  auto [first, last] = detail::integer_window(a0, b0, n);
  if (first > last) return hits;
  if (d1.is_zero()) {
    // Axis-parallel: the other coordinate is constant.
    auto c = as_long(a1);
    if (!c || *c < 0 || *c >= n) return hits;
  }
  const Scalar inv = d0.inverse();
  for (long k = first; k <= last; ++k) {
    Scalar t = (Scalar(k) - a0) * inv;
    Scalar other = a1 + t * d1;
    auto o = as_long(other);
    if (!o || *o < 0 || *o >= n) continue;
    GridNode g = drive_x ? GridNode{k, *o} : GridNode{*o, k};
    hits.push_back({g, std::move(t)});
  }
  if (d0.sign() < 0) std::reverse(hits.begin(), hits.end());
  return hits;
}

inline std::vector<Point> lattice_points_on_segment(const Segment& s, long n) {
  std::vector<Point> out;
  for (auto& h : lattice_hits(s, n)) out.push_back(h.node.point());
  return out;
}

inline Scalar squared_length(const Segment& s) {
  const Point d = s.direction();
  return dot(d, d);
}

/// Exact Euclidean length; throws UnsupportedRadicalError when the squared
/// length has a sqrt(2) component.
inline RadicalSum segment_length(const Segment& s) {
  const Scalar sq = squared_length(s);
  if (!sq.is_rational()) {
    throw UnsupportedRadicalError("squared length " + sq.str() + " is not rational");
  }
  return RadicalSum::sqrt_of(sq.rational_part());
}

}  // namespace gridlink
