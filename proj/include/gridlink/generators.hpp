#pragma once

// Constructions of minimum-link covering chains: the explicit catalog,
// triangular spirals joined by a bridge edge, square-spiral growth,
// circuits, even cycles, the epsilon path and length-optimised trails.

#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gridlink/verifier.hpp"

namespace gridlink {

// ---------------------------------------------------------------------------
// Text form of chains: "(0,0)-(2,2)-(-1,2)" with rational coordinates.

inline PolygonalChain parse_chain_text(long n, std::string_view text, ChainKind kind = ChainKind::unknown) {
  PolygonalChain c{n, {}, kind};
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '-') {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("expected '(' in chain text at offset " + std::to_string(i));
    const auto comma = text.find(',', i);
    const auto close = text.find(')', i);
    if (comma == std::string_view::npos || close == std::string_view::npos || comma > close) {
      throw ParseError("malformed vertex in chain text");
    }
    Rational x = parse_rational(text.substr(i + 1, comma - i - 1));
    Rational y = parse_rational(text.substr(comma + 1, close - comma - 1));
    c.vertices.emplace_back(Scalar(std::move(x)), Scalar(std::move(y)));
    i = close + 1;
  }
  if (c.vertices.size() < 2) throw ParseError("chain text needs at least two vertices");
  return c;
}

// ---------------------------------------------------------------------------
// Catalog

struct CatalogEntry {
  std::string id;
  long n;
  ChainKind kind;
  std::string text;
};

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"fig3-p1", 1, ChainKind::path, "(0,0)-(1,0)"},
      {"fig3-p2", 2, ChainKind::path, "(0,1)-(0,0)-(1,0)-(1,1)"},
      {"fig3-p3", 3, ChainKind::path, "(0,0)-(2,2)-(-1,2)-(2,-1)-(2,1)"},
      {"fig3-p4", 4, ChainKind::path, "(0,2)-(2,0)-(-2,0)-(3,5/2)-(3,0)-(0,3)-(3,3)"},
      {"thm22-c2", 2, ChainKind::cycle, "(0,0)-(0,2)-(2,0)-(0,0)"},
      {"fig3-c4", 4, ChainKind::cycle, "(-1,-1)-(3/2,4)-(4,-1)-(-1,4)-(3/2,-1)-(4,4)-(-1,-1)"},
      {"thm22-t4", 4, ChainKind::trail, "(3,3)-(0,3)-(0,0)-(4,0)-(1,3)-(1,0)-(3,2)"},
      {"thm22-t5", 5, ChainKind::trail, "(4,4)-(4,0)-(0,0)-(0,8)-(4,0)-(-1,5)-(7,1)-(0,1)-(3,4)"},
      {"lemma22-f5", 5, ChainKind::circuit, "(4,0)-(-1,0)-(11/3,7/3)-(1/2,11/2)-(4,-5)-(4,5)-(0,1)-(0,4)-(4,0)"},
      {"sec3-t2", 2, ChainKind::trail, "(0,1)-(0,0)-(1,0)-(1,1)"},
      {"sec3-t3", 3, ChainKind::trail, "(2,2)-(0,0)-(0,3)-(3,0)-(1,0)"},
      {"sec3-t4", 4, ChainKind::trail, "(1,3)-(3,1)-(0,1)-(3,4)-(3,0)-(0,0)-(0,3)"},
      {"sec3-t4-c1", 4, ChainKind::trail, "(1,3)-(3,1)-(0,1)-(3,4)-(3,0)-(0,0)-(0,4)"},
      {"sec3-t5", 5, ChainKind::trail, "(2,3)-(4,3)-(1,0)-(1,3)-(4,0)-(0,0)-(0,4)-(4,4)-(4,1)"},
      {"def13-trail", 3, ChainKind::trail, "(0,-1)-(0,3)-(3,0)-(0,0)-(2,2)"},
      {"def13-path", 3, ChainKind::path, "(0,3)-(0,0)-(3,0)-(0,3)-(3,3)-(1/7,1/7)"},
  };
  return entries;
}

inline std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& e : catalog()) ids.push_back(e.id);
  return ids;
}

inline PolygonalChain explicit_chain(std::string_view id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return parse_chain_text(e.n, e.text, e.kind);
  }
  throw DomainError("unknown catalog id: " + std::string(id));
}

// ---------------------------------------------------------------------------
// Certification helper

/// Returns c unchanged if it classifies as `kind` with h edges; otherwise throws.
inline PolygonalChain certified(PolygonalChain c, ChainKind kind, long h, const std::string& what) {
  const Classification cl = classify(c);
  if (!cl.satisfies(kind)) {
    std::string why;
    for (const auto& r : cl.failure_reasons) why += "; " + r;
    throw ConstructionFailure(what + " is not a covering " + std::string(to_string(kind)) + why);
  }
  if (static_cast<long>(c.edge_count()) != h) {
    throw ConstructionFailure(what + " has " + std::to_string(c.edge_count()) + " edges, expected " +
                              std::to_string(h));
  }
  c.kind = kind;
  return c;
}

namespace detail {

inline Point pt(long x, long y) { return {Scalar(x), Scalar(y)}; }

inline bool certifies(const PolygonalChain& c, ChainKind kind) {
  try {
    return classify(c).satisfies(kind);
  } catch (const InvalidChainError&) {
    return false;
  }
}

/// Moves the last vertex along the last edge's carrier until it meets `r`
/// strictly beyond the current end.
inline std::optional<std::vector<Point>> extend_last_edge(std::vector<Point> vs, const Line& r) {
  const Line last(vs[vs.size() - 2], vs.back());
  auto t = intersection_parameter(last, r);
  if (!t || *t <= Scalar(1)) return std::nullopt;
  vs.back() = last.p() + *t * last.direction();
  return vs;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Triangular spirals and the bridge edge

enum class SpiralKind { bottom, top };

/// Inward triangular spiral covering the lower (bottom) or upper (top)
/// half of G_n^2 except one interior node.
inline PolygonalChain triangular_spiral(long n, SpiralKind kind) {
  if (n < 4) throw DomainError("triangular spirals need n >= 4");
  PolygonalChain c{n, {}, ChainKind::unknown};
  const std::size_t count = kind == SpiralKind::bottom ? static_cast<std::size_t>(n - 1) : static_cast<std::size_t>(n);
  c.vertices.push_back(kind == SpiralKind::bottom ? detail::pt(0, 0) : detail::pt(n - 1, n - 1));
  for (long t = 0; c.vertices.size() < count; ++t) {
    std::array<Point, 3> step = kind == SpiralKind::bottom
                                    ? std::array<Point, 3>{detail::pt(n - 2 - 2 * t, t), detail::pt(t, n - 2 - 2 * t),
                                                           detail::pt(t, t + 1)}
                                    : std::array<Point, 3>{detail::pt(2 * t, n - 1 - t), detail::pt(n - 1 - t, 2 * t),
                                                           detail::pt(n - 1 - t, n - 2 - t)};
    for (auto& p : step) {
      if (c.vertices.size() < count) c.vertices.push_back(std::move(p));
    }
  }
  return c;
}

/// The interior nodes missed by the bottom and top spirals.
inline std::pair<GridNode, GridNode> missed_points(long n) {
  if (n < 4) throw DomainError("missed points need n >= 4");
  const GridNode p1{(n - 2) / 3, n / 3};
  const long j = n / 3;
  GridNode p2;
  switch (n % 3) {
    case 1: p2 = {2 * j, 2 * j}; break;
    case 2: p2 = {2 * j + 1, 2 * j}; break;
    default: p2 = {2 * j, 2 * j - 1}; break;
  }
  return {p1, p2};
}

enum class SpiralEnd { first, last };

inline std::string_view to_string(SpiralEnd e) { return e == SpiralEnd::first ? "first" : "last"; }

/// Which terminal edge of each spiral is extended onto the bridge line.
struct BridgeConfig {
  SpiralEnd bottom_end;
  SpiralEnd top_end;
  friend bool operator==(const BridgeConfig&, const BridgeConfig&) = default;
};

inline const std::array<BridgeConfig, 4>& bridge_configs() {
  static const std::array<BridgeConfig, 4> order = {{{SpiralEnd::first, SpiralEnd::last},
                                                     {SpiralEnd::last, SpiralEnd::first},
                                                     {SpiralEnd::first, SpiralEnd::first},
                                                     {SpiralEnd::last, SpiralEnd::last}}};
  return order;
}

struct BridgeData {
  GridNode p1;
  GridNode p2;
  Line line_r{detail::pt(0, 0), detail::pt(1, 0)};
  Point junction_b;
  Point junction_u;
  BridgeConfig config{SpiralEnd::first, SpiralEnd::first};
};

struct Assembly {
  PolygonalChain chain;
  BridgeData bridge;
};

/// Bottom spiral, one edge on the line through P1 and P2, top spiral.
/// Returns nothing if this configuration does not certify as a path.
inline std::optional<Assembly> assemble_with(long n, BridgeConfig cfg) {
  if (n < 4 || n % 3 == 0) throw DomainError("bridge assembly needs n >= 4 and n not divisible by 3");
  auto [p1, p2] = missed_points(n);
  const Line r(p1.point(), p2.point());

  std::vector<Point> b = triangular_spiral(n, SpiralKind::bottom).vertices;
  if (cfg.bottom_end == SpiralEnd::first) std::reverse(b.begin(), b.end());
  auto be = detail::extend_last_edge(std::move(b), r);

  // Top spiral walked backwards so its chosen terminal edge comes last.
  std::vector<Point> u = triangular_spiral(n, SpiralKind::top).vertices;
  if (cfg.top_end == SpiralEnd::first) std::reverse(u.begin(), u.end());
  auto ue = detail::extend_last_edge(std::move(u), r);
  if (!be || !ue) return std::nullopt;

  Assembly a;
  a.chain.n = n;
  a.chain.vertices = *be;
  a.chain.vertices.insert(a.chain.vertices.end(), ue->rbegin(), ue->rend());
  a.bridge = {p1, p2, r, be->back(), ue->back(), cfg};
  if (!detail::certifies(a.chain, ChainKind::path)) return std::nullopt;
  a.chain.kind = ChainKind::path;
  return a;
}

/// All configurations that certify, in preference order.
inline std::vector<Assembly> bridge_assemblies(long n) {
  std::vector<Assembly> out;
  for (const auto& cfg : bridge_configs()) {
    if (auto a = assemble_with(n, cfg)) out.push_back(std::move(*a));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Square-spiral growth: G_n -> G_{n+1}

struct GrowthStep {
  bool reversed = false;  // grown from the first vertex instead of the last
  long corner_x = 0;      // new corner before translation, in {-1, n}
  long corner_y = 0;
  bool column_first = true;
  PolygonalChain chain;
};

/// Every way of lengthening a terminal edge to a new outer column (or row)
/// and sweeping that column and the new row with two more edges. Results
/// are translated back into G_{n+1}^2 and are not yet certified.
inline std::vector<GrowthStep> spiral_growth_candidates(const PolygonalChain& c, bool allow_reverse) {
  std::vector<GrowthStep> out;
  const long n = c.n;
  if (c.vertices.size() < 2) return out;
  for (bool rev : {false, true}) {
    if (rev && !allow_reverse) continue;
    std::vector<Point> ch = c.vertices;
    if (rev) std::reverse(ch.begin(), ch.end());
    const Line last(ch[ch.size() - 2], ch.back());
    for (long cx : {n, -1L}) {
      for (long cy : {n, -1L}) {
        const long lo_x = std::min(0L, cx), hi_x = std::max(n - 1, cx);
        const long lo_y = std::min(0L, cy), hi_y = std::max(n - 1, cy);
        for (bool col : {true, false}) {
          const Line first = col ? Line(detail::pt(cx, 0), detail::pt(cx, 1)) : Line(detail::pt(0, cy), detail::pt(1, cy));
          auto t = intersection_parameter(last, first);
          if (!t || *t < Scalar(1)) continue;
          const Point j = last.p() + *t * last.direction();
          Point end;
          if (col) {
            // j must lie at or beyond the far end of the new column.
            if (cy == hi_y ? j.y > Scalar(lo_y) : j.y < Scalar(hi_y)) continue;
            end = detail::pt(cx == hi_x ? lo_x : hi_x, cy);
          } else {
            if (cx == hi_x ? j.x > Scalar(lo_x) : j.x < Scalar(hi_x)) continue;
            end = detail::pt(cx, cy == hi_y ? lo_y : hi_y);
          }
          std::vector<Point> vs = ch;
          if (*t > Scalar(1)) vs.back() = j;
          vs.push_back(detail::pt(cx, cy));
          vs.push_back(end);
          PolygonalChain g{n + 1, std::move(vs), ChainKind::unknown};
          g = translated(std::move(g), Scalar(-lo_x), Scalar(-lo_y));
          out.push_back({rev, cx, cy, col, std::move(g)});
        }
      }
    }
  }
  return out;
}

/// First growth step whose result certifies as `kind`.
inline std::optional<PolygonalChain> grow_once(const PolygonalChain& c, ChainKind kind, bool allow_reverse) {
  for (auto& step : spiral_growth_candidates(c, allow_reverse)) {
    if (detail::certifies(step.chain, kind)) {
      step.chain.kind = kind;
      return std::move(step.chain);
    }
  }
  return std::nullopt;
}

namespace detail {

/// Trails grown one square-spiral step at a time from a fixed seed,
/// remembered so that a sweep over n does not regrow from scratch.
class GrowthSequence {
 public:
  explicit GrowthSequence(PolygonalChain seed) { chains_.push_back(std::move(seed)); }

  PolygonalChain at(long n) {
    std::lock_guard<std::mutex> lock(mu_);
    const long first = chains_.front().n;
    if (n < first) throw DomainError("growth sequence starts at n=" + std::to_string(first));
    while (chains_.back().n < n) {
      auto g = grow_once(chains_.back(), ChainKind::trail, false);
      if (!g) throw ConstructionFailure("square-spiral growth stalled at n=" + std::to_string(chains_.back().n));
      chains_.push_back(std::move(*g));
    }
    return chains_[static_cast<std::size_t>(n - first)];
  }

 private:
  std::mutex mu_;
  std::vector<PolygonalChain> chains_;
};

}  // namespace detail

/// Extends a certified minimal path of G_n (n not divisible by 3) to G_{n+1}.
inline PolygonalChain mixed_spiral_extend(const PolygonalChain& c) {
  if (c.n % 3 == 0) throw DomainError("mixed spiral extension expects n not divisible by 3, got " + std::to_string(c.n));
  if (!detail::certifies(c, ChainKind::path)) throw DomainError("mixed spiral extension expects a covering path");
  auto g = grow_once(c, ChainKind::path, true);
  if (!g) throw ConstructionFailure("no two-edge extension of the n=" + std::to_string(c.n) + " path certifies");
  return certified(std::move(*g), ChainKind::path, min_link_length(c.n + 1), "extended path");
}

/// Minimal covering path for n >= 4 from the spiral-and-bridge construction.
inline PolygonalChain assemble_path(long n) {
  if (n < 4) throw DomainError("assemble_path needs n >= 4");
  if (n % 3 != 0) {
    auto all = bridge_assemblies(n);
    if (all.empty()) throw ConstructionFailure("no bridge configuration certifies for n=" + std::to_string(n));
    return certified(std::move(all.front().chain), ChainKind::path, min_link_length(n), "assembled path");
  }
  for (auto& a : bridge_assemblies(n - 1)) {
    try {
      return mixed_spiral_extend(a.chain);
    } catch (const ConstructionFailure&) {
      continue;
    }
  }
  throw ConstructionFailure("no extension of an n=" + std::to_string(n - 1) + " path certifies");
}

/// Minimal covering path for any n >= 1.
inline PolygonalChain covering_path(long n) {
  if (n < 1) throw DomainError("grid size must be positive");
  if (n <= 3) {
    static const std::array<const char*, 3> ids = {"fig3-p1", "fig3-p2", "fig3-p3"};
    return certified(explicit_chain(ids[static_cast<std::size_t>(n - 1)]), ChainKind::path, min_link_length(n),
                     "catalog path");
  }
  return assemble_path(n);
}

// ---------------------------------------------------------------------------
// Circuits

/// Extends the first and last edges until they meet; the meeting point
/// replaces both terminal vertices. Both edges may only grow.
inline std::optional<PolygonalChain> close_by_extension(const PolygonalChain& c) {
  const auto& v = c.vertices;
  if (v.size() < 3) return std::nullopt;
  const Line head(v[1], v[0]);
  const Line tail(v[v.size() - 2], v.back());
  auto t1 = intersection_parameter(head, tail);
  auto t2 = intersection_parameter(tail, head);
  if (!t1 || !t2 || *t1 < Scalar(1) || *t2 < Scalar(1)) return std::nullopt;
  const Point x = head.p() + *t1 * head.direction();
  PolygonalChain out{c.n, {}, ChainKind::unknown};
  out.vertices.push_back(x);
  out.vertices.insert(out.vertices.end(), v.begin() + 1, v.end() - 1);
  out.vertices.push_back(x);
  return out;
}

/// Closed minimal covering trail. n = 1 and n = 3 have none.
inline PolygonalChain covering_circuit(long n) {
  if (n < 1) throw DomainError("grid size must be positive");
  if (n == 1 || n == 3) {
    throw ImpossibleRequest("no covering circuit of G_" + std::to_string(n) + " exists with " +
                            std::to_string(min_link_length(n)) + " edges (minimal circuits need n = 2 or n >= 4)");
  }
  const long h = min_link_length(n);
  if (n == 2) return certified(explicit_chain("thm22-c2"), ChainKind::circuit, h, "circuit");
  if (n == 5) return certified(explicit_chain("lemma22-f5"), ChainKind::circuit, h, "circuit");
  if (n == 4) {
    auto c = close_by_extension(explicit_chain("thm22-t4"));
    if (!c) throw ConstructionFailure("T4 does not close");
    return certified(std::move(*c), ChainKind::circuit, h, "circuit");
  }
  // Grow from the end of T4 (even n) or T5 (odd n) that the closing edge does not use.
  static detail::GrowthSequence even(reversed(explicit_chain("thm22-t4")));
  static detail::GrowthSequence odd(reversed(explicit_chain("thm22-t5")));
  auto c = close_by_extension((n % 2 == 0 ? even : odd).at(n));
  if (!c) throw ConstructionFailure("grown trail does not close for n=" + std::to_string(n));
  return certified(std::move(*c), ChainKind::circuit, h, "circuit");
}

// ---------------------------------------------------------------------------
// Even cycles

namespace detail {

/// Row 0 and row n-1 plus diagonals bouncing in [-1/2, n-1/2] x [1/2, n-3/2];
/// valid for n = 2 mod 4.
inline PolygonalChain two_row_cycle(long n) {
  const Rational half(1, 2);
  const Rational left = -half, right = Rational(n) - half;
  const Rational bottom = half, top = Rational(n - 1) - half;
  // Follows a 45-degree ray until it reaches a corner; returns the bounce points.
  auto run = [&](Rational x, Rational y, int dx, int dy, std::vector<Point>& out) {
    while (true) {
      Rational tx = ((dx > 0 ? right : left) - x) / dx;
      Rational ty = ((dy > 0 ? top : bottom) - y) / dy;
      Rational t = tx < ty ? tx : ty;
      x += t * dx;
      y += t * dy;
      if (tx == ty) return std::pair<int, int>{dx, dy};
      out.emplace_back(Scalar(x), Scalar(y));
      if (tx < ty) {
        dx = -dx;
      } else {
        dy = -dy;
      }
    }
  };
  PolygonalChain c{n, {}, ChainKind::unknown};
  c.vertices.push_back(pt(-1, 0));
  c.vertices.push_back(pt(n, 0));
  if (run(right, bottom, -1, 1, c.vertices) != std::pair<int, int>{1, 1}) {
    throw ConstructionFailure("first diagonal run ends in the wrong corner");
  }
  c.vertices.push_back(pt(n, n - 1));
  c.vertices.push_back(pt(-1, n - 1));
  if (run(left, top, 1, -1, c.vertices) != std::pair<int, int>{-1, -1}) {
    throw ConstructionFailure("second diagonal run ends in the wrong corner");
  }
  c.vertices.push_back(pt(-1, 0));
  return c;
}

/// Rows 0, 1, n-2, n-1 plus diagonals bouncing off the top and bottom of
/// [-1/2, n-1/2] x [3/2, n-5/2]. At the side walls the ray reflects, except
/// at heights 3/2 and 7/2 from either horizontal wall, where it leaves the
/// box along a row and re-enters on the opposite side. Valid for n = 0 mod 4.
inline PolygonalChain four_row_cycle(long n) {
  const long m = (n - 4) / 2;  // wall heights are 3/2 + 2k, k = 0..m
  const Rational half(1, 2);
  const Rational left = -half, right = Rational(n) - half;
  const Rational bottom(3, 2), top = Rational(n - 2) - half;

  // An end of a chord on a side wall: side (0 left, 1 right), kind (0 = slope +1, 1 = slope -1), level k.
  using End = std::array<long, 3>;
  struct RowLink {
    long row;
    End other;
  };
  std::map<End, RowLink> rows;
  auto link = [&](End a, End b, long row) {
    rows[a] = {row, b};
    rows[b] = {row, a};
  };
  link({0, 0, 0}, {1, 1, 1}, 1);
  link({0, 0, 1}, {1, 1, 0}, 0);
  link({0, 1, m}, {1, 0, 1}, n - 2);
  link({0, 1, 1}, {1, 0, m}, n - 1);

  auto wall_point = [&](const End& e) {
    return std::pair<Rational, Rational>{e[0] == 0 ? left : right, bottom + Rational(2 * e[2])};
  };
  // Direction pointing into the box from an end.
  auto inward = [](const End& e) {
    const int dx = e[0] == 0 ? 1 : -1;
    const int dy = (e[1] == 0) == (dx > 0) ? 1 : -1;
    return std::pair<int, int>{dx, dy};
  };
  auto row_meet = [](const Rational& x, const Rational& y, int dx, int dy, long row) {
    // Point on the ray's carrier line at height row.
    return Point(Scalar(x + (Rational(row) - y) * dx * dy), Scalar(row));
  };

  std::vector<Point> vs;
  const End start{0, 0, 0};
  End e = start;
  for (std::size_t guard = 0; guard < static_cast<std::size_t>(4 * n + 8); ++guard) {
    auto [x, y] = wall_point(e);
    auto [dx, dy] = inward(e);
    // Travel to the opposite side wall, reflecting at top and bottom.
    while (true) {
      Rational tx = ((dx > 0 ? right : left) - x) / dx;
      Rational ty = ((dy > 0 ? top : bottom) - y) / dy;
      Rational t = tx <= ty ? tx : ty;
      x += t * dx;
      y += t * dy;
      if (tx <= ty) break;
      vs.emplace_back(Scalar(x), Scalar(y));
      dy = -dy;
    }
    Rational level = (y - bottom) / 2;
    if (!is_integer(level)) throw ConstructionFailure("diagonal meets a side wall off level");
    const End f{dx > 0 ? 1L : 0L, (dx > 0) == (dy > 0) ? 0L : 1L, level.get_num().get_si()};
    auto it = rows.find(f);
    if (it == rows.end()) {
      vs.emplace_back(Scalar(x), Scalar(y));
      e = {f[0], 1 - f[1], f[2]};
      continue;
    }
    const auto& [row, g] = it->second;
    vs.push_back(row_meet(x, y, dx, dy, row));
    auto [gx, gy] = wall_point(g);
    auto [gdx, gdy] = inward(g);
    vs.push_back(row_meet(gx, gy, gdx, gdy, row));
    e = g;
    if (e == start) {
      PolygonalChain c{n, {}, ChainKind::unknown};
      c.vertices.push_back(vs.back());
      c.vertices.insert(c.vertices.end(), vs.begin(), vs.end());
      return c;
    }
  }
  throw ConstructionFailure("four-row cycle did not close");
}

}  // namespace detail

/// Minimal covering cycle for even n.
inline PolygonalChain covering_cycle_even(long n) {
  if (n < 2 || n % 2 != 0) throw DomainError("covering_cycle_even needs an even n >= 2, got " + std::to_string(n));
  const long h = min_link_length(n);
  if (n == 2) return certified(explicit_chain("thm22-c2"), ChainKind::cycle, h, "cycle");
  if (n == 4) return certified(explicit_chain("fig3-c4"), ChainKind::cycle, h, "cycle");
  PolygonalChain c = n % 4 == 2 ? detail::two_row_cycle(n) : detail::four_row_cycle(n);
  return certified(std::move(c), ChainKind::cycle, h, "cycle");
}

// ---------------------------------------------------------------------------
// Epsilon path

/// Open covering path for n = 5 whose endpoints are eps*sqrt(2 - sqrt 2) apart.
inline PolygonalChain epsilon_path(const Rational& eps) {
  if (sgn(eps) <= 0) throw DomainError("epsilon must be positive");
  PolygonalChain c = parse_chain_text(5, "(0,0)-(-1,0)-(11/3,7/3)-(1/2,11/2)-(4,-5)-(4,5)-(0,1)-(0,4)");
  c.vertices.front() = Point(Scalar(Rational(4) - eps), Scalar(0));
  const Rational k = eps / 2;  // eps / sqrt(2) = (eps/2) * sqrt(2)
  c.vertices.emplace_back(Scalar(Rational(4), -k), Scalar(Rational(0), k));
  if (!detail::certifies(c, ChainKind::path)) {
    throw DomainError("epsilon " + eps.get_str() + " is too large: the chain no longer covers G_5 as a path");
  }
  c.kind = ChainKind::path;
  return c;
}

/// Squared distance between the first and last vertex.
inline Scalar endpoint_gap_squared(const PolygonalChain& c) {
  const Point d = c.vertices.back() - c.vertices.front();
  return dot(d, d);
}

// ---------------------------------------------------------------------------
// Length-optimised trails

inline PolygonalChain distance_optimal_trail(long n) {
  if (n < 2) throw DomainError("distance-optimal trails need n >= 2");
  const long h = min_link_length(n);
  switch (n) {
    case 2: return certified(explicit_chain("sec3-t2"), ChainKind::trail, h, "trail");
    case 3: return certified(explicit_chain("sec3-t3"), ChainKind::trail, h, "trail");
    case 4: return certified(explicit_chain("sec3-t4"), ChainKind::trail, h, "trail");
    case 5: return certified(explicit_chain("sec3-t5"), ChainKind::trail, h, "trail");
    default: break;
  }
  static detail::GrowthSequence grown(explicit_chain("sec3-t4-c1"));
  return certified(grown.at(n), ChainKind::trail, h, "trail");
}

}  // namespace gridlink
