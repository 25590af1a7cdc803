#pragma once

// Polygonal chains over G_n^2 and their visit semantics.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridlink/geometry.hpp"

namespace gridlink {

enum class ChainKind { unknown, trail, path, circuit, cycle };

inline std::string_view to_string(ChainKind k) {
  switch (k) {
    case ChainKind::trail: return "trail";
    case ChainKind::path: return "path";
    case ChainKind::circuit: return "circuit";
    case ChainKind::cycle: return "cycle";
    case ChainKind::unknown: break;
  }
  return "unknown";
}

inline ChainKind parse_chain_kind(std::string_view s) {
  if (s == "trail") return ChainKind::trail;
  if (s == "path") return ChainKind::path;
  if (s == "circuit") return ChainKind::circuit;
  if (s == "cycle") return ChainKind::cycle;
  if (s == "unknown") return ChainKind::unknown;
  throw ParseError("unknown chain kind: " + std::string(s));
}

/// Ordered vertex list on the grid G_n^2. Closed chains repeat the first
/// vertex at the end.
struct PolygonalChain {
  long n = 1;
  std::vector<Point> vertices;
  ChainKind kind = ChainKind::unknown;

  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  bool is_closed() const { return vertices.size() >= 2 && vertices.front() == vertices.back(); }
  Segment edge(std::size_t i) const { return Segment(vertices.at(i), vertices.at(i + 1)); }

  friend bool operator==(const PolygonalChain&, const PolygonalChain&) = default;
};

/// Convenience for literal chains: {{0,0},{2,2},...} with integer coordinates.
inline PolygonalChain make_chain(long n, std::initializer_list<std::pair<long, long>> pts,
                                 ChainKind kind = ChainKind::unknown) {
  PolygonalChain c{n, {}, kind};
  for (auto [x, y] : pts) c.vertices.emplace_back(Scalar(x), Scalar(y));
  return c;
}

inline std::string describe(const PolygonalChain& c) {
  std::string out;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) out += "-";
    out += c.vertices[i].str();
  }
  return out;
}

inline PolygonalChain reversed(PolygonalChain c) {
  std::reverse(c.vertices.begin(), c.vertices.end());
  return c;
}

/// Same chain with every vertex shifted by (dx, dy); the grid size is unchanged.
inline PolygonalChain translated(PolygonalChain c, const Scalar& dx, const Scalar& dy) {
  for (auto& v : c.vertices) {
    v.x += dx;
    v.y += dy;
  }
  return c;
}

/// One of the 8 symmetries of the square [0, n-1]^2 (index 0..7).
inline Point dihedral(const Point& p, int which, long n) {
  const Scalar m(n - 1);
  Point q = p;
  if (which & 4) q = Point(q.y, q.x);
  if (which & 1) q.x = m - q.x;
  if (which & 2) q.y = m - q.y;
  return q;
}

inline PolygonalChain transformed(PolygonalChain c, int which) {
  for (auto& v : c.vertices) v = dihedral(v, which, c.n);
  return c;
}

/// Throws InvalidChainError on the first violated structural rule:
/// fewer than two vertices, repeated consecutive vertices, collinear
/// consecutive edges (including the closing pair of a closed chain), or an
/// undirected edge that occurs twice.
inline void check_structure(const PolygonalChain& c) {
  const std::size_t h = c.edge_count();
  if (c.n < 1) throw DomainError("grid size must be positive");
  if (c.vertices.size() < 2) throw InvalidChainError("chain needs at least two vertices", 0, 0);
  for (std::size_t i = 0; i < h; ++i) {
    if (c.vertices[i] == c.vertices[i + 1]) {
      throw InvalidChainError("edge " + std::to_string(i) + " is degenerate at " + c.vertices[i].str(), i, i);
    }
  }
  auto collinear_at = [&](std::size_t i, std::size_t j) {
    const Point u = c.vertices[i + 1] - c.vertices[i];
    const Point v = c.vertices[j + 1] - c.vertices[j];
    return cross(u, v).is_zero();
  };
  for (std::size_t i = 0; i + 1 < h; ++i) {
    if (collinear_at(i, i + 1)) {
      throw InvalidChainError("edges " + std::to_string(i) + " and " + std::to_string(i + 1) + " are collinear", i,
                              i + 1);
    }
  }
  if (c.is_closed() && h >= 2 && collinear_at(h - 1, 0)) {
    throw InvalidChainError("closing edges " + std::to_string(h - 1) + " and 0 are collinear", h - 1, 0);
  }
  std::map<std::pair<Point, Point>, std::size_t> seen;
  for (std::size_t i = 0; i < h; ++i) {
    auto key = std::minmax(c.vertices[i], c.vertices[i + 1]);
    auto [it, inserted] = seen.emplace(std::pair<Point, Point>(key.first, key.second), i);
    if (!inserted) {
      throw InvalidChainError("edges " + std::to_string(it->second) + " and " + std::to_string(i) + " coincide",
                              it->second, i);
    }
  }
}

struct VisitReport {
  std::map<GridNode, int> visit_counts;  // covered nodes only
  std::vector<GridNode> uncovered;
  bool is_closed = false;
  std::size_t link_length = 0;
  std::optional<RadicalSum> total_length;  // empty when an edge length is not expressible

  std::size_t covered_count() const { return visit_counts.size(); }
  std::map<GridNode, int> revisited() const {
    std::map<GridNode, int> out;
    for (const auto& [g, k] : visit_counts) {
      if (k > 1) out.emplace(g, k);
    }
    return out;
  }
  int count(const GridNode& g) const {
    auto it = visit_counts.find(g);
    return it == visit_counts.end() ? 0 : it->second;
  }
};

inline std::size_t link_length(const PolygonalChain& c) { return c.edge_count(); }

inline RadicalSum total_length(const PolygonalChain& c) {
  RadicalSum sum;
  for (std::size_t i = 0; i < c.edge_count(); ++i) sum += segment_length(c.edge(i));
  return sum;
}

/// Counts visits: a visit of node g is a connected component of the set of
/// curve parameters at which the chain is at g. A shared vertex of two
/// consecutive edges is one visit; on a closed chain the start and end are
/// the same visit.
inline VisitReport visit_counts(const PolygonalChain& c) {
  check_structure(c);
  VisitReport rep;
  rep.is_closed = c.is_closed();
  rep.link_length = c.edge_count();
  const std::size_t h = c.edge_count();

  // Visit instants as (edge index, parameter), normalised so an edge end
  // coincides with the start of the following edge.
  std::map<GridNode, std::set<std::pair<std::size_t, Scalar>>> instants;
  for (std::size_t i = 0; i < h; ++i) {
    for (auto& hit : lattice_hits(c.edge(i), c.n)) {
      std::size_t edge = i;
      Scalar t = std::move(hit.t);
      if (t == Scalar(1)) {
        edge = i + 1;
        t = Scalar(0);
        if (edge == h && rep.is_closed) edge = 0;
      }
      instants[hit.node].emplace(edge, std::move(t));
    }
  }
  for (auto& [g, s] : instants) rep.visit_counts.emplace(g, static_cast<int>(s.size()));
  for (long x = 0; x < c.n; ++x) {
    for (long y = 0; y < c.n; ++y) {
      GridNode g{x, y};
      if (!rep.visit_counts.count(g)) rep.uncovered.push_back(g);
    }
  }
  try {
    rep.total_length = total_length(c);
  } catch (const UnsupportedRadicalError&) {
    rep.total_length.reset();
  }
  return rep;
}

}  // namespace gridlink
