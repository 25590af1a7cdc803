#pragma once

// Brute-force check of which grid nodes lie on the bridge line through
// P1(n) and P2(n).

#include <numeric>
#include <vector>

#include "gridlink/generators.hpp"

namespace gridlink {

enum class CollisionKind { pair, five };

struct CollisionProfile {
  long n = 0;
  std::vector<GridNode> hits;       // enumerated, sorted by x
  std::vector<GridNode> predicted;  // residue-class prediction, sorted by x
  CollisionKind expected_kind = CollisionKind::pair;

  bool matches() const { return hits == predicted; }
};

/// Every node of G_n^2 on the line through P1(n) and P2(n).
inline std::vector<GridNode> bridge_line_hits(long n) {
  auto [p1, p2] = missed_points(n);
  const long dx = p2.x - p1.x, dy = p2.y - p1.y;
  std::vector<GridNode> out;
  for (long x = 0; x < n; ++x) {
    // y = p1.y + dy (x - p1.x) / dx must be an integer in range.
    const long num = dy * (x - p1.x);
    if (num % dx != 0) continue;
    const long y = p1.y + num / dx;
    if (y >= 0 && y < n) out.push_back({x, y});
  }
  return out;
}

inline std::vector<GridNode> predicted_hits(long n) {
  if (n < 4) throw DomainError("collision analysis needs n >= 4");
  auto [p1, p2] = missed_points(n);
  if (n % 6 != 3) return {p1, p2};
  std::vector<GridNode> q;
  const long sx = (n + 3) / 6, sy = (n - 3) / 6;
  // Q_1 = P1 and Q_3 = P2.
  for (long t = 0; t <= 4; ++t) q.push_back({p1.x + sx * (t - 1), p1.y + sy * (t - 1)});
  return q;
}

inline CollisionProfile collision_profile(long n) {
  if (n < 4) throw DomainError("collision analysis needs n >= 4");
  CollisionProfile c;
  c.n = n;
  c.hits = bridge_line_hits(n);
  c.predicted = predicted_hits(n);
  c.expected_kind = n % 6 == 3 ? CollisionKind::five : CollisionKind::pair;
  return c;
}

/// Admissible (k, x_k) pairs: x-coordinates where the bridge line meets an
/// integer y, written through the divisibility condition on x + 1 or x + 2.
inline std::vector<std::pair<long, long>> divisibility_witness(long n) {
  if (n < 4 || n % 3 == 0) throw DomainError("divisibility witness needs n >= 4 and n not divisible by 3");
  const long j = n / 3;
  if (std::gcd(j + 1, j) != 1) throw ConstructionFailure("gcd(j+1, j) != 1");
  // Slope is j/(j+1) in both cases and gcd(j+1, j) = 1, so y is an integer iff
  // (j+1) divides x - x(P1): x = (j+1)k - 2 for n = 3j+1, x = (j+1)k - 1 for n = 3j+2.
  const long shift = n % 3 == 1 ? 2 : 1;
  std::vector<std::pair<long, long>> out;
  for (long k = 0; (j + 1) * k - shift < n; ++k) {
    const long x = (j + 1) * k - shift;
    if (x < 0) continue;
    out.emplace_back(k, x);
  }
  return out;
}

}  // namespace gridlink
