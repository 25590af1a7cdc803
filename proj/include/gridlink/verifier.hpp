#pragma once

// Classification of chains as covering trails, paths, circuits and cycles,
// plus the closed-form link and length bounds.

#include <string>
#include <vector>

#include "gridlink/chain.hpp"

namespace gridlink {

struct Classification {
  bool is_covering_trail = false;
  bool is_covering_path = false;
  bool is_covering_circuit = false;
  bool is_covering_cycle = false;
  std::vector<std::string> failure_reasons;
  VisitReport report;

  /// True iff the chain has every property its kind promises.
  bool satisfies(ChainKind k) const {
    switch (k) {
      case ChainKind::trail: return is_covering_trail;
      case ChainKind::path: return is_covering_path;
      case ChainKind::circuit: return is_covering_circuit;
      case ChainKind::cycle: return is_covering_cycle;
      case ChainKind::unknown: break;
    }
    return true;
  }

  /// Strongest kind that holds (cycle > circuit, path > trail).
  ChainKind strongest() const {
    if (is_covering_cycle) return ChainKind::cycle;
    if (is_covering_circuit) return ChainKind::circuit;
    if (is_covering_path) return ChainKind::path;
    if (is_covering_trail) return ChainKind::trail;
    return ChainKind::unknown;
  }
};

/// Visits at the shared start/end vertex of a closed chain are merged by
/// visit_counts, so a cycle needs every count to be 1: a start node that is
/// touched again mid-way (as in F_5) is a second visit.
inline Classification classify(const PolygonalChain& c) {
  Classification out;
  out.report = visit_counts(c);
  const VisitReport& r = out.report;
  out.is_covering_trail = r.uncovered.empty();
  if (!out.is_covering_trail) {
    std::string msg = "uncovered nodes:";
    for (const auto& g : r.uncovered) msg += " " + g.str();
    out.failure_reasons.push_back(std::move(msg));
  }
  const auto again = r.revisited();
  out.is_covering_path = out.is_covering_trail && again.empty();
  if (!again.empty()) {
    std::string msg = "revisited nodes:";
    for (const auto& [g, k] : again) msg += " " + g.str() + "x" + std::to_string(k);
    out.failure_reasons.push_back(std::move(msg));
  }
  out.is_covering_circuit = out.is_covering_trail && r.is_closed;
  if (!r.is_closed) out.failure_reasons.emplace_back("chain is open");
  out.is_covering_cycle = out.is_covering_circuit && out.is_covering_path;
  return out;
}

/// Fewest edges of any covering trail of G_n^2.
inline long min_link_length(long n) {
  if (n < 1) throw DomainError("grid size must be positive, got " + std::to_string(n));
  if (n == 1) return 1;
  if (n == 2) return 3;
  return 2 * (n - 1);
}

/// Best known total length of a minimum-link covering trail.
inline RadicalSum length_upper_bound(long n) {
  if (n < 2) throw DomainError("length bound needs n >= 2, got " + std::to_string(n));
  if (n == 2) return RadicalSum(3);
  if (n == 3) return RadicalSum(5) + RadicalSum::term(Rational(5), Integer(2));
  if (n == 5) return RadicalSum(20) + RadicalSum::term(Rational(6), Integer(2));
  return RadicalSum(n * n - 3) + RadicalSum::term(Rational(5), Integer(2));
}

/// n^2 - 1, the length every minimal covering trail exceeds (n >= 3) or meets (n = 2).
inline RadicalSum length_lower_bound(long n) {
  if (n < 2) throw DomainError("length bound needs n >= 2, got " + std::to_string(n));
  return RadicalSum(n * n - 1);
}

struct BoundReport {
  long n = 0;
  RadicalSum length;
  RadicalSum lower;
  RadicalSum upper;
  bool lower_ok = false;      // n^2 - 1 < l, or <= for n = 2
  bool within_upper = false;  // l <= upper
  double float_length = 0.0;
};

/// Exact length bounds for a minimum-link covering trail. Throws
/// NotMinimalError when the chain is not one.
inline BoundReport check_bounds(const PolygonalChain& c) {
  const Classification cl = classify(c);
  if (!cl.is_covering_trail) throw NotMinimalError("chain is not a covering trail");
  const long h = static_cast<long>(c.edge_count());
  if (h != min_link_length(c.n)) {
    throw NotMinimalError("chain has " + std::to_string(h) + " edges, minimum is " +
                          std::to_string(min_link_length(c.n)));
  }
  BoundReport b;
  b.n = c.n;
  b.length = total_length(c);
  b.lower = length_lower_bound(c.n);
  b.upper = length_upper_bound(c.n);
  b.lower_ok = c.n == 2 ? b.lower <= b.length : b.lower < b.length;
  b.within_upper = b.length <= b.upper;
  b.float_length = b.length.to_double();
  return b;
}

}  // namespace gridlink
