#pragma once

// Exhaustive search for covering trails in a finite candidate model:
// every edge lies on a line through two points of the padded lattice
// {-p..n-1+p}^2 that also contains a grid node. Non-existence answers are
// only claims about this model.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "gridlink/generators.hpp"

namespace gridlink {

/// Worker count: GRIDLINK_THREADS if set to a positive integer, else the hardware count.
inline unsigned default_thread_count() {
  if (const char* env = std::getenv("GRIDLINK_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1U : hw;
}

struct SearchOptions {
  long padding = 2;
  std::optional<std::uint64_t> seed;  // shuffles the line order; unset keeps canonical order
  unsigned threads = 0;               // 0: default_thread_count()
  double time_budget_seconds = 0.0;   // 0: unlimited
};

struct SearchResult {
  std::optional<PolygonalChain> chain;
  long max_edges = 0;
  std::uint64_t explored = 0;  // search-tree nodes visited
  bool complete = true;        // false if the time budget ran out
  std::string model;
};

namespace search_detail {

struct ILine {
  long a, b, c;  // a x + b y = c, gcd-normalised, first non-zero of (a, b) positive
  friend auto operator<=>(const ILine&, const ILine&) = default;
};

struct QPoint {
  long x, y, d;  // (x/d, y/d), d > 0
  friend bool operator==(const QPoint& p, const QPoint& q) { return p.x * q.d == q.x * p.d && p.y * q.d == q.y * p.d; }
};

inline ILine line_through(long x1, long y1, long x2, long y2) {
  long a = y2 - y1, b = x1 - x2;
  long g = std::gcd(a, b);
  a /= g;
  b /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
  }
  return {a, b, a * x1 + b * y1};
}

inline std::optional<QPoint> meet(const ILine& l, const ILine& m) {
  long det = l.a * m.b - m.a * l.b;
  if (det == 0) return std::nullopt;
  long x = l.c * m.b - m.c * l.b;
  long y = l.a * m.c - m.a * l.c;
  if (det < 0) {
    det = -det;
    x = -x;
    y = -y;
  }
  return QPoint{x, y, det};
}

/// Position along the line direction (b, -a), scaled by d.
inline long position(const ILine& l, const QPoint& p) { return l.b * p.x - l.a * p.y; }

struct Model {
  long n = 0;
  long padding = 0;
  std::vector<ILine> lines;
  std::vector<std::vector<int>> nodes;      // grid node indices on each line
  std::vector<std::vector<long>> node_pos;  // their positions (d = 1)
  std::vector<std::vector<QPoint>> ends;    // padded-lattice points on each line
  int max_cover = 0;
};

inline Model build_model(long n, long padding, std::optional<std::uint64_t> seed) {
  Model m;
  m.n = n;
  m.padding = padding;
  const long lo = -padding, hi = n - 1 + padding;
  std::vector<std::pair<long, long>> pts;
  for (long x = lo; x <= hi; ++x) {
    for (long y = lo; y <= hi; ++y) pts.emplace_back(x, y);
  }
  std::set<ILine> uniq;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      uniq.insert(line_through(pts[i].first, pts[i].second, pts[j].first, pts[j].second));
    }
  }
  for (const ILine& l : uniq) {
    std::vector<int> on;
    std::vector<long> pos;
    for (long x = 0; x < n; ++x) {
      for (long y = 0; y < n; ++y) {
        if (l.a * x + l.b * y == l.c) {
          on.push_back(static_cast<int>(x * n + y));
          pos.push_back(l.b * x - l.a * y);
        }
      }
    }
    if (on.empty()) continue;
    std::vector<QPoint> e;
    for (auto [x, y] : pts) {
      if (l.a * x + l.b * y == l.c) e.push_back({x, y, 1});
    }
    m.max_cover = std::max(m.max_cover, static_cast<int>(on.size()));
    m.lines.push_back(l);
    m.nodes.push_back(std::move(on));
    m.node_pos.push_back(std::move(pos));
    m.ends.push_back(std::move(e));
  }
  if (seed) {
    std::vector<std::size_t> order(m.lines.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(*seed);
    std::shuffle(order.begin(), order.end(), rng);
    Model s = m;
    for (std::size_t i = 0; i < order.size(); ++i) {
      s.lines[i] = m.lines[order[i]];
      s.nodes[i] = m.nodes[order[i]];
      s.node_pos[i] = m.node_pos[order[i]];
      s.ends[i] = m.ends[order[i]];
    }
    return s;
  }
  return m;
}

using Mask = std::uint64_t;  // n <= 4 keeps every grid in 16 bits

inline Mask line_mask(const Model& m, std::size_t li) {
  Mask k = 0;
  for (int g : m.nodes[li]) k |= Mask(1) << g;
  return k;
}

/// Grid nodes of line li between p and q (inclusive).
inline Mask segment_mask(const Model& m, std::size_t li, const QPoint& p, const QPoint& q) {
  const ILine& l = m.lines[li];
  long sp = position(l, p), sq = position(l, q);
  long dp = p.d, dq = q.d;
  Mask k = 0;
  for (std::size_t i = 0; i < m.nodes[li].size(); ++i) {
    const long s = m.node_pos[li][i];
    // sp/dp <= s <= sq/dq in either order
    const bool ge_p = s * dp >= sp, le_p = s * dp <= sp;
    const bool ge_q = s * dq >= sq, le_q = s * dq <= sq;
    if ((ge_p && le_q) || (ge_q && le_p)) k |= Mask(1) << m.nodes[li][i];
  }
  return k;
}

inline Point to_point(const QPoint& q) {
  return {Scalar(make_rational(q.x, q.d)), Scalar(make_rational(q.y, q.d))};
}

using Predicate = std::function<bool(const PolygonalChain&)>;

class Searcher {
 public:
  Searcher(const Model& m, long h, const Predicate& accept, std::atomic<std::size_t>& best,
           std::chrono::steady_clock::time_point deadline, bool timed)
      : m_(m), h_(h), accept_(accept), best_(best), deadline_(deadline), timed_(timed) {
    full_ = (Mask(1) << (m.n * m.n)) - 1;
    for (std::size_t i = 0; i < m.lines.size(); ++i) masks_.push_back(line_mask(m, i));
  }

  std::optional<PolygonalChain> run(std::size_t first) {
    first_ = first;
    lines_.assign(1, first);
    verts_.clear();
    return dfs(0);
  }

  std::uint64_t explored() const { return explored_; }
  bool timed_out() const { return timed_out_; }

 private:
  bool abort() {
    if (best_.load(std::memory_order_relaxed) < first_) return true;
    if (timed_ && (explored_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline_) timed_out_ = true;
    return timed_out_;
  }

  // mid: union of completed interior edges.
  std::optional<PolygonalChain> dfs(Mask mid) {
    ++explored_;
    if (abort()) return std::nullopt;
    const std::size_t k = lines_.size();
    const Mask optimistic = mid | masks_[lines_.front()] | masks_[lines_.back()];
    const long left = h_ - static_cast<long>(k);
    if (std::popcount(full_ & ~optimistic) > left * m_.max_cover) return std::nullopt;
    if (left == 0) return finish(mid);
    for (std::size_t li = 0; li < m_.lines.size(); ++li) {
      if (li == lines_.back()) continue;
      auto v = meet(m_.lines[lines_.back()], m_.lines[li]);
      if (!v) continue;
      Mask next = mid;
      if (k >= 2) {
        if (*v == verts_.back()) continue;
        next |= segment_mask(m_, lines_.back(), verts_.back(), *v);
      }
      lines_.push_back(li);
      verts_.push_back(*v);
      auto r = dfs(next);
      lines_.pop_back();
      verts_.pop_back();
      if (r || timed_out_) return r;
    }
    return std::nullopt;
  }

  std::optional<PolygonalChain> finish(Mask mid) {
    const std::size_t l0 = lines_.front(), ll = lines_.back();
    if (h_ == 1) {
      const auto& e = m_.ends[l0];
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = 0; j < e.size(); ++j) {
          if (i == j) continue;
          if ((segment_mask(m_, l0, e[i], e[j]) | mid) != full_) continue;
          if (auto c = accept({e[i], e[j]})) return c;
        }
      }
      return std::nullopt;
    }
    for (const QPoint& s : m_.ends[l0]) {
      if (s == verts_.front()) continue;
      const Mask a = mid | segment_mask(m_, l0, s, verts_.front());
      for (const QPoint& t : m_.ends[ll]) {
        if (t == verts_.back()) continue;
        if ((a | segment_mask(m_, ll, verts_.back(), t)) != full_) continue;
        std::vector<QPoint> vs;
        vs.push_back(s);
        vs.insert(vs.end(), verts_.begin(), verts_.end());
        vs.push_back(t);
        if (auto c = accept(vs)) return c;
      }
    }
    return std::nullopt;
  }

  std::optional<PolygonalChain> accept(const std::vector<QPoint>& vs) {
    PolygonalChain c{m_.n, {}, ChainKind::unknown};
    for (const auto& q : vs) c.vertices.push_back(to_point(q));
    try {
      if (classify(c).is_covering_trail && accept_(c)) {
        c.kind = ChainKind::trail;
        return c;
      }
    } catch (const InvalidChainError&) {
    }
    return std::nullopt;
  }

  const Model& m_;
  long h_;
  const Predicate& accept_;
  std::atomic<std::size_t>& best_;
  std::chrono::steady_clock::time_point deadline_;
  bool timed_;
  Mask full_ = 0;
  std::vector<Mask> masks_;
  std::size_t first_ = 0;
  std::vector<std::size_t> lines_;
  std::vector<QPoint> verts_;
  std::uint64_t explored_ = 0;
  bool timed_out_ = false;
};

inline std::string describe_model(long n, long padding) {
  return "restricted-model: edges on lines through >= 2 points of {" + std::to_string(-padding) + ".." +
         std::to_string(n - 1 + padding) + "}^2 containing a grid node; free ends on padded-lattice points";
}

}  // namespace search_detail

/// Covering trail with exactly h edges accepted by `accept`, searched
/// exhaustively in the model. Among first lines, the lowest index with a
/// solution wins, so the answer does not depend on thread timing.
inline SearchResult search_trail_exact(long n, long h, const std::function<bool(const PolygonalChain&)>& accept,
                                       const SearchOptions& opt = {}) {
  using namespace search_detail;
  if (n < 1) throw DomainError("grid size must be positive");
  if (n > 4) throw DomainError("search is limited to n <= 4; use the constructive generators for larger grids");
  if (h < 1) throw DomainError("edge count must be positive");
  if (opt.padding < 0) throw DomainError("padding must be non-negative");
  const Model model = build_model(n, opt.padding, opt.seed);
  const unsigned threads = std::max(1U, opt.threads == 0 ? default_thread_count() : opt.threads);
  const bool timed = opt.time_budget_seconds > 0.0;
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(timed ? opt.time_budget_seconds : 0.0));

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> explored{0};
  std::atomic<bool> timed_out{false};
  std::vector<std::optional<PolygonalChain>> found(model.lines.size());

  auto worker = [&] {
    Searcher s(model, h, accept, best, deadline, timed);
    std::uint64_t before = 0;
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= model.lines.size() || i > best.load()) break;
      auto r = s.run(i);
      explored += s.explored() - before;
      before = s.explored();
      if (s.timed_out()) {
        timed_out = true;
        break;
      }
      if (r) {
        found[i] = std::move(r);
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SearchResult res;
  res.max_edges = h;
  res.explored = explored.load();
  res.complete = !timed_out.load();
  res.model = describe_model(n, opt.padding);
  if (const std::size_t b = best.load(); b < found.size()) res.chain = std::move(found[b]);
  return res;
}

/// Fewest-edge covering trail with at most max_edges edges (iterative deepening).
inline SearchResult search_min_trail(long n, long max_edges, const SearchOptions& opt = {}) {
  if (n < 1) throw DomainError("grid size must be positive");
  if (n > 4) throw DomainError("search is limited to n <= 4; use the constructive generators for larger grids");
  const long cap = std::max(min_link_length(n), 2 * (n - 1));
  if (max_edges < 1 || max_edges > cap) {
    throw DomainError("max_edges must be in 1.." + std::to_string(cap) + " for n=" + std::to_string(n));
  }
  SearchResult total;
  total.max_edges = max_edges;
  total.model = search_detail::describe_model(n, opt.padding);
  for (long h = 1; h <= max_edges; ++h) {
    SearchResult r = search_trail_exact(n, h, [](const PolygonalChain&) { return true; }, opt);
    total.explored += r.explored;
    if (!r.complete) {
      total.complete = false;
      return total;
    }
    if (r.chain) {
      total.chain = std::move(r.chain);
      return total;
    }
  }
  return total;
}

/// Minimal-link covering trail that visits (0,0) at least twice.
inline PolygonalChain find_trail_not_path(long n, const SearchOptions& opt = {}) {
  if (n < 1) throw DomainError("grid size must be positive");
  if (n == 1) throw ImpossibleRequest("G_1 has a single node; its only minimal trail is a path");
  if (n == 3) return certified(explicit_chain("def13-trail"), ChainKind::trail, min_link_length(3), "trail");
  if (n != 2) throw DomainError("find_trail_not_path searches only n = 2 and 3; circuits witness n >= 4");
  SearchOptions o = opt;
  if (o.padding == 2) o.padding = 1;
  auto revisits_origin = [](const PolygonalChain& c) { return visit_counts(c).count({0, 0}) >= 2; };
  SearchResult r = search_trail_exact(2, min_link_length(2), revisits_origin, o);
  if (!r.chain) throw ConstructionFailure("no trail revisiting (0,0) in the search model for n=2");
  return certified(std::move(*r.chain), ChainKind::trail, min_link_length(2), "trail");
}

}  // namespace gridlink
