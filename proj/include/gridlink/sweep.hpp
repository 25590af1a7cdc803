#pragma once

// Generator dispatch by name, and per-n sweep and collision tables.

#include <algorithm>
#include <atomic>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gridlink/collision.hpp"
#include "gridlink/io.hpp"
#include "gridlink/search.hpp"

namespace gridlink {

/// Kinds accepted by generate(): path, circuit, cycle, distance-trail,
/// epsilon-path, catalog:<id>.
inline const std::vector<std::string>& generator_kinds() {
  static const std::vector<std::string> kinds = {"path", "circuit", "cycle", "distance-trail", "epsilon-path"};
  return kinds;
}

struct GenerateParams {
  Rational eps{1, 10};  // epsilon-path only
};

/// Builds and certifies the requested object. The document metadata records
/// the generator and its parameters.
inline ChainDocument generate(const std::string& kind, long n, const GenerateParams& params = {}) {
  Json meta{{"generator", kind}};
  PolygonalChain c;
  if (kind.rfind("catalog:", 0) == 0) {
    const std::string id = kind.substr(8);
    c = explicit_chain(id);
    if (!detail::certifies(c, c.kind)) throw ConstructionFailure("catalog entry " + id + " fails verification");
    meta = Json{{"generator", "catalog"}, {"id", id}};
  } else if (kind == "path") {
    c = covering_path(n);
  } else if (kind == "circuit") {
    c = covering_circuit(n);
  } else if (kind == "cycle") {
    if (n < 1) throw DomainError("grid size must be positive");
    if (n == 1 || n == 3) {
      throw ImpossibleRequest("no covering cycle of G_" + std::to_string(n) + " exists with " +
                              std::to_string(min_link_length(n)) + " edges, since no minimal circuit does");
    }
    if (n % 2 != 0) throw UnimplementedPattern("no minimal covering cycle construction for odd n=" + std::to_string(n));
    c = covering_cycle_even(n);
  } else if (kind == "distance-trail") {
    c = distance_optimal_trail(n);
  } else if (kind == "epsilon-path") {
    if (n != 5) throw DomainError("the epsilon path exists for n = 5 only");
    c = epsilon_path(params.eps);
    meta["eps"] = params.eps.get_str();
  } else {
    throw DomainError("unknown generator kind: " + kind);
  }
  meta["n"] = c.n;
  return make_document(std::move(c), std::move(meta));
}

enum class RowStatus { certified, impossible, unavailable, failed };

inline std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::certified: return "certified";
    case RowStatus::impossible: return "impossible";
    case RowStatus::unavailable: return "unavailable";
    case RowStatus::failed: return "failed";
  }
  return "failed";
}

struct SweepRow {
  long n = 0;
  std::string kind;
  RowStatus status = RowStatus::failed;
  long h = 0;
  long h_expected = 0;
  std::string length;  // exact, empty if not expressible
  std::string length_bound;
  bool h_ok = false;
  bool lower_ok = false;
  bool within_upper = false;
  std::string message;

  /// Impossible and unavailable rows are explicit outcomes, not failures.
  bool pass() const { return status != RowStatus::failed; }
};

inline SweepRow sweep_row(long n, const std::string& kind) {
  SweepRow row;
  row.n = n;
  row.kind = kind;
  try {
    row.h_expected = min_link_length(n);
    if (n >= 2) row.length_bound = length_upper_bound(n).str();
    const ChainDocument doc = generate(kind, n);
    const Classification cl = classify(doc.chain);
    row.h = static_cast<long>(doc.chain.edge_count());
    row.h_ok = row.h == row.h_expected;
    if (cl.report.total_length) row.length = cl.report.total_length->str();
    if (n >= 2 && cl.report.total_length) {
      const BoundReport b = check_bounds(doc.chain);
      row.lower_ok = b.lower_ok;
      row.within_upper = b.within_upper;
    }
    const bool ok = cl.satisfies(doc.chain.kind) && row.h_ok && (n < 2 || !cl.report.total_length || row.lower_ok);
    row.status = ok ? RowStatus::certified : RowStatus::failed;
    if (!ok) row.message = cl.failure_reasons.empty() ? "bound or link check failed" : cl.failure_reasons.front();
  } catch (const ImpossibleRequest& e) {
    row.status = RowStatus::impossible;
    row.message = e.what();
  } catch (const UnimplementedPattern& e) {
    row.status = RowStatus::unavailable;
    row.message = e.what();
  } catch (const DomainError& e) {
    row.status = RowStatus::unavailable;
    row.message = e.what();
  } catch (const std::exception& e) {
    row.status = RowStatus::failed;
    row.message = e.what();
  }
  return row;
}

/// Runs f(i) for i in [0, count) on a worker pool.
template <class F>
void parallel_for(std::size_t count, F&& f, unsigned threads = 0) {
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) f(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

struct SweepReport {
  std::vector<SweepRow> rows;  // ordered by n, then by requested kind

  bool all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.pass(); });
  }
};

inline SweepReport run_sweep(long n_min, long n_max, const std::vector<std::string>& kinds, unsigned threads = 0) {
  if (n_min < 1 || n_max < n_min) throw DomainError("sweep needs 1 <= n_min <= n_max");
  if (kinds.empty()) throw DomainError("sweep needs at least one kind");
  SweepReport rep;
  for (long n = n_min; n <= n_max; ++n) {
    for (const auto& k : kinds) {
      SweepRow row;
      row.n = n;
      row.kind = k;
      rep.rows.push_back(std::move(row));
    }
  }
  parallel_for(rep.rows.size(), [&](std::size_t i) { rep.rows[i] = sweep_row(rep.rows[i].n, rep.rows[i].kind); },
               threads);
  return rep;
}

namespace table_detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline const char* yn(bool b) { return b ? "true" : "false"; }

/// Which closed form of the length bound applies to n.
inline std::string bound_case(long n) {
  if (n < 2) return "n = 1";
  if (n == 2) return "n = 2";
  if (n == 3) return "n = 3";
  if (n == 5) return "n = 5";
  return "otherwise";
}

}  // namespace table_detail

inline std::string to_csv(const SweepReport& r) {
  using namespace table_detail;
  std::string s = "n,kind,status,h,h_expected,length,length_bound,h_ok,lower_ok,within_upper,message\n";
  for (const auto& row : r.rows) {
    s += std::to_string(row.n) + "," + row.kind + "," + std::string(to_string(row.status)) + "," +
         std::to_string(row.h) + "," + std::to_string(row.h_expected) + "," + csv_field(row.length) + "," +
         csv_field(row.length_bound) + "," + yn(row.h_ok) + "," + yn(row.lower_ok) + "," + yn(row.within_upper) + "," +
         csv_field(row.message) + "\n";
  }
  return s;
}

inline Json to_json(const SweepReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"n", row.n},
                        {"kind", row.kind},
                        {"status", std::string(to_string(row.status))},
                        {"h", row.h},
                        {"h_expected", row.h_expected},
                        {"length", row.length},
                        {"length_bound", row.length_bound},
                        {"h_ok", row.h_ok},
                        {"lower_ok", row.lower_ok},
                        {"within_upper", row.within_upper},
                        {"message", row.message}});
  }
  return Json{{"all_pass", r.all_pass()}, {"rows", std::move(rows)}};
}

/// One section per case of the closed-form length bound.
inline std::string to_markdown(const SweepReport& r) {
  using namespace table_detail;
  std::string s = "# Sweep\n";
  for (const char* section : {"n = 1", "n = 2", "n = 3", "n = 5", "otherwise"}) {
    std::string body;
    for (const auto& row : r.rows) {
      if (bound_case(row.n) != section) continue;
      body += "| " + std::to_string(row.n) + " | " + row.kind + " | " + std::string(to_string(row.status)) + " | " +
              std::to_string(row.h) + " | " + std::to_string(row.h_expected) + " | " + row.length + " | " +
              row.length_bound + " | " + yn(row.lower_ok) + " | " + yn(row.within_upper) + " |\n";
    }
    if (body.empty()) continue;
    s += "\n## " + std::string(section);
    if (std::string(section) == "otherwise") s += " (bound n^2-3+5*sqrt(2))";
    s += "\n\n| n | kind | status | h | h expected | l | l bound | l > n^2-1 | l <= bound |\n";
    s += "|---|---|---|---|---|---|---|---|---|\n" + body;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Collision tables

struct CollisionRow {
  long n = 0;
  long residue = 0;  // n mod 6
  std::vector<GridNode> predicted;
  std::vector<GridNode> hits;
  bool match = false;
};

inline std::vector<CollisionRow> collision_table(long n_min, long n_max) {
  if (n_min < 4 || n_max < n_min) throw DomainError("collision table needs 4 <= n_min <= n_max");
  std::vector<CollisionRow> rows;
  for (long n = n_min; n <= n_max; ++n) {
    const CollisionProfile p = collision_profile(n);
    rows.push_back({n, n % 6, p.predicted, p.hits, p.matches()});
  }
  return rows;
}

inline std::string nodes_text(const std::vector<GridNode>& v) {
  std::string s;
  for (const auto& g : v) s += (s.empty() ? "" : " ") + g.str();
  return s;
}

inline std::string to_csv(const std::vector<CollisionRow>& rows) {
  std::string s = "n,residue,predicted,hits,match\n";
  for (const auto& r : rows) {
    s += std::to_string(r.n) + "," + std::to_string(r.residue) + ",\"" + nodes_text(r.predicted) + "\",\"" +
         nodes_text(r.hits) + "\"," + (r.match ? "true" : "false") + "\n";
  }
  return s;
}

inline Json to_json(const std::vector<CollisionRow>& rows) {
  Json a = Json::array();
  bool all = true;
  for (const auto& r : rows) {
    all = all && r.match;
    a.push_back(Json{{"n", r.n},
                     {"residue", r.residue},
                     {"predicted", nodes_to_json(r.predicted)},
                     {"hits", nodes_to_json(r.hits)},
                     {"match", r.match}});
  }
  return Json{{"all_match", all}, {"rows", std::move(a)}};
}

inline std::string to_markdown(const std::vector<CollisionRow>& rows) {
  std::string s = "| n | n mod 6 | predicted | hits | match |\n|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    s += "| " + std::to_string(r.n) + " | " + std::to_string(r.residue) + " | " + nodes_text(r.predicted) + " | " +
         nodes_text(r.hits) + " | " + (r.match ? "yes" : "no") + " |\n";
  }
  return s;
}

inline Json to_json(const SearchResult& r) {
  Json j{{"max_edges", r.max_edges}, {"explored", r.explored}, {"complete", r.complete}, {"model", r.model}};
  if (r.chain) {
    j["found"] = true;
    j["h"] = r.chain->edge_count();
    j["chain"] = to_json(make_document(*r.chain, Json{{"generator", "search"}}));
  } else {
    j["found"] = false;
  }
  return j;
}

}  // namespace gridlink
