#pragma once

// JSON chain documents and verification reports.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gridlink/verifier.hpp"

namespace gridlink {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1.0";

/// Rational scalars serialize as "p/q" strings; scalars with a sqrt(2) part
/// as {"r": "p/q", "s2": "p/q"}.
inline Json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return s.rational_part().get_str();
  return Json{{"r", s.rational_part().get_str()}, {"s2", s.sqrt2_part().get_str()}};
}

inline Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
  if (j.is_object()) {
    if (!j.contains("r") || !j.contains("s2") || !j["r"].is_string() || !j["s2"].is_string()) {
      throw ParseError("scalar object needs string fields \"r\" and \"s2\"");
    }
    return Scalar(parse_rational(j["r"].get<std::string>()), parse_rational(j["s2"].get<std::string>()));
  }
  throw ParseError("scalar must be a string, integer or {r, s2} object");
}

struct ChainDocument {
  std::string format_version = kFormatVersion;
  PolygonalChain chain;
  Json metadata = Json::object();

  friend bool operator==(const ChainDocument& a, const ChainDocument& b) {
    return a.format_version == b.format_version && a.chain == b.chain && a.metadata == b.metadata;
  }
};

inline ChainDocument make_document(PolygonalChain c, Json metadata = Json::object()) {
  return {kFormatVersion, std::move(c), std::move(metadata)};
}

inline Json to_json(const ChainDocument& d) {
  Json verts = Json::array();
  for (const Point& p : d.chain.vertices) verts.push_back(Json::array({scalar_to_json(p.x), scalar_to_json(p.y)}));
  return Json{{"format_version", d.format_version},
              {"n", d.chain.n},
              {"kind", std::string(to_string(d.chain.kind))},
              {"vertices", std::move(verts)},
              {"metadata", d.metadata}};
}

inline ChainDocument document_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("chain document must be a JSON object");
  ChainDocument d;
  if (j.contains("format_version")) {
    if (!j["format_version"].is_string()) throw ParseError("format_version must be a string");
    d.format_version = j["format_version"].get<std::string>();
    if (d.format_version.substr(0, 2) != "1.") {
      throw ParseError("unsupported format_version " + d.format_version + " (expected 1.x)");
    }
  }
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("missing integer field \"n\"");
  d.chain.n = j["n"].get<long>();
  if (d.chain.n < 1) throw ParseError("n must be positive");
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) throw ParseError("kind must be a string");
    try {
      d.chain.kind = parse_chain_kind(j["kind"].get<std::string>());
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw ParseError("missing array field \"vertices\"");
  for (const Json& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2) throw ParseError("each vertex must be a two-element array");
    d.chain.vertices.push_back({scalar_from_json(v[0]), scalar_from_json(v[1])});
  }
  if (d.chain.vertices.size() < 2) throw ParseError("a chain needs at least two vertices");
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw ParseError("metadata must be an object");
    d.metadata = j["metadata"];
  }
  return d;
}

inline std::string serialize(const ChainDocument& d) { return to_json(d).dump(2) + "\n"; }

inline ChainDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return document_from_json(j);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

inline Json nodes_to_json(const std::vector<GridNode>& nodes) {
  Json a = Json::array();
  for (const auto& g : nodes) a.push_back(Json::array({g.x, g.y}));
  return a;
}

/// Classification, h, exact l, uncovered and revisited nodes.
inline Json report_to_json(const PolygonalChain& c, const Classification& cl) {
  Json revisits = Json::array();
  for (const auto& [g, k] : cl.report.revisited()) revisits.push_back(Json{{"node", Json::array({g.x, g.y})}, {"count", k}});
  Json j{{"n", c.n},
         {"declared_kind", std::string(to_string(c.kind))},
         {"is_covering_trail", cl.is_covering_trail},
         {"is_covering_path", cl.is_covering_path},
         {"is_covering_circuit", cl.is_covering_circuit},
         {"is_covering_cycle", cl.is_covering_cycle},
         {"strongest_kind", std::string(to_string(cl.strongest()))},
         {"closed", cl.report.is_closed},
         {"h", cl.report.link_length},
         {"h_min", min_link_length(c.n)}};
  j["l"] = cl.report.total_length ? Json(cl.report.total_length->str()) : Json(nullptr);
  j["uncovered"] = nodes_to_json(cl.report.uncovered);
  j["revisited"] = std::move(revisits);
  j["failure_reasons"] = cl.failure_reasons;
  return j;
}

}  // namespace gridlink
