#include <gtest/gtest.h>

#include "gridlink/gridlink.hpp"

using namespace gridlink;

TEST(Json, ScalarEncoding) {
  EXPECT_EQ(scalar_to_json(Scalar(make_rational(-3, 4))), Json("-3/4"));
  EXPECT_EQ(scalar_to_json(Scalar(Rational(4), make_rational(-1, 20))), (Json{{"r", "4"}, {"s2", "-1/20"}}));
  EXPECT_EQ(scalar_from_json(Json("11/3")), Scalar(make_rational(11, 3)));
  EXPECT_EQ(scalar_from_json(Json(7)), Scalar(7));
  EXPECT_EQ(scalar_from_json(Json{{"r", "0"}, {"s2", "1/2"}}), Scalar(Rational(0), make_rational(1, 2)));
  EXPECT_THROW(scalar_from_json(Json(1.5)), ParseError);
  EXPECT_THROW(scalar_from_json(Json{{"r", "1"}}), ParseError);
}

TEST(Json, DocumentRoundTrip) {
  const ChainDocument d = generate("catalog:lemma22-f5", 0);
  const std::string text = serialize(d);
  const ChainDocument back = parse_document(text);
  EXPECT_EQ(back, d);
  EXPECT_EQ(serialize(back), text);
  EXPECT_EQ(back.chain.kind, ChainKind::circuit);
  EXPECT_EQ(back.metadata["id"], "lemma22-f5");
}

TEST(Json, HundredDocumentsRoundTrip) {
  std::vector<ChainDocument> docs;
  for (long n = 1; n <= 30; ++n) docs.push_back(generate("path", n));
  for (long n : {2L, 4L, 5L, 6L, 7L, 8L, 9L, 10L, 11L, 12L, 13L, 14L, 15L, 16L, 17L, 18L, 19L, 20L, 21L, 22L}) {
    docs.push_back(generate("circuit", n));
  }
  for (long n = 2; n <= 30; n += 2) docs.push_back(generate("cycle", n));
  for (long n = 2; n <= 21; ++n) docs.push_back(generate("distance-trail", n));
  for (const auto& id : catalog_ids()) docs.push_back(generate("catalog:" + id, 0));
  GenerateParams p;
  for (long k = 2; k <= 20 && docs.size() < 100; ++k) {
    p.eps = make_rational(1, k);
    docs.push_back(generate("epsilon-path", 5, p));
  }
  ASSERT_GE(docs.size(), 100U);
  for (const auto& d : docs) {
    const std::string s = serialize(d);
    const ChainDocument back = parse_document(s);
    ASSERT_EQ(back, d) << s;
    ASSERT_EQ(serialize(back), s);
  }
}

TEST(Json, LoadErrors) {
  EXPECT_THROW(parse_document("{"), ParseError);
  EXPECT_THROW(parse_document("[]"), ParseError);
  EXPECT_THROW(parse_document(R"({"n": 3})"), ParseError);
  EXPECT_THROW(parse_document(R"({"format_version": "2.0", "n": 2, "vertices": [["0","0"],["1","0"]]})"), ParseError);
  EXPECT_THROW(parse_document(R"({"n": 2, "kind": "spiral", "vertices": [["0","0"],["1","0"]]})"), ParseError);
  EXPECT_THROW(parse_document(R"({"n": 2, "vertices": [["0","0"]]})"), ParseError);
  EXPECT_THROW(parse_document(R"({"n": 2, "vertices": [["0","0"],["1/0","0"]]})"), ParseError);
  // Minimal form without version or metadata is accepted.
  const ChainDocument d = parse_document(R"({"n": 2, "kind": "path", "vertices": [["0","1"],["0","0"],["1","0"],["1","1"]]})");
  EXPECT_TRUE(classify(d.chain).is_covering_path);
  EXPECT_THROW(read_file("/nonexistent/gridlink.json"), IoError);
}

TEST(Json, VerificationReport) {
  const PolygonalChain f5 = explicit_chain("lemma22-f5");
  const Json j = report_to_json(f5, classify(f5));
  EXPECT_EQ(j["is_covering_circuit"], true);
  EXPECT_EQ(j["is_covering_cycle"], false);
  EXPECT_EQ(j["h"], 8);
  EXPECT_EQ(j["revisited"], Json::parse(R"([{"node": [4, 0], "count": 2}])"));
  EXPECT_EQ(j["uncovered"], Json::array());
  const PolygonalChain t5 = explicit_chain("sec3-t5");
  EXPECT_EQ(report_to_json(t5, classify(t5))["l"], "20+6*sqrt(2)");
}

TEST(Svg, DeterministicAndStructured) {
  const PolygonalChain c4 = explicit_chain("fig3-c4");
  const std::string a = render_svg(c4), b = render_svg(c4);
  EXPECT_EQ(a, b);
  // Bounding box [-1,4]^2 plus a unit margin at 32 px per unit.
  EXPECT_NE(a.find("width=\"224\" height=\"224\""), std::string::npos);
  std::size_t dots = 0;
  for (std::size_t p = a.find("r=\"3\""); p != std::string::npos; p = a.find("r=\"3\"", p + 1)) ++dots;
  EXPECT_EQ(dots, 16U);
  EXPECT_NE(a.find("marker-end=\"url(#arrow)\""), std::string::npos);
  // Steiner vertices (-1,-1), (3/2,4), (4,-1), (-1,4), (3/2,-1), (4,4): six hollow markers.
  const std::size_t g = a.find("<g id=\"steiner\"");
  ASSERT_NE(g, std::string::npos);
  std::size_t hollow = 0;
  for (std::size_t p = a.find("<circle", g); p != std::string::npos; p = a.find("<circle", p + 1)) ++hollow;
  EXPECT_EQ(hollow, 6U);
  SvgOptions big;
  big.scale = 10;
  EXPECT_NE(render_svg(c4, big), a);
  // Irrational coordinates render through a fixed decimal format.
  const std::string e = render_svg(epsilon_path(make_rational(1, 10)));
  EXPECT_EQ(e, render_svg(epsilon_path(make_rational(1, 10))));
}

TEST(Svg, SpiralFragment) {
  const PolygonalChain b6 = triangular_spiral(6, SpiralKind::bottom);
  const std::string s = render_svg(b6);
  EXPECT_NE(s.find("h=4"), std::string::npos);
  // Every spiral vertex is a grid node, so the Steiner group stays empty.
  const std::size_t g = s.find("<g id=\"steiner\"");
  ASSERT_NE(g, std::string::npos);
  const std::size_t end = s.find("</g>", g);
  ASSERT_NE(end, std::string::npos);
  EXPECT_TRUE(s.find("<circle", g) == std::string::npos || s.find("<circle", g) > end);
}

TEST(Generate, Dispatch) {
  EXPECT_EQ(generate("path", 7).chain.vertices.size(), 13U);
  EXPECT_EQ(generate("catalog:lemma22-f5", 0).chain, explicit_chain("lemma22-f5"));
  EXPECT_THROW(generate("circuit", 3), ImpossibleRequest);
  EXPECT_THROW(generate("cycle", 3), ImpossibleRequest);
  EXPECT_THROW(generate("cycle", 7), UnimplementedPattern);
  EXPECT_THROW(generate("epsilon-path", 4), DomainError);
  EXPECT_THROW(generate("spiral", 4), DomainError);
  EXPECT_EQ(generate("epsilon-path", 5).metadata["eps"], "1/10");
}

TEST(Sweep, Rows) {
  const SweepReport paths = run_sweep(4, 20, {"path"});
  EXPECT_EQ(paths.rows.size(), 17U);
  for (const auto& r : paths.rows) EXPECT_EQ(r.status, RowStatus::certified) << r.n;
  EXPECT_TRUE(paths.all_pass());

  const SweepReport two = run_sweep(2, 2, {"path", "circuit", "cycle"});
  ASSERT_EQ(two.rows.size(), 3U);
  for (const auto& r : two.rows) EXPECT_EQ(r.status, RowStatus::certified) << r.kind;

  const SweepReport three = run_sweep(3, 3, {"circuit"});
  EXPECT_EQ(three.rows.front().status, RowStatus::impossible);
  EXPECT_TRUE(three.all_pass());
  EXPECT_THROW(run_sweep(5, 4, {"path"}), DomainError);
}

TEST(Sweep, Tables) {
  const SweepReport r = run_sweep(2, 6, {"distance-trail"});
  const std::string csv = to_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,kind,status,h,h_expected,length,length_bound,h_ok,lower_ok,within_upper,message");
  EXPECT_NE(csv.find("5,distance-trail,certified,8,8,20+6*sqrt(2),20+6*sqrt(2),true,true,true,"), std::string::npos);
  const std::string md = to_markdown(r);
  for (const char* h : {"## n = 2", "## n = 3", "## n = 5", "## otherwise"}) EXPECT_NE(md.find(h), std::string::npos) << h;
  EXPECT_EQ(to_json(r)["rows"].size(), 5U);
  EXPECT_EQ(to_csv(r), to_csv(run_sweep(2, 6, {"distance-trail"}, 1)));  // ordered by n regardless of threads
}

TEST(Sweep, CollisionTable) {
  const auto rows = collision_table(4, 200);
  EXPECT_EQ(rows.size(), 197U);
  for (const auto& r : rows) EXPECT_TRUE(r.match) << r.n;
  EXPECT_EQ(to_json(rows)["all_match"], true);
  EXPECT_NE(to_csv(rows).find("9,3,\"(0,2) (2,3) (4,4) (6,5) (8,6)\""), std::string::npos);
}
