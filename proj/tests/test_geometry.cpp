#include <gmpxx.h>
#include <gtest/gtest.h>

#include <random>
#include <variant>

#include "gridlink/geometry.hpp"

using namespace gridlink;

namespace {

Point P(long x, long y) { return {Scalar(x), Scalar(y)}; }
Point Q(long xn, long xd, long yn, long yd) { return {Scalar(make_rational(xn, xd)), Scalar(make_rational(yn, yd))}; }

}  // namespace

TEST(Rational, ParseAndCanonicalise) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("+2/3").get_str(), "2/3");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(make_rational(1, 0), DomainError);
}

TEST(Scalar, ExactRingArithmetic) {
  const Scalar a(Rational(1), Rational(2));    // 1 + 2 sqrt2
  const Scalar b(Rational(3), Rational(-1));   // 3 - sqrt2
  EXPECT_EQ(a * b, Scalar(Rational(-1), Rational(5)));  // 3 - sqrt2 + 6 sqrt2 - 4
  EXPECT_EQ(a + b, Scalar(Rational(4), Rational(1)));
  EXPECT_EQ(Scalar::sqrt2() * Scalar::sqrt2(), Scalar(2));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(a * a.inverse(), Scalar(1));
  EXPECT_THROW(Scalar(0).inverse(), DomainError);
  EXPECT_THROW(a / Scalar(0), DomainError);
}

TEST(Scalar, ExactSign) {
  EXPECT_EQ(Scalar(Rational(3), Rational(-2)).sign(), 1);    // 3 > 2.828
  EXPECT_EQ(Scalar(Rational(-3), Rational(2)).sign(), -1);
  EXPECT_EQ(Scalar(Rational(1), Rational(0)).sign(), 1);
  EXPECT_EQ(Scalar(Rational(0), Rational(-1)).sign(), -1);
  EXPECT_EQ(Scalar().sign(), 0);
  // 99/70 is a convergent of sqrt2 from above, 140/99 from below.
  EXPECT_EQ(Scalar(make_rational(99, 70), Rational(-1)).sign(), 1);
  EXPECT_EQ(Scalar(make_rational(140, 99), Rational(-1)).sign(), -1);
}

TEST(Scalar, Formatting) {
  EXPECT_EQ(Scalar(make_rational(-1, 2)).str(), "-1/2");
  EXPECT_EQ(Scalar(Rational(0), make_rational(1, 2)).str(), "1/2*sqrt(2)");
  EXPECT_EQ(Scalar(Rational(4), make_rational(-1, 2)).str(), "4-1/2*sqrt(2)");
  EXPECT_EQ(Scalar::sqrt2().str(), "sqrt(2)");
}

// Comparison agrees with 50-digit floating evaluation on 10^4 random values.
TEST(Scalar, ComparisonMatchesHighPrecisionFloat) {
  std::mt19937_64 rng(20261017);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
  mpf_class root2(2, 200);
  root2 = sqrt(root2);
  auto eval = [&](const Scalar& s) {
    mpf_class r(s.rational_part(), 200), t(s.sqrt2_part(), 200);
    return mpf_class(r + t * root2, 200);
  };
  for (int i = 0; i < 10000; ++i) {
    Scalar a(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
    Scalar b(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
    if (i % 10 == 0) b = a;  // exercise equality
    const int exact = (a - b).sign();
    const int fl = cmp(eval(a), eval(b));
    ASSERT_EQ(exact, fl > 0 ? 1 : (fl < 0 ? -1 : 0)) << a.str() << " vs " << b.str();
  }
}

TEST(Scalar, FloorAndCeil) {
  EXPECT_EQ(floor_of(Scalar::sqrt2()), Integer(1));
  EXPECT_EQ(ceil_of(Scalar::sqrt2()), Integer(2));
  EXPECT_EQ(floor_of(Scalar(Rational(0), Rational(-1))), Integer(-2));
  EXPECT_EQ(floor_of(Scalar(make_rational(7, 2))), Integer(3));
  EXPECT_EQ(ceil_of(Scalar(Rational(3))), Integer(3));
}

TEST(RadicalSum, SquarefreeNormalisation) {
  EXPECT_EQ(RadicalSum::sqrt_of(Rational(8)), RadicalSum::term(Rational(2), Integer(2)));
  EXPECT_EQ(RadicalSum::sqrt_of(Rational(9)), RadicalSum(3));
  EXPECT_EQ(RadicalSum::sqrt_of(make_rational(1, 2)), RadicalSum::term(make_rational(1, 2), Integer(2)));
  EXPECT_EQ(RadicalSum::term(Rational(1), Integer(12)), RadicalSum::term(Rational(2), Integer(3)));
}

TEST(RadicalSum, ParseFormatRoundTrip) {
  for (const char* s : {"20+6*sqrt(2)", "5+5*sqrt(2)", "3", "-1/2*sqrt(5)+7/3", "10*sqrt(2)+10*sqrt(5)"}) {
    const RadicalSum r = RadicalSum::parse(s);
    EXPECT_EQ(RadicalSum::parse(r.str()), r) << s;
  }
  EXPECT_EQ(RadicalSum::parse("sqrt(8)"), RadicalSum::term(Rational(2), Integer(2)));
  EXPECT_EQ((RadicalSum(20) + RadicalSum::term(Rational(6), Integer(2))).str(), "20+6*sqrt(2)");
  EXPECT_THROW(RadicalSum::parse("2*sqrt(x)"), ParseError);
}

TEST(RadicalSum, ExactSignAndOrder) {
  // sqrt2 + sqrt3 vs sqrt(10): 3.146 > 3.162? no, less.
  const RadicalSum a = RadicalSum::term(Rational(1), Integer(2)) + RadicalSum::term(Rational(1), Integer(3));
  const RadicalSum b = RadicalSum::term(Rational(1), Integer(10));
  EXPECT_LT(a, b);
  EXPECT_GT(RadicalSum(13) + RadicalSum::term(Rational(5), Integer(2)), RadicalSum(13));
  EXPECT_EQ((a - a).sign(), 0);
  // (sqrt5)^2 via product
  const RadicalSum s5 = RadicalSum::term(Rational(1), Integer(5));
  EXPECT_EQ(s5 * s5, RadicalSum(5));
}

TEST(Geometry, PointOnSegment) {
  EXPECT_TRUE(point_on_segment(P(1, 1), Segment(P(0, 0), P(2, 2))));
  EXPECT_TRUE(point_on_segment(P(0, 1), Segment(P(-2, 0), Q(3, 1, 5, 2))));
  EXPECT_FALSE(point_on_segment(P(1, 2), Segment(P(0, 0), P(2, 0))));
  EXPECT_TRUE(point_on_segment(P(2, 0), Segment(P(0, 0), P(2, 0))));
  EXPECT_FALSE(point_on_segment(P(3, 0), Segment(P(0, 0), P(2, 0))));
}

TEST(Geometry, Collinearity) {
  EXPECT_TRUE(segments_collinear(Segment(P(0, 0), P(1, 0)), Segment(P(1, 0), P(3, 0))));
  EXPECT_FALSE(segments_collinear(Segment(P(0, 0), P(1, 0)), Segment(P(1, 0), P(1, 1))));
  EXPECT_TRUE(segments_collinear(Segment(P(0, 0), P(2, 1)), Segment(P(2, 1), P(6, 3))));
}

TEST(Geometry, LineIntersection) {
  const Line bridge4(P(0, 1), P(2, 2));
  auto a = line_intersection(Line(P(0, 0), P(1, 0)), bridge4);
  ASSERT_TRUE(std::holds_alternative<Point>(a));
  EXPECT_EQ(std::get<Point>(a), P(-2, 0));
  auto b = line_intersection(Line(P(3, 0), P(3, 1)), bridge4);
  ASSERT_TRUE(std::holds_alternative<Point>(b));
  EXPECT_EQ(std::get<Point>(b), Q(3, 1, 5, 2));
  EXPECT_TRUE(std::holds_alternative<Parallel>(line_intersection(Line(P(0, 0), P(1, 0)), Line(P(0, 1), P(1, 1)))));
  EXPECT_TRUE(std::holds_alternative<Coincident>(line_intersection(Line(P(0, 0), P(1, 0)), Line(P(5, 0), P(7, 0)))));
  EXPECT_THROW(Line(P(1, 1), P(1, 1)), DomainError);
}

TEST(Geometry, LatticePointsOnSegment) {
  EXPECT_EQ(lattice_points_on_segment(Segment(P(0, 3), P(3, 0)), 4),
            (std::vector<Point>{P(0, 3), P(1, 2), P(2, 1), P(3, 0)}));
  EXPECT_EQ(lattice_points_on_segment(Segment(P(-1, 0), Q(11, 3, 7, 3)), 5), (std::vector<Point>{P(1, 1), P(3, 2)}));
  EXPECT_EQ(lattice_points_on_segment(Segment(P(-2, 0), Q(3, 1, 5, 2)), 4), (std::vector<Point>{P(0, 1), P(2, 2)}));
  // Traversal order follows the segment direction.
  EXPECT_EQ(lattice_points_on_segment(Segment(P(3, 0), P(0, 3)), 4),
            (std::vector<Point>{P(3, 0), P(2, 1), P(1, 2), P(0, 3)}));
  // Irrational direction meets no lattice point except exact ones.
  const Point off(Scalar(Rational(4), make_rational(-1, 20)), Scalar(Rational(0), make_rational(1, 20)));
  EXPECT_EQ(lattice_points_on_segment(Segment(P(0, 4), off), 5),
            (std::vector<Point>{P(0, 4), P(1, 3), P(2, 2), P(3, 1)}));
}

TEST(Geometry, LatticeEnumerationAgreesWithMembership) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> c(-3, 8), d(1, 3);
  for (int i = 0; i < 300; ++i) {
    const Point a = Q(c(rng), d(rng), c(rng), d(rng));
    const Point b = Q(c(rng), d(rng), c(rng), d(rng));
    if (a == b) continue;
    const Segment s(a, b);
    const auto pts = lattice_points_on_segment(s, 6);
    std::size_t members = 0;
    for (long x = 0; x < 6; ++x) {
      for (long y = 0; y < 6; ++y) members += point_on_segment(P(x, y), s) ? 1 : 0;
    }
    ASSERT_EQ(pts.size(), members);
    for (std::size_t k = 1; k < pts.size(); ++k) {
      ASSERT_LT(parameter_on(s, pts[k - 1]), parameter_on(s, pts[k]));  // strictly monotone
    }
  }
}

TEST(Geometry, SegmentLength) {
  EXPECT_EQ(segment_length(Segment(P(0, 0), P(1, 0))), RadicalSum(1));
  EXPECT_EQ(segment_length(Segment(P(0, 0), P(1, 2))), RadicalSum::term(Rational(1), Integer(5)));
  EXPECT_EQ(segment_length(Segment(P(2, 2), P(0, 0))), RadicalSum::term(Rational(2), Integer(2)));
  // Length squared equals dx^2 + dy^2.
  const Segment s(Q(-1, 1, 0, 1), Q(11, 3, 7, 3));
  const RadicalSum l = segment_length(s);
  EXPECT_EQ(l * l, RadicalSum(make_rational(14, 3) * make_rational(14, 3) + make_rational(7, 3) * make_rational(7, 3)));
  const Point off(Scalar(Rational(4), make_rational(-1, 20)), Scalar(Rational(0), make_rational(1, 20)));
  EXPECT_THROW(segment_length(Segment(P(0, 4), off)), UnsupportedRadicalError);
  EXPECT_THROW(Segment(P(1, 1), P(1, 1)), DomainError);
}
