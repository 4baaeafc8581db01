#include <gtest/gtest.h>

#include "gspline/gspline.hpp"
#include "support.hpp"

using namespace gspline;
using gspline::testing::Gen;

namespace {

Polynomial P(const std::string& text, const PolyContextPtr& ctx) { return parse_polynomial(text, ctx); }

bool associates(const PolynomialRing& ring, const Polynomial& a, const Polynomial& b) {
  return ring.normalize(a) == ring.normalize(b);
}

}  // namespace

TEST(Polynomial, ArithmeticAndPrinting) {
  auto ctx = gspline::testing::qq_xy();
  auto x = Polynomial::variable(ctx, 0), y = Polynomial::variable(ctx, 1);
  EXPECT_EQ(((x + y) * (x + y)).to_string(), "x^2 + 2*x*y + y^2");
  EXPECT_EQ((x - x).to_string(), "0");
  EXPECT_EQ((x.scaled(Rational(-1, 2)) + Polynomial::constant(ctx, 3)).to_string(), "-1/2*x + 3");
  EXPECT_EQ((x * y - y * x).degree(), -1);
  EXPECT_EQ((x + y).pow(3).degree_in(1), 3u);
  EXPECT_EQ(P("x^2*y + 3", ctx).leading_coefficient(), 1);
  EXPECT_EQ(P("x^2*y + 3", ctx).constant_term(), 3);
}

TEST(Polynomial, IntegerCoefficientInvariant) {
  auto zx = gspline::testing::zz_x();
  Polynomial p(zx);
  EXPECT_THROW(p.add_term({1}, Rational(1, 2)), DomainError);
  EXPECT_THROW(P("x/2", zx), ParseError);
  EXPECT_THROW(P("1/2*x", zx), ParseError);
}

TEST(Polynomial, ContextMismatch) {
  auto a = P("x", gspline::testing::qq_xy());
  auto b = P("x", make_context({"x", "y"}, Coefficients::Integer));
  EXPECT_THROW(a + b, RingMismatch);
}

TEST(PolyExactDivide, Examples) {
  auto ctx = gspline::testing::qq_xy();
  EXPECT_EQ(*poly_exact_divide(P("x^2 + 2*x*y + y^2", ctx), P("x+y", ctx)), P("x+y", ctx));
  EXPECT_FALSE(poly_exact_divide(P("x", ctx), P("y", ctx)).has_value());
  EXPECT_TRUE(poly_exact_divide(P("0", ctx), P("x+y", ctx))->is_zero());
  EXPECT_THROW(poly_exact_divide(P("x", ctx), P("0", ctx)), DomainError);
  auto zx = gspline::testing::zz_x();
  EXPECT_FALSE(poly_exact_divide(P("x", zx), P("2", zx)).has_value());
  EXPECT_EQ(*poly_exact_divide(P("2*x+4", zx), P("2", zx)), P("x+2", zx));
}

TEST(PolyExactDivide, RoundTripProperty) {
  Gen gen(201);
  auto ctx = gspline::testing::qq_xy();
  for (int t = 0; t < 200; ++t) {
    auto a = gen.poly(ctx, 3), b = gen.nonzero_poly(ctx, 3);
    auto q = poly_exact_divide(a * b, b);
    ASSERT_TRUE(q.has_value());
    ASSERT_EQ(*q, a);
  }
}

TEST(PolyGcd, Examples) {
  auto ctx = gspline::testing::qq_xy();
  EXPECT_EQ(poly_gcd(P("x^2*y", ctx), P("x*y^2", ctx)), P("x*y", ctx));
  EXPECT_EQ(poly_gcd(P("x+y", ctx), P("x-y", ctx)), P("1", ctx));
  EXPECT_EQ(poly_gcd(P("(x+y)^2", ctx), P("(x+y)^3", ctx)), P("(x+y)^2", ctx));
  EXPECT_EQ(poly_gcd(P("0", ctx), P("-3*x", ctx)), P("x", ctx));
  EXPECT_THROW(poly_gcd(P("0", ctx), P("0", ctx)), DomainError);
}

TEST(PolyGcd, IntegerCoefficientsKeepContent) {
  auto zx = gspline::testing::zz_x();
  EXPECT_EQ(poly_gcd(P("2*x", zx), P("4", zx)), P("2", zx));
  EXPECT_EQ(poly_gcd(P("6*x^2 - 6", zx), P("-4*x - 4", zx)), P("2*x + 2", zx));
  EXPECT_EQ(poly_gcd(P("x+1", zx), P("2", zx)), P("1", zx));
  EXPECT_EQ(poly_gcd(P("-x", zx), P("x^2", zx)), P("x", zx));
}

// Over QQ[x,y] any common divisor of x+y and x-y divides 2x and 2y, hence is
// constant; check the identity directly by evaluation at a grid of points.
TEST(PolyGcd, CoprimeLinearFormsByEvaluation) {
  auto ctx = gspline::testing::qq_xy();
  auto g = poly_gcd(P("x+y", ctx), P("x-y", ctx));
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) EXPECT_EQ(evaluate(g, {Rational(a), Rational(b)}), 1);
}

TEST(PolyGcd, DividesBothAndScales) {
  Gen gen(202);
  auto ctx = gspline::testing::qq_xy();
  PolynomialRing ring(ctx);
  for (int t = 0; t < 150; ++t) {
    auto a = gen.nonzero_poly(ctx, 3), b = gen.nonzero_poly(ctx, 3), c = gen.nonzero_poly(ctx, 2);
    auto g = poly_gcd(a, b);
    ASSERT_TRUE(ring.divides(g, a)) << a.to_string() << " | " << b.to_string();
    ASSERT_TRUE(ring.divides(g, b));
    ASSERT_TRUE(associates(ring, poly_gcd(a * c, b * c), c * g));
  }
}

TEST(PolyGcd, RecoversPlantedCommonFactor) {
  Gen gen(203);
  auto ctx = gspline::testing::qq_xy();
  PolynomialRing ring(ctx);
  for (int t = 0; t < 100; ++t) {
    auto g = gen.nonzero_poly(ctx, 2), u = gen.nonzero_poly(ctx, 2), v = gen.nonzero_poly(ctx, 2);
    auto got = poly_gcd(g * u, g * v);
    ASSERT_TRUE(ring.divides(g, got));
    ASSERT_TRUE(associates(ring, got, g * poly_gcd(u, v)));
  }
}

TEST(PolyGcd, IntegerCoefficientProperties) {
  Gen gen(204);
  auto zxy = make_context({"x", "y"}, Coefficients::Integer);
  PolynomialRing ring(zxy);
  for (int t = 0; t < 100; ++t) {
    auto a = gen.nonzero_poly(zxy, 3), b = gen.nonzero_poly(zxy, 3), c = gen.nonzero_poly(zxy, 2);
    auto g = ring.gcd(a, b);
    ASSERT_TRUE(ring.divides(g, a));
    ASSERT_TRUE(ring.divides(g, b));
    ASSERT_TRUE(associates(ring, ring.gcd(a * c, b * c), c * g));
    ASSERT_TRUE(associates(ring, g * ring.lcm(a, b), a * b));
  }
}

TEST(PolyEvaluation, Substitute) {
  auto ctx = gspline::testing::qq_xy();
  EXPECT_EQ(poly_substitute(P("(x+y)^2", ctx), {{"x", 1}, {"y", 2}}), 9);
  EXPECT_EQ(poly_substitute(P("0", ctx), {{"x", 5}, {"y", 1}}), 0);
  EXPECT_EQ(poly_substitute(P("x*y", ctx), {{"x", 3}, {"y", -3}}), -9);
  EXPECT_THROW(poly_substitute(P("x*y", ctx), {{"x", 3}}), DomainError);
}

TEST(PolyEvaluation, IsARingHomomorphism) {
  Gen gen(205);
  auto ctx = gspline::testing::qq_xy();
  for (int t = 0; t < 200; ++t) {
    auto a = gen.poly(ctx, 3), b = gen.poly(ctx, 3);
    std::vector<Rational> pt{Rational(gen.integer(-9, 9), gen.integer(1, 5)),
                             Rational(gen.integer(-9, 9), gen.integer(1, 5))};
    for (auto& q : pt) q.canonicalize();
    ASSERT_EQ(evaluate(a * b, pt), evaluate(a, pt) * evaluate(b, pt));
    ASSERT_EQ(evaluate(a + b, pt), evaluate(a, pt) + evaluate(b, pt));
  }
}

TEST(PolynomialRingObject, Basics) {
  PolynomialRing ring({"x", "y"}, Coefficients::Rational);
  EXPECT_EQ(ring.name(), "QQ[x,y]");
  EXPECT_TRUE(ring.divides(ring.parse("x+y"), ring.parse("x^2-y^2")));
  EXPECT_FALSE(ring.divides(ring.parse("x+y"), ring.parse("x^2+y^2")));
  EXPECT_EQ(ring.format(ring.lcm(ring.parse("x*y"), ring.parse("y*(x+y)"))), "x^2*y + x*y^2");
  EXPECT_TRUE(ring.is_unit(ring.parse("7/3")));
  PolynomialRing zx({"x"}, Coefficients::Integer);
  EXPECT_EQ(zx.name(), "ZZ[x]");
  EXPECT_FALSE(zx.is_unit(zx.parse("3")));
  EXPECT_EQ(zx.format(zx.normalize(zx.parse("-2*x - 2"))), "2*x + 2");
}
