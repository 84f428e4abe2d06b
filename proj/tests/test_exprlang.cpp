#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "frost/exprlang.hpp"

using frost::Expression;

TEST_CASE("basic evaluation") {
  CHECK(Expression::parse("0.5*exp(-2*x)").eval(0.0) == doctest::Approx(0.5));
  CHECK(Expression::parse("x^2 - x/3").eval(3.0) == doctest::Approx(8.0));
  CHECK(Expression::parse("1 + 0.8*x - 0.1*x^2").eval(2.0) ==
        doctest::Approx(2.2));
  CHECK(Expression::parse("exp(-x)+x^2/4").eval(0.0) == doctest::Approx(1.0));
}

TEST_CASE("precedence and associativity") {
  CHECK(Expression::parse("2-3-4").eval(0.0) == doctest::Approx(-5.0));
  CHECK(Expression::parse("2^3^2").eval(0.0) == doctest::Approx(512.0));
  CHECK(Expression::parse("-x^2").eval(3.0) == doctest::Approx(-9.0));
  CHECK(Expression::parse("2*x^2").eval(3.0) == doctest::Approx(18.0));
  CHECK(Expression::parse("6/3/2").eval(0.0) == doctest::Approx(1.0));
  CHECK(Expression::parse("(-2)^2").eval(0.0) == doctest::Approx(4.0));
}

TEST_CASE("dual evaluation closed cases") {
  auto d1 = Expression::parse("exp(-x)").eval_dual(0.0);
  CHECK(d1.primal == doctest::Approx(1.0));
  CHECK(d1.tangent == doctest::Approx(-1.0));

  auto d2 = Expression::parse("x^2").eval_dual(0.5);
  CHECK(d2.primal == doctest::Approx(0.25));
  CHECK(d2.tangent == doctest::Approx(1.0));

  auto d3 = Expression::parse("sin(x)*cos(x)").eval_dual(0.7);
  CHECK(d3.tangent == doctest::Approx(std::cos(1.4)));

  auto d4 = Expression::parse("sqrt(x)").eval_dual(4.0);
  CHECK(d4.primal == doctest::Approx(2.0));
  CHECK(d4.tangent == doctest::Approx(0.25));

  auto d5 = Expression::parse("x^x").eval_dual(2.0);
  CHECK(d5.primal == doctest::Approx(4.0));
  CHECK(d5.tangent == doctest::Approx(4.0 * (std::log(2.0) + 1.0)));
}

TEST_CASE("parse errors carry a position") {
  try {
    Expression::parse("exp(");
    FAIL("expected ParseError");
  } catch (const frost::ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
  CHECK_THROWS_AS(Expression::parse(""), frost::ParseError);
  CHECK_THROWS_AS(Expression::parse("1 + "), frost::ParseError);
  CHECK_THROWS_AS(Expression::parse("(1+2"), frost::ParseError);
  CHECK_THROWS_AS(Expression::parse("1 2"), frost::ParseError);
  try {
    Expression::parse("foo(x)");
    FAIL("expected ParseError");
  } catch (const frost::ParseError& e) {
    CHECK(std::string(e.what()).find("foo") != std::string::npos);
  }
}

TEST_CASE("evaluation domain errors") {
  CHECK_THROWS_AS(Expression::parse("1/x").eval(0.0), frost::EvalError);
  CHECK_THROWS_AS(Expression::parse("ln(x)").eval(0.0), frost::EvalError);
  CHECK_THROWS_AS(Expression::parse("ln(x-2)").eval(1.0), frost::EvalError);
  CHECK_THROWS_AS(Expression::parse("sqrt(x-1)").eval(0.5), frost::EvalError);
  // nondifferentiable points are errors in dual mode
  CHECK_THROWS_AS(Expression::parse("abs(x)").eval_dual(0.0),
                  frost::EvalError);
  CHECK(Expression::parse("abs(x)").eval_dual(-2.0).tangent ==
        doctest::Approx(-1.0));
  CHECK_THROWS_AS(Expression::parse("sqrt(x)").eval_dual(0.0),
                  frost::EvalError);
  // non-constant exponent requires a positive base
  CHECK_THROWS_AS(Expression::parse("x^x").eval_dual(-1.0), frost::EvalError);
  CHECK_THROWS_AS(Expression::parse("x^x").eval(-0.5), frost::EvalError);
  // negative base with fractional constant exponent has no real value
  CHECK_THROWS_AS(Expression::parse("(-2)^0.5").eval(0.0), frost::EvalError);
}

TEST_CASE("pretty print round-trips") {
  for (const char* text :
       {"0.5*exp(-2*x)", "x^2 - x/3", "2-3-4", "2^3^2", "-x^2",
        "(x+1)*(x-1)", "abs(sin(x))/(2+cos(x))", "x^(1/3)", "2/(3*x)",
        "1 + 0.8*x - 0.1*x^2"}) {
    std::string once = Expression::parse(text).pretty();
    std::string twice = Expression::parse(once).pretty();
    CHECK(once == twice);
    // the printed form evaluates identically
    CHECK(Expression::parse(once).eval(1.7) ==
          doctest::Approx(Expression::parse(text).eval(1.7)).epsilon(1e-14));
  }
}

namespace {

// Random expression trees over safe-domain operations; ln/sqrt/abs are
// exercised through guarded compositions that keep arguments positive.
std::string random_tree(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 9);
  std::uniform_real_distribution<double> cdist(0.2, 3.0);
  switch (pick(rng)) {
    case 0:
      return "x";
    case 1:
    case 2: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", cdist(rng));
      return buf;
    }
    case 3:
      return "(" + random_tree(rng, depth - 1) + "+" +
             random_tree(rng, depth - 1) + ")";
    case 4:
      return "(" + random_tree(rng, depth - 1) + "-" +
             random_tree(rng, depth - 1) + ")";
    case 5:
      return "(" + random_tree(rng, depth - 1) + "*" +
             random_tree(rng, depth - 1) + ")";
    case 6:
      return "sin(" + random_tree(rng, depth - 1) + ")";
    case 7:
      return "cos(" + random_tree(rng, depth - 1) + ")";
    case 8:
      return "exp(-(" + random_tree(rng, depth - 1) + ")^2)";
    default:
      return "ln(1+abs(" + random_tree(rng, depth - 1) + "))";
  }
}

}  // namespace

TEST_CASE("tangent agrees with central differences on random trees") {
  std::mt19937_64 rng(20260815);
  std::uniform_real_distribution<double> xdist(0.15, 2.5);
  int checked = 0;
  int attempts = 0;
  while (checked < 1000 && attempts < 20000) {
    ++attempts;
    std::string text = random_tree(rng, 3);
    double x = xdist(rng);
    Expression expr = Expression::parse(text);
    double h = 1e-6;
    double tangent, fd;
    try {
      tangent = expr.eval_dual(x).tangent;
      fd = (expr.eval(x + h) - expr.eval(x - h)) / (2 * h);
    } catch (const frost::EvalError&) {
      continue;  // nondifferentiable sample (abs at 0); draw again
    }
    if (!std::isfinite(tangent) || !std::isfinite(fd)) continue;
    CHECK(std::fabs(tangent - fd) <= 1e-5 * std::max(1.0, std::fabs(tangent)));
    // round-trip stability on the same tree
    std::string once = expr.pretty();
    CHECK(Expression::parse(once).pretty() == once);
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("depends_on_x") {
  CHECK(Expression::parse("x^2").depends_on_x());
  CHECK_FALSE(Expression::parse("3*(2+1)").depends_on_x());
}
