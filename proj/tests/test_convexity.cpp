#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "frost/convexity.hpp"

using frost::check_alpha_m_convex;
using frost::check_alpha_m_log_convex;
using frost::check_m_convex;
using frost::check_m_log_convex;
using frost::check_starshaped;
using frost::GridSpec;
using frost::MembershipReport;

namespace {

// Re-evaluates the defining inequality at a report's witness; a sound
// witness reproduces a violation of at least worst_violation - tol.
double log_class_violation(const std::function<double(double)>& g,
                           double alpha, double m,
                           const frost::ConvexityWitness& w) {
  double ta = std::pow(w.t, alpha);
  double z = w.t * w.x + m * (1 - w.t) * w.y;
  return std::log(g(z)) - (ta * std::log(g(w.x)) + m * (1 - ta) * std::log(g(w.y)));
}

double linear_class_violation(const std::function<double(double)>& g,
                              double alpha, double m,
                              const frost::ConvexityWitness& w) {
  double ta = std::pow(w.t, alpha);
  double z = w.t * w.x + m * (1 - w.t) * w.y;
  return g(z) - (ta * g(w.x) + m * (1 - ta) * g(w.y));
}

}  // namespace

TEST_CASE("log-linear functions are log-convex at alpha = 1") {
  auto g = [](double x) { return std::exp(-x); };
  auto rep = check_alpha_m_log_convex(g, 2.0, 1.0, 1.0);
  CHECK(rep.holds);
  CHECK(rep.worst_violation <= frost::kDefaultMembershipTol);
  CHECK_FALSE(rep.witness.has_value());
  CHECK(rep.samples_checked == 33L * 33L * 33L);
}

TEST_CASE("exp(-x) leaves the class when alpha < 1") {
  // violation = (1-t^alpha)(1-m) ln g0 + (t^alpha - t)(x - m y) with
  // g = g0 e^(-x); the second term is positive whenever x > m y.
  auto g = [](double x) { return 0.8 * std::exp(-x); };
  auto rep = check_alpha_m_log_convex(g, 2.0, 0.5, 0.5, {21, 21, 21});
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.worst_violation > 0.4);
  CHECK(log_class_violation(g, 0.5, 0.5, *rep.witness) >=
        rep.worst_violation - frost::kDefaultMembershipTol);
  // worst sampled point maximizes (t^0.5 - t) x at y = 0
  CHECK(rep.witness->x == doctest::Approx(2.0));
  CHECK(rep.witness->y == doctest::Approx(0.0));
}

TEST_CASE("constants and the m exponent") {
  // g = c: the inequality reads c <= c^(t^a + m(1-t^a)); the exponent is
  // <= 1, so it holds iff c <= 1.
  auto half = [](double) { return 0.5; };
  for (double m : {0.25, 0.7, 1.0})
    CHECK(check_m_log_convex(half, 1.0, m).holds);

  auto two = [](double) { return 2.0; };
  auto rep = check_m_log_convex(two, 1.0, 0.5);
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->t == doctest::Approx(0.0));
  CHECK(rep.worst_violation == doctest::Approx(0.5 * std::log(2.0)));
  CHECK(log_class_violation(two, 1.0, 0.5, *rep.witness) >=
        rep.worst_violation - frost::kDefaultMembershipTol);
}

TEST_CASE("log-concave counterexample yields a witness") {
  auto g = [](double x) { return 2.0 - x; };
  auto rep = check_m_log_convex(g, 1.0, 1.0);
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.witness.has_value());
  CHECK(log_class_violation(g, 1.0, 1.0, *rep.witness) >=
        rep.worst_violation - frost::kDefaultMembershipTol);
}

TEST_CASE("positivity is enforced for log classes") {
  auto g = [](double x) { return 2.0 - x; };
  CHECK_THROWS_AS(check_m_log_convex(g, 4.0, 1.0), std::domain_error);
}

TEST_CASE("linear g under the linear-space classes") {
  auto id = [](double x) { return x; };
  // alpha = 1: both sides agree exactly for every m
  for (double m : {0.25, 0.5, 1.0}) CHECK(check_m_convex(id, 1.0, m).holds);
  // alpha < 1: (t^alpha - t)(m y - x) > 0 once m y > x
  auto rep = check_alpha_m_convex(id, 1.0, 0.5, 1.0, {33, 33, 33});
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->x == doctest::Approx(0.0));
  CHECK(rep.witness->y == doctest::Approx(1.0));
  CHECK(rep.witness->t == doctest::Approx(0.25));
  CHECK(rep.worst_violation == doctest::Approx(0.25));
  CHECK(linear_class_violation(id, 0.5, 1.0, *rep.witness) >=
        rep.worst_violation - frost::kDefaultMembershipTol);
}

TEST_CASE("ordinary convexity cases") {
  auto sq = [](double x) { return x * x; };
  CHECK(check_alpha_m_convex(sq, 1.0, 1.0, 1.0).holds);
  auto root = [](double x) { return std::sqrt(x); };
  auto rep = check_alpha_m_convex(root, 1.0, 1.0, 1.0);
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.witness.has_value());
  CHECK(linear_class_violation(root, 1.0, 1.0, *rep.witness) >=
        rep.worst_violation - frost::kDefaultMembershipTol);
}

TEST_CASE("starshaped checks") {
  auto id = [](double x) { return x; };
  CHECK(check_starshaped(id, 1.0).holds);
  auto sq = [](double x) { return x * x; };
  CHECK(check_starshaped(sq, 1.0).holds);
  auto shifted = [](double x) { return x + 1.0; };
  auto rep = check_starshaped(shifted, 1.0);
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->t == doctest::Approx(0.0));
  CHECK(rep.worst_violation == doctest::Approx(1.0));
  // witness carries y = x
  CHECK(rep.witness->y == doctest::Approx(rep.witness->x));
}

TEST_CASE("reduction chain is bit-for-bit") {
  auto battery = {
      std::function<double(double)>([](double x) { return x * x; }),
      std::function<double(double)>([](double x) { return std::sqrt(x); }),
      std::function<double(double)>([](double x) { return std::exp(x) - 1; }),
      std::function<double(double)>([](double x) { return 2 * x + 0.3; }),
      std::function<double(double)>([](double x) { return std::cos(x); }),
  };
  for (const auto& g : battery) {
    auto a = check_alpha_m_convex(g, 1.5, 1.0, 1.0);
    auto b = check_m_convex(g, 1.5, 1.0);
    CHECK(a.holds == b.holds);
    CHECK(a.worst_violation == b.worst_violation);
    CHECK(a.samples_checked == b.samples_checked);
    CHECK(a.witness.has_value() == b.witness.has_value());
    if (a.witness && b.witness) {
      CHECK(a.witness->x == b.witness->x);
      CHECK(a.witness->y == b.witness->y);
      CHECK(a.witness->t == b.witness->t);
    }
  }
  auto pos = [](double x) { return std::exp(x) + 0.5; };
  auto la = check_alpha_m_log_convex(pos, 1.5, 1.0, 0.75);
  auto lb = check_m_log_convex(pos, 1.5, 0.75);
  CHECK(la.holds == lb.holds);
  CHECK(la.worst_violation == lb.worst_violation);
}

TEST_CASE("worst violation grows along nested grids") {
  auto g = [](double x) { return std::sqrt(x); };
  double v17 = check_alpha_m_convex(g, 1.0, 1.0, 1.0, {17, 17, 17})
                   .worst_violation;
  double v33 = check_alpha_m_convex(g, 1.0, 1.0, 1.0, {33, 33, 33})
                   .worst_violation;
  CHECK(v17 <= v33);
  CHECK(v33 > 0.0);
}

TEST_CASE("grid and parameter gates") {
  auto id = [](double x) { return x; };
  CHECK_THROWS_AS(check_m_convex(id, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(check_m_convex(id, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(check_m_convex(id, 1.0, 1.5), std::domain_error);
  CHECK_THROWS_AS(check_alpha_m_convex(id, 1.0, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(check_m_convex(id, 1.0, 1.0, {1, 33, 33}),
                  std::domain_error);
}
