#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "degen/lambda_poly.hpp"
#include "degen/lambda_rat.hpp"
#include "degen/rational.hpp"
#include "random_values.hpp"

using namespace degen;
using degen::testing::random_poly;
using degen::testing::random_rational;

namespace {

LambdaPoly poly(std::vector<Rational> coeffs) {
  return LambdaPoly(std::move(coeffs));
}

const LambdaPoly kLambda = LambdaPoly::lambda();
const LambdaPoly kOne{Rational(1)};

}  // namespace

TEST_CASE("rational canonical text form") {
  CHECK(to_string(make_rational(-3, 2)) == "-3/2");
  CHECK(to_string(make_rational(7, 1)) == "7");
  CHECK(to_string(make_rational(0, 5)) == "0");
  CHECK(to_string(make_rational(2, 4)) == "1/2");
  CHECK(to_string(make_rational(1, -2)) == "-1/2");  // sign moves to the numerator
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-3/2") == make_rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK(parse_rational("+5") == Rational(5));
  CHECK(parse_rational("2/4") == make_rational(1, 2));
  CHECK(parse_rational("0/9") == Rational(0));

  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1//2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("rational text round-trips bit-exactly") {
  std::mt19937 rng(20240817);
  for (int i = 0; i < 200; ++i) {
    const Rational q = random_rational(rng);
    const std::string text = to_string(q);
    CHECK(parse_rational(text) == q);
    CHECK(to_string(parse_rational(text)) == text);
  }
}

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(falling_factorial_int(3, 3) == 6);
  CHECK(falling_factorial_int(0, 0) == 1);
  CHECK(falling_factorial_int(0, 2) == 0);
  CHECK(falling_factorial_int(5, 2) == 20);
  CHECK(int_pow(2, 10) == 1024);
  CHECK(int_pow(7, 0) == 1);
}

TEST_CASE("polynomial arithmetic examples") {
  const LambdaPoly a = poly({Rational(-1), Rational(1)});  // λ-1
  const LambdaPoly b = poly({Rational(1), Rational(1)});   // λ+1
  CHECK(a + b == LambdaPoly::monomial(1, Rational(2)));

  const LambdaPoly c = poly({Rational(-2), Rational(1)});  // λ-2
  CHECK(a * c == poly({Rational(2), Rational(-3), Rational(1)}));

  CHECK((a * LambdaPoly{}).is_zero());
  CHECK(LambdaPoly{}.degree() == std::nullopt);
  CHECK(poly({Rational(1), Rational(0)}) == kOne);  // trailing zeros trimmed
}

TEST_CASE("product degree is additive for nonzero operands") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const LambdaPoly a = random_poly(rng, 8);
    const LambdaPoly b = random_poly(rng, 8);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(*(a * b).degree() == *a.degree() + *b.degree());
  }
}

TEST_CASE("Horner evaluation") {
  CHECK(poly({Rational(2), Rational(-3), Rational(1)}).eval(Rational(0)) == 2);
  CHECK(poly({make_rational(3, 2), make_rational(-1, 2)}).eval(Rational(0)) == make_rational(3, 2));
  CHECK(poly({Rational(-1), Rational(1)}).eval(Rational(1)) == 0);
}

TEST_CASE("ring axioms hold on random polynomials") {
  std::mt19937 rng(42);
  for (int i = 0; i < 100; ++i) {
    const LambdaPoly a = random_poly(rng, 10);
    const LambdaPoly b = random_poly(rng, 10);
    const LambdaPoly c = random_poly(rng, 10);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(99);
  for (int i = 0; i < 60; ++i) {
    const LambdaPoly p = random_poly(rng, 8);
    const LambdaPoly q = random_poly(rng, 8);
    const Rational at = random_rational(rng);
    CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
    CHECK((p + q).eval(at) == p.eval(at) + q.eval(at));
  }
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(kLambda, 0) == kOne);
  CHECK(falling_factorial(kLambda - kOne, 2) == poly({Rational(2), Rational(-3), Rational(1)}));
  CHECK(falling_factorial(kLambda, 3).eval(Rational(3)) == 6);
}

TEST_CASE("degenerate falling factorial") {
  CHECK(deg_falling_factorial(kOne, 2) == poly({Rational(1), Rational(-1)}));  // 1-λ
  // (λ-1)(λ-1-λ) = -(λ-1) = 1-λ
  CHECK(deg_falling_factorial(kLambda - kOne, 2) == poly({Rational(1), Rational(-1)}));

  for (long x0 = -3; x0 <= 5; ++x0) {
    for (unsigned n = 0; n <= 6; ++n) {
      const LambdaPoly value = deg_falling_factorial(LambdaPoly(Rational(x0)), n);
      // At λ=0 every step term vanishes and the product collapses to x0^n.
      Rational power(1);
      for (unsigned j = 0; j < n; ++j) power *= Rational(x0);
      CHECK(value.eval(Rational(0)) == power);
      // At unit step it is the ordinary falling factorial.
      CHECK(value.eval(Rational(1)) == Rational(falling_factorial_int(x0, n)));
    }
  }
}

TEST_CASE("binomial coefficient over lambda") {
  CHECK(lambda_binom_over_lambda(1) == kOne);
  CHECK(lambda_binom_over_lambda(2) == poly({make_rational(-1, 2), make_rational(1, 2)}));
  CHECK(lambda_binom_over_lambda(3) ==
        poly({make_rational(1, 3), make_rational(-1, 2), make_rational(1, 6)}));
  CHECK_THROWS_AS(lambda_binom_over_lambda(0), std::invalid_argument);

  for (unsigned k = 1; k <= 20; ++k) {
    const LambdaPoly expanded = falling_factorial(kLambda, k) * make_rational(1, factorial(k));
    CHECK(lambda_binom(k) == expanded);
    CHECK(lambda_binom_over_lambda(k) * kLambda == expanded);
    CHECK(lambda_binom_over_lambda(k) ==
          falling_factorial(kLambda - kOne, k - 1) * make_rational(1, factorial(k)));
  }
}

TEST_CASE("division by lambda requires zero constant term") {
  CHECK_THROWS_AS(kOne.shifted_down(), std::domain_error);
  CHECK(LambdaPoly{}.shifted_down().is_zero());
  CHECK(LambdaPoly::monomial(2).shifted_down() == kLambda);
}

TEST_CASE("rational function cross-multiplication equality") {
  const LambdaRat half_a{kLambda, LambdaPoly::monomial(1, Rational(2))};
  const LambdaRat half_b{kOne, LambdaPoly(Rational(2))};
  CHECK(rf_eq(half_a, half_b));

  CHECK_FALSE(rf_eq(LambdaRat{kLambda - kOne}, LambdaRat{kLambda - LambdaPoly(Rational(2))}));

  const LambdaRat quotient{lambda_binom(3), lambda_binom(1)};
  const LambdaRat expanded{falling_factorial(kLambda - kOne, 2) * make_rational(1, 6)};
  CHECK(rf_eq(quotient, expanded));

  CHECK_THROWS_AS(LambdaRat(kOne, LambdaPoly{}), std::invalid_argument);
}

TEST_CASE("polynomial canonical text form") {
  CHECK(to_string(LambdaPoly{}) == "[]");
  CHECK(to_string(poly({make_rational(3, 2), make_rational(-1, 2)})) == "[3/2, -1/2]");
  CHECK(to_string(kOne) == "[1]");
}

TEST_CASE("polynomial parsing") {
  CHECK(parse_lambda_poly("[]").is_zero());
  CHECK(parse_lambda_poly("[ ]").is_zero());
  CHECK(parse_lambda_poly("[3/2, -1/2]") == poly({make_rational(3, 2), make_rational(-1, 2)}));
  CHECK(parse_lambda_poly("[3/2,-1/2]") == poly({make_rational(3, 2), make_rational(-1, 2)}));
  CHECK(parse_lambda_poly("[1, 0]") == kOne);  // canonicalized on input

  CHECK_THROWS_AS(parse_lambda_poly(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_lambda_poly("["), std::invalid_argument);
  CHECK_THROWS_AS(parse_lambda_poly("1, 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lambda_poly("[1,]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lambda_poly("[x]"), std::invalid_argument);
}

TEST_CASE("polynomial text round-trips bit-exactly") {
  std::mt19937 rng(20240818);
  for (int i = 0; i < 100; ++i) {
    const LambdaPoly p = random_poly(rng, 12);
    const std::string text = to_string(p);
    CHECK(parse_lambda_poly(text) == p);
    CHECK(to_string(parse_lambda_poly(text)) == text);
  }
}
