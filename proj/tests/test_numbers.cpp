#include <stdexcept>

#include "doctest.h"

#include "degen/lambda_rat.hpp"
#include "degen/numbers.hpp"

using namespace degen;

namespace {

LambdaPoly poly(std::vector<Rational> coeffs) {
  return LambdaPoly(std::move(coeffs));
}

const LambdaPoly kOne{Rational(1)};

}  // namespace

TEST_CASE("degenerate harmonic numbers") {
  CHECK(deg_harmonic(0).is_zero());
  CHECK(deg_harmonic(1) == kOne);
  CHECK(deg_harmonic(2) == poly({make_rational(3, 2), make_rational(-1, 2)}));
  CHECK(deg_harmonic(3) == poly({make_rational(11, 6), Rational(-1), make_rational(1, 6)}));

  const auto table = deg_harmonic_table(12);
  for (unsigned n = 1; n <= 12; ++n) {
    CHECK(table[n] == deg_harmonic(n));
    CHECK(*table[n].degree() == n - 1);
    CHECK(table[n].eval(Rational(0)) == classical_harmonic(n));
  }
}

TEST_CASE("hyperharmonic table invariants") {
  const HyperharmonicTable table(10, 5);
  for (unsigned r = 0; r <= 5; ++r) {
    CHECK(table.at(0, r).is_zero());
  }
  for (unsigned n = 1; n <= 10; ++n) {
    const Rational sign((n % 2 == 1) ? 1 : -1);
    CHECK(table.at(n, 0) == sign * lambda_binom_over_lambda(n));
  }
  for (unsigned n = 1; n <= 10; ++n) {
    for (unsigned r = 1; r <= 5; ++r) {
      CHECK(table.at(n, r) == table.at(n - 1, r) + table.at(n, r - 1));
    }
  }
  CHECK_THROWS_AS(table.at(11, 0), std::out_of_range);
  CHECK_THROWS_AS(table.at(0, 6), std::out_of_range);
}

TEST_CASE("hyperharmonic values and route agreement") {
  CHECK(deg_hyperharmonic(0, 3).is_zero());
  for (unsigned r = 1; r <= 4; ++r) {
    CHECK(deg_hyperharmonic(1, r) == kOne);
  }
  CHECK(deg_hyperharmonic(2, 2) == poly({make_rational(5, 2), make_rational(-1, 2)}));

  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned r = 0; r <= 4; ++r) {
      const LambdaPoly by_recurrence = deg_hyperharmonic(n, r, HyperRoute::Recurrence);
      CHECK(by_recurrence == deg_hyperharmonic(n, r, HyperRoute::ClosedFormThm1));
      CHECK(by_recurrence == deg_hyperharmonic(n, r, HyperRoute::Gf));
    }
  }

  const auto harmonics = deg_harmonic_table(30);
  for (unsigned n = 0; n <= 30; ++n) {
    CHECK(deg_hyperharmonic(n, 1) == harmonics[n]);
  }
}

TEST_CASE("hyperharmonic closed rational form agrees under cross-multiplication") {
  for (unsigned n = 1; n <= 8; ++n) {
    for (unsigned r = 1; r <= 4; ++r) {
      CHECK(rf_eq(deg_hyperharmonic_closed_rat(n, r), LambdaRat{deg_hyperharmonic(n, r)}));
    }
  }
  CHECK_THROWS_AS(deg_hyperharmonic_closed_rat(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(deg_hyperharmonic_closed_rat(1, 0), std::invalid_argument);
}

TEST_CASE("degenerate Daehee numbers") {
  CHECK(deg_daehee(0) == kOne);
  CHECK(deg_daehee(1) == poly({make_rational(-1, 2), make_rational(1, 2)}));
  CHECK(deg_daehee(2).eval(Rational(0)) == make_rational(2, 3));
  for (unsigned n = 0; n <= 10; ++n) {
    CHECK(*deg_daehee(n).degree() == n);
  }
}

TEST_CASE("degenerate Daehee numbers of higher order") {
  for (unsigned r = 1; r <= 4; ++r) {
    CHECK(deg_daehee_order(0, r) == kOne);
  }
  CHECK(deg_daehee_order(1, 2) == poly({Rational(-1), Rational(1)}));
  for (unsigned n = 0; n <= 10; ++n) {
    CHECK(deg_daehee_order(n, 1) == deg_daehee(n));
  }
  CHECK_THROWS_AS(deg_daehee_order(3, 0), std::invalid_argument);

  const auto table = deg_daehee_order_table(8, 3);
  CHECK(table[0][0] == kOne);
  for (unsigned n = 1; n <= 8; ++n) CHECK(table[0][n].is_zero());
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned n = 0; n <= 8; ++n) {
      CHECK(table[r][n] == deg_daehee_order(n, r));
    }
  }
}

TEST_CASE("degenerate Stirling numbers of the first kind") {
  for (unsigned n = 0; n <= 10; ++n) {
    CHECK(deg_stirling1(n, n) == kOne);
  }
  CHECK(deg_stirling1(2, 1) == poly({Rational(-1), Rational(1)}));
  CHECK(deg_stirling1(3, 1).eval(Rational(0)) == 2);
  CHECK(deg_stirling1(2, 5).is_zero());

  const StirlingTable table(12);
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      const auto deg = table.at(n, k).degree();
      if (deg) CHECK(*deg <= n - k);
    }
  }
  CHECK(table.at(5, 9).is_zero());
  CHECK_THROWS_AS(table.at(13, 0), std::out_of_range);
}

TEST_CASE("Stirling basis gate holds through n = 12") {
  for (unsigned n = 0; n <= 12; ++n) {
    CHECK(validate_stirling_basis(n));
  }
}

TEST_CASE("degenerate derangement numbers") {
  CHECK(deg_derangement(0) == kOne);
  CHECK(deg_derangement(1).is_zero());
  CHECK(deg_derangement(2) == poly({Rational(1), Rational(-1)}));

  const std::vector<long> classical{1, 0, 1, 2, 9, 44};
  for (unsigned n = 0; n < classical.size(); ++n) {
    CHECK(deg_derangement(n).eval(Rational(0)) == Rational(classical[n]));
    CHECK(classical_derangement(n) == Rational(classical[n]));
  }
}

TEST_CASE("classical oracles") {
  CHECK(classical_harmonic(0) == 0);
  CHECK(classical_harmonic(3) == make_rational(11, 6));

  CHECK(classical_hyperharmonic(2, 2) == make_rational(5, 2));
  CHECK(classical_hyperharmonic(0, 3) == 0);
  CHECK(classical_hyperharmonic(4, 0) == make_rational(1, 4));
  CHECK(classical_hyperharmonic(3, 1) == classical_harmonic(3));

  CHECK(classical_daehee(0) == 1);
  CHECK(classical_daehee(1) == make_rational(-1, 2));
  CHECK(classical_daehee(2) == make_rational(2, 3));

  for (unsigned n = 0; n <= 10; ++n) {
    CHECK(classical_daehee_order(n, 1) == classical_daehee(n));
  }
  CHECK_THROWS_AS(classical_daehee_order(3, 0), std::invalid_argument);

  CHECK(classical_stirling1(0, 0) == 1);
  CHECK(classical_stirling1(2, 1) == -1);
  CHECK(classical_stirling1(3, 1) == 2);
  CHECK(classical_stirling1(3, 5) == 0);

  CHECK(classical_derangement(4) == 9);
}

TEST_CASE("classical oracle dispatch") {
  CHECK(classical_oracle(Family::DegHarmonic, {.n = 3}) == make_rational(11, 6));
  CHECK(classical_oracle(Family::DegHyperharmonic, {.n = 2, .r = 2}) == make_rational(5, 2));
  CHECK(classical_oracle(Family::DegStirling1, {.n = 3, .k = 1}) == 2);
  CHECK_THROWS_AS(classical_oracle(Family::DegHyperharmonic, {.n = 2}), std::invalid_argument);
  CHECK_THROWS_AS(classical_oracle(Family::DegStirling1, {.n = 2}), std::invalid_argument);
}

TEST_CASE("evaluation at zero matches the classical oracles") {
  for (unsigned n = 0; n <= 15; ++n) {
    CHECK(deg_harmonic(n).eval(Rational(0)) == classical_harmonic(n));
    CHECK(deg_daehee(n).eval(Rational(0)) == classical_daehee(n));
    CHECK(deg_derangement(n).eval(Rational(0)) == classical_derangement(n));
    for (unsigned r = 0; r <= 4; ++r) {
      CHECK(deg_hyperharmonic(n, r).eval(Rational(0)) == classical_hyperharmonic(n, r));
    }
    for (unsigned r = 1; r <= 4; ++r) {
      CHECK(deg_daehee_order(n, r).eval(Rational(0)) == classical_daehee_order(n, r));
    }
    for (unsigned k = 0; k <= n && k <= 4; ++k) {
      CHECK(deg_stirling1(n, k).eval(Rational(0)) == classical_stirling1(n, k));
    }
  }
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::DegHarmonic, Family::DegHyperharmonic, Family::DegDaehee,
                   Family::DegDaeheeOrder, Family::DegStirling1, Family::DegDerangement}) {
    CHECK(family_from_string(to_string(f)) == f);
  }
  CHECK_FALSE(family_from_string("harmonic").has_value());
}

TEST_CASE("family value dispatch") {
  CHECK(family_value(Family::DegHarmonic, {.n = 2}) ==
        poly({make_rational(3, 2), make_rational(-1, 2)}));
  CHECK(family_value(Family::DegStirling1, {.n = 2, .k = 1}) == poly({Rational(-1), Rational(1)}));
  CHECK_THROWS_AS(family_value(Family::DegDaeheeOrder, {.n = 2}), std::invalid_argument);
}
