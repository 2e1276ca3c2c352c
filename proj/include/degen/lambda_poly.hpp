#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degen/rational.hpp"

namespace degen {

/// Dense univariate polynomial in the degeneracy parameter with exact
/// rational coefficients, stored ascending. Canonical form: no trailing
/// zero coefficients; the zero polynomial is the empty list, and its
/// degree is std::nullopt rather than any integer.
class LambdaPoly {
 public:
  LambdaPoly() = default;
  explicit LambdaPoly(Rational constant);
  explicit LambdaPoly(std::vector<Rational> coeffs);

  /// The monomial λ.
  static LambdaPoly lambda();
  /// coeff · λ^degree.
  static LambdaPoly monomial(std::size_t degree, Rational coeff = Rational(1));

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  /// Coefficient of λ^i; zero beyond the stored length.
  const Rational& coeff(std::size_t i) const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Exact Horner evaluation.
  Rational eval(const Rational& at) const;

  /// Exact division by λ. Throws std::domain_error when the constant term
  /// is nonzero.
  LambdaPoly shifted_down() const;

  LambdaPoly operator-() const;
  LambdaPoly& operator+=(const LambdaPoly& other);
  LambdaPoly& operator-=(const LambdaPoly& other);
  LambdaPoly& operator*=(const LambdaPoly& other);
  LambdaPoly& operator*=(const Rational& scalar);

  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b);
LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b);
LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
LambdaPoly operator*(LambdaPoly p, const Rational& scalar);
LambdaPoly operator*(const Rational& scalar, LambdaPoly p);

/// x(x-1)...(x-n+1); the constant polynomial 1 for n = 0.
LambdaPoly falling_factorial(const LambdaPoly& x, unsigned n);

/// Degenerate falling factorial x(x-λ)(x-2λ)...(x-(n-1)λ); 1 for n = 0.
LambdaPoly deg_falling_factorial(const LambdaPoly& x, unsigned n);

/// binom(λ,k) = λ(λ-1)...(λ-k+1)/k! as a polynomial in λ.
LambdaPoly lambda_binom(unsigned k);

/// binom(λ,k)/λ for k >= 1. Exact: binom(λ,k) has zero constant term, so
/// the division is a coefficient shift, never rational-function division.
LambdaPoly lambda_binom_over_lambda(unsigned k);

/// Canonical text form "[c0, c1, ...]" in ascending powers; "[]" for zero.
std::string to_string(const LambdaPoly& p);

/// Parses the bracketed ascending coefficient list; whitespace tolerant;
/// trailing zero coefficients are trimmed to canonical form.
LambdaPoly parse_lambda_poly(std::string_view text);

}  // namespace degen
