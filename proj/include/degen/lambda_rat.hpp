#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "degen/lambda_poly.hpp"

namespace degen {

/// Quotient of two λ-polynomials. Never normalized by polynomial gcd;
/// equality is by cross-multiplication only.
struct LambdaRat {
  LambdaPoly num;
  LambdaPoly den;

  LambdaRat(LambdaPoly numerator, LambdaPoly denominator)
      : num(std::move(numerator)), den(std::move(denominator)) {
    if (den.is_zero()) {
      throw std::invalid_argument("rational function with zero denominator");
    }
  }

  explicit LambdaRat(LambdaPoly numerator)
      : LambdaRat(std::move(numerator), LambdaPoly(Rational(1))) {}
};

/// a/b == c/d  iff  a·d == c·b.
inline bool rf_eq(const LambdaRat& a, const LambdaRat& b) {
  return a.num * b.den == b.num * a.den;
}

inline std::string to_string(const LambdaRat& r) {
  return to_string(r.num) + " / " + to_string(r.den);
}

}  // namespace degen
