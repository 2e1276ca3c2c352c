#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "degen/lambda_poly.hpp"

namespace degen {

/// Substituting a series with nonzero constant term is rejected with this.
struct InvalidComposition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Truncated formal power series in t with LambdaPoly coefficients.
/// Holds exactly `order` coefficients t^0 .. t^{order-1}, zero-padded.
/// Coefficients are ordinary (no factorial scaling); exponential-type
/// series are compared through an explicit n! factor at the comparison
/// site.
class TruncSeries {
 public:
  /// Zero series of the given order; order must be >= 1.
  explicit TruncSeries(std::size_t order);
  /// Coefficients padded or truncated to exactly `order` entries.
  TruncSeries(std::vector<LambdaPoly> coeffs, std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  /// Throws std::out_of_range when n >= order.
  const LambdaPoly& coeff(std::size_t n) const;
  void set_coeff(std::size_t n, LambdaPoly value);
  bool is_zero() const;

  TruncSeries truncated(std::size_t order) const;
  /// count-fold termwise derivative; result order shrinks by count.
  /// Throws std::domain_error when count >= order (empty result).
  TruncSeries derive(std::size_t count) const;
  /// Termwise antiderivative with zero constant term; order grows by one.
  TruncSeries integrate() const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& other);
  TruncSeries& operator-=(const TruncSeries& other);

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

 private:
  std::vector<LambdaPoly> coeffs_;
};

// Arithmetic truncates to the smaller operand order.
TruncSeries operator+(TruncSeries a, const TruncSeries& b);
TruncSeries operator-(TruncSeries a, const TruncSeries& b);
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

TruncSeries pow(const TruncSeries& base, unsigned exponent);

/// outer(inner), Horner style, truncated to the smaller order. Requires a
/// zero inner constant term; throws InvalidComposition otherwise.
TruncSeries compose(const TruncSeries& outer, const TruncSeries& inner);

/// Degenerate logarithm log_λ(1 + sign·t): the t^k coefficient is
/// sign^k · (λ-1)(λ-2)...(λ-k+1)/k!.
TruncSeries make_deg_log(int sign, std::size_t order);

/// log_λ(1+t)/t by index shift (no Laurent term is ever materialized).
TruncSeries make_deg_log_over_t(std::size_t order);

/// Degenerate exponential e_λ^x(sign·t): the t^n coefficient is
/// sign^n · x(x-λ)...(x-(n-1)λ)/n!.
TruncSeries make_deg_exp(const LambdaPoly& x, int sign, std::size_t order);

/// r < 0: (1-t)^r with coefficients binom(k-r-1, k);
/// r >= 0: (1+t)^r, a zero-padded finite expansion with coefficients binom(r,l).
TruncSeries make_binomial_power(long r, std::size_t order);

/// Debug form: one line per coefficient, "n: [c0, c1, ...]".
std::string to_string(const TruncSeries& s);

}  // namespace degen
