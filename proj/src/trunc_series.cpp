#include "degen/trunc_series.hpp"

#include <algorithm>
#include <utility>

namespace degen {

TruncSeries::TruncSeries(std::size_t order) {
  if (order == 0) {
    throw std::invalid_argument("series order must be positive");
  }
  coeffs_.resize(order);
}

TruncSeries::TruncSeries(std::vector<LambdaPoly> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
  if (order == 0) {
    throw std::invalid_argument("series order must be positive");
  }
  coeffs_.resize(order);
}

const LambdaPoly& TruncSeries::coeff(std::size_t n) const {
  if (n >= coeffs_.size()) {
    throw std::out_of_range("series coefficient index " + std::to_string(n) +
                            " out of range for order " + std::to_string(coeffs_.size()));
  }
  return coeffs_[n];
}

void TruncSeries::set_coeff(std::size_t n, LambdaPoly value) {
  if (n >= coeffs_.size()) {
    throw std::out_of_range("series coefficient index out of range");
  }
  coeffs_[n] = std::move(value);
}

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LambdaPoly& c) { return c.is_zero(); });
}

TruncSeries TruncSeries::truncated(std::size_t order) const {
  return TruncSeries(coeffs_, order);
}

TruncSeries TruncSeries::derive(std::size_t count) const {
  if (count >= order()) {
    throw std::domain_error("derivative of order " + std::to_string(count) +
                            " empties a series of order " + std::to_string(order()));
  }
  TruncSeries out(order() - count);
  for (std::size_t n = count; n < order(); ++n) {
    Rational scale(1);
    for (std::size_t j = 0; j < count; ++j) scale *= Rational(static_cast<unsigned long>(n - j));
    out.coeffs_[n - count] = coeffs_[n] * scale;
  }
  return out;
}

TruncSeries TruncSeries::integrate() const {
  TruncSeries out(order() + 1);
  for (std::size_t n = 0; n < order(); ++n) {
    out.coeffs_[n + 1] = coeffs_[n] * make_rational(1, Int(static_cast<unsigned long>(n + 1)));
  }
  return out;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
  coeffs_.resize(std::min(order(), other.order()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
  coeffs_.resize(std::min(order(), other.order()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

TruncSeries operator+(TruncSeries a, const TruncSeries& b) {
  a += b;
  return a;
}

TruncSeries operator-(TruncSeries a, const TruncSeries& b) {
  a -= b;
  return a;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t T = std::min(a.order(), b.order());
  std::vector<LambdaPoly> out(T);
  for (std::size_t i = 0; i < T; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (std::size_t j = 0; i + j < T; ++j) {
      if (b.coeff(j).is_zero()) continue;
      out[i + j] += a.coeff(i) * b.coeff(j);
    }
  }
  return TruncSeries(std::move(out), T);
}

TruncSeries pow(const TruncSeries& base, unsigned exponent) {
  TruncSeries out(base.order());
  out.set_coeff(0, LambdaPoly(Rational(1)));
  for (unsigned i = 0; i < exponent; ++i) out = out * base;
  return out;
}

TruncSeries compose(const TruncSeries& outer, const TruncSeries& inner) {
  if (!inner.coeff(0).is_zero()) {
    throw InvalidComposition("series composition requires a zero inner constant term");
  }
  const std::size_t T = std::min(outer.order(), inner.order());
  const TruncSeries arg = inner.truncated(T);
  TruncSeries acc(T);
  for (std::size_t k = T; k-- > 0;) {
    acc = acc * arg;
    acc.set_coeff(0, acc.coeff(0) + outer.coeff(k));
  }
  return acc;
}

TruncSeries make_deg_log(int sign, std::size_t order) {
  TruncSeries out(order);
  LambdaPoly rising{Rational(1)};  // (λ-1)(λ-2)...(λ-k+1), grown incrementally
  Rational scale(1);               // sign^k / k!
  for (std::size_t k = 1; k < order; ++k) {
    if (k > 1) rising *= LambdaPoly::lambda() - LambdaPoly(Rational(static_cast<long>(k) - 1));
    scale *= make_rational(Int(sign), Int(static_cast<unsigned long>(k)));
    out.set_coeff(k, rising * scale);
  }
  return out;
}

TruncSeries make_deg_log_over_t(std::size_t order) {
  const TruncSeries log = make_deg_log(+1, order + 1);
  TruncSeries out(order);
  for (std::size_t n = 0; n < order; ++n) out.set_coeff(n, log.coeff(n + 1));
  return out;
}

TruncSeries make_deg_exp(const LambdaPoly& x, int sign, std::size_t order) {
  TruncSeries out(order);
  LambdaPoly ff{Rational(1)};  // x(x-λ)...(x-(n-1)λ), grown incrementally
  Rational scale(1);           // sign^n / n!
  out.set_coeff(0, ff);
  for (std::size_t n = 1; n < order; ++n) {
    ff *= x - LambdaPoly::monomial(1, Rational(static_cast<long>(n) - 1));
    scale *= make_rational(Int(sign), Int(static_cast<unsigned long>(n)));
    out.set_coeff(n, ff * scale);
  }
  return out;
}

TruncSeries make_binomial_power(long r, std::size_t order) {
  TruncSeries out(order);
  if (r >= 0) {
    const auto top = static_cast<unsigned long>(r);
    for (std::size_t l = 0; l < order && l <= top; ++l) {
      out.set_coeff(l, LambdaPoly(Rational(binomial(top, l))));
    }
  } else {
    const auto s = static_cast<unsigned long>(-r);
    for (std::size_t k = 0; k < order; ++k) {
      out.set_coeff(k, LambdaPoly(Rational(binomial(k + s - 1, k))));
    }
  }
  return out;
}

std::string to_string(const TruncSeries& s) {
  std::string out;
  for (std::size_t n = 0; n < s.order(); ++n) {
    out += std::to_string(n) + ": " + to_string(s.coeff(n)) + "\n";
  }
  return out;
}

}  // namespace degen
