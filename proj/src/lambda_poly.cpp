#include "degen/lambda_poly.hpp"

#include <stdexcept>
#include <utility>

namespace degen {

LambdaPoly::LambdaPoly(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

LambdaPoly::LambdaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

LambdaPoly LambdaPoly::lambda() {
  return monomial(1);
}

LambdaPoly LambdaPoly::monomial(std::size_t degree, Rational coeff) {
  if (coeff == 0) return {};
  std::vector<Rational> c(degree + 1, Rational(0));
  c.back() = std::move(coeff);
  return LambdaPoly(std::move(c));
}

std::optional<std::size_t> LambdaPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const Rational& LambdaPoly::coeff(std::size_t i) const {
  static const Rational zero(0);
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

Rational LambdaPoly::eval(const Rational& at) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * at + coeffs_[i];
  }
  return acc;
}

LambdaPoly LambdaPoly::shifted_down() const {
  if (is_zero()) return {};
  if (coeffs_.front() != 0) {
    throw std::domain_error("division by λ requires a zero constant term");
  }
  return LambdaPoly(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

LambdaPoly LambdaPoly::operator-() const {
  LambdaPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

LambdaPoly& LambdaPoly::operator*=(const LambdaPoly& other) {
  *this = *this * other;
  return *this;
}

LambdaPoly& LambdaPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

void LambdaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) {
  a += b;
  return a;
}

LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) {
  a -= b;
  return a;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<Rational> out(ac.size() + bc.size() - 1, Rational(0));
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      out[i + j] += ac[i] * bc[j];
    }
  }
  return LambdaPoly(std::move(out));
}

LambdaPoly operator*(LambdaPoly p, const Rational& scalar) {
  p *= scalar;
  return p;
}

LambdaPoly operator*(const Rational& scalar, LambdaPoly p) {
  p *= scalar;
  return p;
}

LambdaPoly falling_factorial(const LambdaPoly& x, unsigned n) {
  LambdaPoly out{Rational(1)};
  for (unsigned j = 0; j < n; ++j) {
    out *= x - LambdaPoly(Rational(j));
  }
  return out;
}

LambdaPoly deg_falling_factorial(const LambdaPoly& x, unsigned n) {
  LambdaPoly out{Rational(1)};
  for (unsigned j = 0; j < n; ++j) {
    out *= x - LambdaPoly::monomial(1, Rational(j));
  }
  return out;
}

LambdaPoly lambda_binom(unsigned k) {
  return falling_factorial(LambdaPoly::lambda(), k) * make_rational(1, factorial(k));
}

LambdaPoly lambda_binom_over_lambda(unsigned k) {
  if (k == 0) {
    throw std::invalid_argument("binom(λ,k)/λ requires k >= 1");
  }
  return lambda_binom(k).shifted_down();
}

std::string to_string(const LambdaPoly& p) {
  std::string out = "[";
  const auto cs = p.coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(cs[i]);
  }
  out += "]";
  return out;
}

LambdaPoly parse_lambda_poly(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw std::invalid_argument("malformed polynomial literal: \"" + std::string(text) + "\"");
  }
  s = s.substr(1, s.size() - 2);

  // An empty or all-whitespace interior is the zero polynomial.
  bool blank = true;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      blank = false;
      break;
    }
  }
  if (blank) return {};

  std::vector<Rational> coeffs;
  std::string_view rest = s;
  while (true) {
    const auto comma = rest.find(',');
    coeffs.push_back(parse_rational(comma == std::string_view::npos ? rest : rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return LambdaPoly(std::move(coeffs));
}

}  // namespace degen
