#include "degen/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace degen {

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int falling_factorial_int(long x, unsigned long m) {
  Int r = 1;
  for (unsigned long j = 0; j < m; ++j) {
    r *= Int(x) - Int(static_cast<long>(j));
  }
  return r;
}

Int int_pow(unsigned long base, unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

Rational make_rational(Int num, Int den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = trim(s.substr(0, slash));
    den = trim(s.substr(slash + 1));
  }
  std::string_view digits = num;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational literal: \"" + std::string(text) + "\"");
  }
  Int numerator{std::string(digits)};
  if (negative) numerator = -numerator;
  return make_rational(std::move(numerator), Int(std::string(den)));
}

std::string to_string(const Rational& value) {
  return value.get_str();
}

}  // namespace degen
