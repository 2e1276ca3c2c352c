#include "degen/numbers.hpp"

#include <stdexcept>
#include <utility>

#include "degen/trunc_series.hpp"

namespace degen {

namespace {

Rational sign_pow(long exponent) {
  return ((exponent % 2) + 2) % 2 == 0 ? Rational(1) : Rational(-1);
}

const LambdaPoly kZeroPoly{};
const LambdaPoly kOnePoly{Rational(1)};

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::DegHarmonic: return "deg-harmonic";
    case Family::DegHyperharmonic: return "deg-hyperharmonic";
    case Family::DegDaehee: return "deg-daehee";
    case Family::DegDaeheeOrder: return "deg-daehee-order";
    case Family::DegStirling1: return "deg-stirling1";
    case Family::DegDerangement: return "deg-derangement";
  }
  throw std::logic_error("unreachable family");
}

std::optional<Family> family_from_string(std::string_view name) {
  for (Family f : {Family::DegHarmonic, Family::DegHyperharmonic, Family::DegDaehee,
                   Family::DegDaeheeOrder, Family::DegStirling1, Family::DegDerangement}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

std::vector<LambdaPoly> deg_harmonic_table(unsigned n_max) {
  std::vector<LambdaPoly> out;
  out.reserve(n_max + 1);
  out.emplace_back();  // H_0 = 0
  LambdaPoly term = kOnePoly;  // binom(λ,k)/λ = (λ-1)...(λ-k+1)/k!, grown incrementally
  LambdaPoly sum;
  for (unsigned k = 1; k <= n_max; ++k) {
    if (k > 1) {
      term *= LambdaPoly::lambda() - LambdaPoly(Rational(static_cast<long>(k) - 1));
      term *= make_rational(1, Int(static_cast<unsigned long>(k)));
    }
    sum += sign_pow(k - 1) * term;
    out.push_back(sum);
  }
  return out;
}

LambdaPoly deg_harmonic(unsigned n) {
  return deg_harmonic_table(n)[n];
}

HyperharmonicTable::HyperharmonicTable(unsigned n_max, unsigned r_max) : n_max_(n_max), r_max_(r_max) {
  grid_.assign(n_max + 1, std::vector<LambdaPoly>(r_max + 1));
  LambdaPoly base = kOnePoly;  // binom(λ,n)/λ
  for (unsigned n = 1; n <= n_max; ++n) {
    if (n > 1) {
      base *= LambdaPoly::lambda() - LambdaPoly(Rational(static_cast<long>(n) - 1));
      base *= make_rational(1, Int(static_cast<unsigned long>(n)));
    }
    grid_[n][0] = sign_pow(n - 1) * base;
  }
  for (unsigned r = 1; r <= r_max; ++r) {
    LambdaPoly running;  // iterated partial sums of the previous order
    for (unsigned n = 1; n <= n_max; ++n) {
      running += grid_[n][r - 1];
      grid_[n][r] = running;
    }
  }
}

const LambdaPoly& HyperharmonicTable::at(unsigned n, unsigned r) const {
  if (n > n_max_ || r > r_max_) {
    throw std::out_of_range("hyperharmonic table index (" + std::to_string(n) + ", " +
                            std::to_string(r) + ") beyond built size");
  }
  return grid_[n][r];
}

LambdaPoly deg_hyperharmonic(unsigned n, unsigned r, HyperRoute route) {
  switch (route) {
    case HyperRoute::Recurrence:
      return HyperharmonicTable(n, r).at(n, r);
    case HyperRoute::ClosedFormThm1: {
      if (n == 0) return {};
      if (r == 0) return sign_pow(n - 1) * lambda_binom_over_lambda(n);
      LambdaPoly sum;
      for (unsigned l = 1; l <= n; ++l) {
        sum += sign_pow(l - 1) * Rational(binomial(n - l + r - 1, r - 1)) * lambda_binom_over_lambda(l);
      }
      return sum;
    }
    case HyperRoute::Gf: {
      const std::size_t T = n + 1;
      const TruncSeries gf = (-make_deg_log(-1, T)) * make_binomial_power(-static_cast<long>(r), T);
      return gf.coeff(n);
    }
  }
  throw std::logic_error("unreachable route");
}

LambdaRat deg_hyperharmonic_closed_rat(unsigned n, unsigned r) {
  if (n == 0 || r == 0) {
    throw std::invalid_argument("closed rational form requires n, r >= 1");
  }
  const auto harmonics = deg_harmonic_table(n + r - 1);
  LambdaPoly num = sign_pow(r - 1) * Rational(binomial(n + r - 1, n)) *
                   Rational(factorial(r - 1)) * (harmonics[n + r - 1] - harmonics[r - 1]);
  return LambdaRat(std::move(num), falling_factorial(LambdaPoly::lambda() - kOnePoly, r - 1));
}

LambdaPoly deg_daehee(unsigned n) {
  return falling_factorial(LambdaPoly::lambda() - kOnePoly, n) *
         make_rational(1, Int(static_cast<unsigned long>(n) + 1));
}

std::vector<std::vector<LambdaPoly>> deg_daehee_order_table(unsigned n_max, unsigned r_max) {
  std::vector<std::vector<LambdaPoly>> out(r_max + 1, std::vector<LambdaPoly>(n_max + 1));
  const TruncSeries base = make_deg_log_over_t(n_max + 1);
  TruncSeries power(n_max + 1);
  power.set_coeff(0, kOnePoly);
  for (unsigned r = 0; r <= r_max; ++r) {
    if (r > 0) power = power * base;
    Rational fact(1);
    for (unsigned n = 0; n <= n_max; ++n) {
      if (n > 0) fact *= Rational(static_cast<unsigned long>(n));
      out[r][n] = power.coeff(n) * fact;
    }
  }
  return out;
}

LambdaPoly deg_daehee_order(unsigned n, unsigned r) {
  if (r == 0) {
    throw std::invalid_argument("Daehee order must be >= 1");
  }
  return deg_daehee_order_table(n, r)[r][n];
}

StirlingTable::StirlingTable(unsigned n_max) : n_max_(n_max) {
  rows_.resize(n_max + 1);
  rows_[0] = {kOnePoly};
  for (unsigned n = 0; n < n_max; ++n) {
    rows_[n + 1].assign(n + 2, LambdaPoly{});
    for (unsigned k = 0; k <= n + 1; ++k) {
      LambdaPoly v;
      if (k >= 1) v = rows_[n][k - 1];
      if (k <= n) {
        v += (LambdaPoly::monomial(1, Rational(k)) - LambdaPoly(Rational(n))) * rows_[n][k];
      }
      rows_[n + 1][k] = std::move(v);
    }
  }
}

const LambdaPoly& StirlingTable::at(unsigned n, unsigned k) const {
  if (n > n_max_) {
    throw std::out_of_range("Stirling table row " + std::to_string(n) + " beyond built size");
  }
  if (k > n) return kZeroPoly;
  return rows_[n][k];
}

LambdaPoly deg_stirling1(unsigned n, unsigned k) {
  if (k > n) return {};
  return StirlingTable(n).at(n, k);
}

bool validate_stirling_basis(unsigned n) {
  const StirlingTable table(n);
  for (unsigned x0 = 0; x0 <= n; ++x0) {
    const LambdaPoly x{Rational(x0)};
    const LambdaPoly lhs = falling_factorial(x, n);
    LambdaPoly rhs;
    for (unsigned k = 0; k <= n; ++k) {
      rhs += table.at(n, k) * deg_falling_factorial(x, k);
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

LambdaPoly deg_derangement(unsigned n) {
  LambdaPoly sum;
  LambdaPoly one_ff = kOnePoly;  // (1)_{k,λ}, grown incrementally
  Rational scale(1);             // (-1)^k / k!
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) {
      one_ff *= kOnePoly - LambdaPoly::monomial(1, Rational(static_cast<long>(k) - 1));
      scale *= make_rational(-1, Int(static_cast<unsigned long>(k)));
    }
    sum += one_ff * scale;
  }
  return sum * Rational(factorial(n));
}

Rational classical_harmonic(unsigned n) {
  Rational sum(0);
  for (unsigned k = 1; k <= n; ++k) sum += make_rational(1, Int(static_cast<unsigned long>(k)));
  return sum;
}

Rational classical_hyperharmonic(unsigned n, unsigned r) {
  // Iterated partial sums over the 1/n base column.
  std::vector<Rational> column(n + 1, Rational(0));
  for (unsigned m = 1; m <= n; ++m) column[m] = make_rational(1, Int(static_cast<unsigned long>(m)));
  for (unsigned order = 1; order <= r; ++order) {
    Rational running(0);
    for (unsigned m = 1; m <= n; ++m) {
      running += column[m];
      column[m] = running;
    }
  }
  const Rational by_recurrence = column[n];
  if (r >= 1) {
    Rational by_closed_form = n == 0 ? Rational(0)
                                     : Rational(binomial(n + r - 1, n)) *
                                           (classical_harmonic(n + r - 1) - classical_harmonic(r - 1));
    if (by_recurrence != by_closed_form) {
      throw std::logic_error("classical hyperharmonic routes disagree");
    }
  }
  return by_recurrence;
}

Rational classical_daehee(unsigned n) {
  return sign_pow(n) * make_rational(factorial(n), Int(static_cast<unsigned long>(n) + 1));
}

Rational classical_daehee_order(unsigned n, unsigned r) {
  if (r == 0) {
    throw std::invalid_argument("Daehee order must be >= 1");
  }
  // r-th power of Σ (-1)^m t^m/(m+1), truncated past t^n.
  std::vector<Rational> base(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    base[m] = sign_pow(m) * make_rational(1, Int(static_cast<unsigned long>(m) + 1));
  }
  std::vector<Rational> power(n + 1, Rational(0));
  power[0] = 1;
  for (unsigned step = 0; step < r; ++step) {
    std::vector<Rational> next(n + 1, Rational(0));
    for (unsigned i = 0; i <= n; ++i) {
      if (power[i] == 0) continue;
      for (unsigned j = 0; i + j <= n; ++j) next[i + j] += power[i] * base[j];
    }
    power = std::move(next);
  }
  return power[n] * Rational(factorial(n));
}

Rational classical_stirling1(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  std::vector<Int> coeffs{1};  // x(x-1)...(x-n+1) expanded over x
  for (unsigned j = 0; j < n; ++j) {
    std::vector<Int> next(coeffs.size() + 1, Int(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= Int(static_cast<long>(j)) * coeffs[i];
    }
    coeffs = std::move(next);
  }
  return Rational(coeffs[k]);
}

Rational classical_derangement(unsigned n) {
  Rational d(1);
  for (unsigned m = 1; m <= n; ++m) {
    d = Rational(static_cast<unsigned long>(m)) * d + sign_pow(m);
  }
  return d;
}

namespace {

unsigned require_param(const std::optional<unsigned>& value, const char* name, Family family) {
  if (!value) {
    throw std::invalid_argument(std::string(to_string(family)) + " requires parameter " + name);
  }
  return *value;
}

}  // namespace

Rational classical_oracle(Family family, const FamilyParams& params) {
  switch (family) {
    case Family::DegHarmonic: return classical_harmonic(params.n);
    case Family::DegHyperharmonic:
      return classical_hyperharmonic(params.n, require_param(params.r, "r", family));
    case Family::DegDaehee: return classical_daehee(params.n);
    case Family::DegDaeheeOrder:
      return classical_daehee_order(params.n, require_param(params.r, "r", family));
    case Family::DegStirling1:
      return classical_stirling1(params.n, require_param(params.k, "k", family));
    case Family::DegDerangement: return classical_derangement(params.n);
  }
  throw std::logic_error("unreachable family");
}

LambdaPoly family_value(Family family, const FamilyParams& params) {
  switch (family) {
    case Family::DegHarmonic: return deg_harmonic(params.n);
    case Family::DegHyperharmonic:
      return deg_hyperharmonic(params.n, require_param(params.r, "r", family));
    case Family::DegDaehee: return deg_daehee(params.n);
    case Family::DegDaeheeOrder:
      return deg_daehee_order(params.n, require_param(params.r, "r", family));
    case Family::DegStirling1:
      return deg_stirling1(params.n, require_param(params.k, "k", family));
    case Family::DegDerangement: return deg_derangement(params.n);
  }
  throw std::logic_error("unreachable family");
}

}  // namespace degen
