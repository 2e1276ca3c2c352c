#include "degen/identities.hpp"

#include <algorithm>
#include <utility>

#include "degen/lambda_rat.hpp"
#include "degen/trunc_series.hpp"

namespace degen {

std::string_view to_string(IdentityId id) {
  switch (id) {
    case IdentityId::EQ8_CLOSED: return "EQ8_CLOSED";
    case IdentityId::EQ14_RECURRENCE: return "EQ14_RECURRENCE";
    case IdentityId::THM1_A: return "THM1_A";
    case IdentityId::THM1_B: return "THM1_B";
    case IdentityId::THM2: return "THM2";
    case IdentityId::THM3: return "THM3";
    case IdentityId::THM4: return "THM4";
    case IdentityId::THM5: return "THM5";
    case IdentityId::THM6_A: return "THM6_A";
    case IdentityId::THM6_B: return "THM6_B";
    case IdentityId::THM7: return "THM7";
    case IdentityId::THM8: return "THM8";
    case IdentityId::THM9: return "THM9";
    case IdentityId::COR10: return "COR10";
    case IdentityId::REMARK11: return "REMARK11";
    case IdentityId::GF11: return "GF11";
    case IdentityId::GF12: return "GF12";
    case IdentityId::GF29: return "GF29";
    case IdentityId::EQ33_34_DERIV: return "EQ33_34_DERIV";
    case IdentityId::EQ36_37_DERIV: return "EQ36_37_DERIV";
    case IdentityId::EXP_LOG_INVERSE: return "EXP_LOG_INVERSE";
    case IdentityId::CLASSICAL_LIMITS: return "CLASSICAL_LIMITS";
  }
  throw std::logic_error("unreachable identity id");
}

std::optional<IdentityId> identity_from_string(std::string_view name) {
  for (IdentityId id : kAllIdentityIds) {
    if (name == to_string(id)) return id;
  }
  return std::nullopt;
}

std::string_view to_string(Profile profile) {
  return profile == Profile::Smoke ? "smoke" : "full";
}

std::optional<Profile> profile_from_string(std::string_view name) {
  if (name == "smoke") return Profile::Smoke;
  if (name == "full") return Profile::Full;
  return std::nullopt;
}

GridProfile grid_profile(Profile profile) {
  return profile == Profile::Smoke ? GridProfile{8, 3, 12} : GridProfile{20, 6, 32};
}

std::string to_string(const ParamPoint& point) {
  std::string out;
  auto append = [&out](const char* name, const std::optional<long>& value) {
    if (!value) return;
    if (!out.empty()) out += "; ";
    out += name;
    out += '=';
    out += std::to_string(*value);
  };
  if (!point.family.empty()) out += "family=" + point.family;
  append("n", point.n);
  append("r", point.r);
  append("s", point.s);
  append("k", point.k);
  append("N", point.N);
  return out;
}

namespace {

Rational sign_pow(long exponent) {
  return ((exponent % 2) + 2) % 2 == 0 ? Rational(1) : Rational(-1);
}

struct Check {
  IdentityReport report;

  Check(IdentityId id, ParamGrid grid) {
    report.id = id;
    report.grid = std::move(grid);
  }

  void expect(ParamPoint point, const LambdaPoly& lhs, const LambdaPoly& rhs) {
    ++report.points_checked;
    if (!(lhs == rhs)) {
      report.failures.push_back({std::move(point), lhs, rhs});
    }
  }
};

Range require_range(const std::optional<Range>& range, long min_lo, IdentityId id,
                    const char* param, const char* constraint) {
  if (!range) {
    throw GridError(std::string(to_string(id)) + ": missing range for " + param);
  }
  Range clamped{std::max(range->lo, min_lo), range->hi};
  if (clamped.empty()) {
    throw GridError(std::string(to_string(id)) + " requires " + constraint);
  }
  return clamped;
}

std::size_t require_order(const ParamGrid& grid, IdentityId id) {
  if (grid.order < 2) {
    throw GridError(std::string(to_string(id)) + " requires truncation order >= 2");
  }
  return grid.order;
}

// binom(λ,l)/λ for l = 1..l_max; index 0 holds the zero polynomial.
std::vector<LambdaPoly> binom_over_lambda_table(unsigned l_max) {
  std::vector<LambdaPoly> out(l_max + 1);
  LambdaPoly term{Rational(1)};
  for (unsigned l = 1; l <= l_max; ++l) {
    if (l > 1) {
      term *= LambdaPoly::lambda() - LambdaPoly(Rational(static_cast<long>(l) - 1));
      term *= make_rational(1, Int(static_cast<unsigned long>(l)));
    }
    out[l] = term;
  }
  return out;
}

// D_{0,λ} .. D_{n_max,λ}.
std::vector<LambdaPoly> daehee_table(unsigned n_max) {
  std::vector<LambdaPoly> out(n_max + 1);
  LambdaPoly ff{Rational(1)};  // (λ-1)(λ-2)...(λ-n)
  out[0] = ff;
  for (unsigned n = 1; n <= n_max; ++n) {
    ff *= LambdaPoly::lambda() - LambdaPoly(Rational(static_cast<long>(n)));
    out[n] = ff * make_rational(1, Int(static_cast<unsigned long>(n) + 1));
  }
  return out;
}

// (1)_{k,λ} for k = 0..k_max.
std::vector<LambdaPoly> one_ff_table(unsigned k_max) {
  std::vector<LambdaPoly> out(k_max + 1);
  LambdaPoly ff{Rational(1)};
  out[0] = ff;
  for (unsigned k = 1; k <= k_max; ++k) {
    ff *= LambdaPoly(Rational(1)) - LambdaPoly::monomial(1, Rational(static_cast<long>(k) - 1));
    out[k] = ff;
  }
  return out;
}

// d_{0,λ} .. d_{n_max,λ}.
std::vector<LambdaPoly> derangement_table(unsigned n_max) {
  std::vector<LambdaPoly> out(n_max + 1);
  const auto one_ff = one_ff_table(n_max);
  LambdaPoly sum;
  Rational scale(1);      // (-1)^k / k!
  Rational fact(1);       // n!
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n > 0) {
      scale *= make_rational(-1, Int(static_cast<unsigned long>(n)));
      fact *= Rational(static_cast<unsigned long>(n));
    }
    sum += one_ff[n] * scale;
    out[n] = sum * fact;
  }
  return out;
}

// (λ-N)_{k,λ} for k = 0..k_max.
std::vector<LambdaPoly> lambda_minus_n_dff_table(unsigned N, unsigned k_max) {
  std::vector<LambdaPoly> out(k_max + 1);
  const LambdaPoly base = LambdaPoly::lambda() - LambdaPoly(Rational(N));
  LambdaPoly ff{Rational(1)};
  out[0] = ff;
  for (unsigned k = 1; k <= k_max; ++k) {
    ff *= base - LambdaPoly::monomial(1, Rational(static_cast<long>(k) - 1));
    out[k] = ff;
  }
  return out;
}

// binom(n+N, N) · (H_{n+N,λ} - H_{n+N-1,λ}); shared between the Stirling-sum
// identity and the derivative check of the negated log series.
LambdaPoly harmonic_step(unsigned n, unsigned N, const std::vector<LambdaPoly>& harmonics) {
  return Rational(binomial(n + N, N)) * (harmonics[n + N] - harmonics[n + N - 1]);
}

IdentityReport check_eq8_closed(const ParamGrid& grid) {
  Check chk(IdentityId::EQ8_CLOSED, grid);
  const Range n = require_range(grid.n, 1, IdentityId::EQ8_CLOSED, "n", "n >= 1");
  const Range r = require_range(grid.r, 1, IdentityId::EQ8_CLOSED, "r", "r >= 1");
  const HyperharmonicTable table(n.hi, r.hi);
  const auto harmonics = deg_harmonic_table(n.hi + r.hi - 1);
  for (long rv = r.lo; rv <= r.hi; ++rv) {
    const LambdaPoly cleared_binom =
        falling_factorial(LambdaPoly::lambda() - LambdaPoly(Rational(1)), rv - 1) *
        make_rational(1, factorial(rv - 1));
    for (long nv = n.lo; nv <= n.hi; ++nv) {
      const LambdaPoly lhs = cleared_binom * table.at(nv, rv);
      const LambdaPoly rhs = sign_pow(rv - 1) * Rational(binomial(nv + rv - 1, nv)) *
                             (harmonics[nv + rv - 1] - harmonics[rv - 1]);
      chk.expect({.n = nv, .r = rv}, lhs, rhs);
    }
  }
  return std::move(chk.report);
}

IdentityReport check_eq14(const ParamGrid& grid) {
  Check chk(IdentityId::EQ14_RECURRENCE, grid);
  const Range n = require_range(grid.n, 1, IdentityId::EQ14_RECURRENCE, "n", "n >= 1");
  const Range r = require_range(grid.r, 1, IdentityId::EQ14_RECURRENCE, "r", "r >= 1");
  const HyperharmonicTable table(n.hi, r.hi);
  for (long nv = n.lo; nv <= n.hi; ++nv) {
    for (long rv = r.lo; rv <= r.hi; ++rv) {
      chk.expect({.n = nv, .r = rv}, table.at(nv, rv), table.at(nv - 1, rv) + table.at(nv, rv - 1));
    }
  }
  return std::move(chk.report);
}

IdentityReport check_thm1a(const ParamGrid& grid) {
  Check chk(IdentityId::THM1_A, grid);
  const Range n = require_range(grid.n, 0, IdentityId::THM1_A, "n", "n >= 0");
  const Range s = require_range(grid.s, 1, IdentityId::THM1_A, "s", "s >= 1");
  const Range r = require_range(grid.r, 1, IdentityId::THM1_A, "r", "r >= 1");
  const HyperharmonicTable table(std::max(n.hi, 1L), r.hi);
  for (long nv = n.lo; nv <= n.hi; ++nv) {
    for (long sv = s.lo; sv <= s.hi; ++sv) {
      for (long rv = std::max(r.lo, sv); rv <= r.hi; ++rv) {
        LambdaPoly rhs;
        for (long l = 1; l <= nv; ++l) {
          rhs += Rational(binomial(nv - l + sv - 1, sv - 1)) * table.at(l, rv - sv);
        }
        chk.expect({.n = nv, .r = rv, .s = sv}, table.at(nv, rv), rhs);
      }
    }
  }
  if (chk.report.points_checked == 0) {
    throw GridError("THM1_A requires 1 <= s <= r");
  }
  return std::move(chk.report);
}

IdentityReport check_thm1b(const ParamGrid& grid) {
  Check chk(IdentityId::THM1_B, grid);
  const Range n = require_range(grid.n, 0, IdentityId::THM1_B, "n", "n >= 0");
  const Range r = require_range(grid.r, 1, IdentityId::THM1_B, "r", "r >= 1");
  const HyperharmonicTable table(std::max(n.hi, 1L), r.hi);
  const auto base = binom_over_lambda_table(std::max(n.hi, 1L));
  for (long nv = n.lo; nv <= n.hi; ++nv) {
    for (long rv = r.lo; rv <= r.hi; ++rv) {
      LambdaPoly rhs;
      for (long l = 1; l <= nv; ++l) {
        rhs += sign_pow(l - 1) * Rational(binomial(nv - l + rv - 1, rv - 1)) * base[l];
      }
      chk.expect({.n = nv, .r = rv}, table.at(nv, rv), rhs);
    }
  }
  return std::move(chk.report);
}

IdentityReport check_thm2(const ParamGrid& grid, const VerifyOptions& options) {
  Check chk(IdentityId::THM2, grid);
  const Range n = require_range(grid.n, 0, IdentityId::THM2, "n", "n >= 0");
  const auto daehee = daehee_table(n.hi);
  const auto harmonics = deg_harmonic_table(n.hi + 1);
  const Rational flip = options.flip_thm2_sign ? Rational(-1) : Rational(1);
  Rational fact(1);
  for (long nv = 0; nv <= n.hi; ++nv) {
    if (nv > 0) fact *= Rational(static_cast<unsigned long>(nv));
    if (nv < n.lo) continue;
    const LambdaPoly rhs = nv == 0
        ? LambdaPoly(Rational(1))
        : LambdaPoly(flip * sign_pow(nv) * fact) * (harmonics[nv + 1] - harmonics[nv]);
    chk.expect({.n = nv}, daehee[nv], rhs);
  }
  return std::move(chk.report);
}

IdentityReport check_thm3(const ParamGrid& grid) {
  Check chk(IdentityId::THM3, grid);
  const Range n = require_range(grid.n, 0, IdentityId::THM3, "n", "n >= 0");
  const Range r = require_range(grid.r, 1, IdentityId::THM3, "r", "r >= 1");
  const auto daehee = daehee_table(n.hi);
  const HyperharmonicTable table(n.hi + 1, r.hi);
  for (long nv = n.lo; nv <= n.hi; ++nv) {
    const Rational fact{factorial(nv)};
    for (long rv = r.lo; rv <= r.hi; ++rv) {
      LambdaPoly rhs;
      for (long k = std::max(0L, nv - rv); k <= nv; ++k) {
        rhs += sign_pow(k) * Rational(binomial(rv, nv - k)) * table.at(k + 1, rv);
      }
      chk.expect({.n = nv, .r = rv}, daehee[nv], fact * rhs);
    }
  }
  return std::move(chk.report);
}

IdentityReport check_thm4(const ParamGrid& grid) {
  Check chk(IdentityId::THM4, grid);
  const Range n = require_range(grid.n, 1, IdentityId::THM4, "n", "n >= 1");
  const Range r = require_range(grid.r, 1, IdentityId::THM4, "r", "r >= 1");
  const auto harmonics = deg_harmonic_table(n.hi);
  const HyperharmonicTable table(n.hi, r.hi);
  for (long nv = n.lo; nv <= n.hi; ++nv) {
    for (long rv = r.lo; rv <= r.hi; ++rv) {
      LambdaPoly rhs;
      for (long l = 0; l <= nv - 1; ++l) {
        for (long k = std::max(0L, l - rv); k <= l; ++k) {
          rhs += sign_pow(k + l) * Rational(binomial(rv, l - k)) * table.at(k + 1, rv);
        }
      }
      chk.expect({.n = nv, .r = rv}, harmonics[nv], rhs);
    }
  }
  return std::move(chk.report);
}

IdentityReport check_thm5(const ParamGrid& grid) {
  Check chk(IdentityId::THM5, grid);
  const Range n = require_range(grid.n, 0, IdentityId::THM5, "n", "n >= 0");
  const Range k = require_range(grid.k, 0, IdentityId::THM5, "k", "k >= 0");
  const Range r = require_range(grid.r, 1, IdentityId::THM5, "r", "r >= 1");
  const auto orders = deg_daehee_order_table(n.hi, r.hi);
  const HyperharmonicTable table(n.hi + 1, k.hi);
  for (long nv = n.lo; nv <= n.hi; ++nv) {
    const Rational fact{factorial(nv)};
    for (long kv = k.lo; kv <= k.hi; ++kv) {
      for (long rv = r.lo; rv <= r.hi; ++rv) {
        LambdaPoly rhs;
        for (long i = 0; i <= nv; ++i) {
          const long m = nv - i;
          const Rational inv_fact = make_rational(1, factorial(m));
          LambdaPoly inner;
          for (long j = 0; j <= m; ++j) {
            const Int steps = falling_factorial_int(kv, m - j);
            if (steps == 0) continue;
            inner += Rational(binomial(m, j) * steps) * inv_fact * orders[rv - 1][j];
          }
          rhs += sign_pow(i) * (table.at(i + 1, kv) * inner);
        }
        chk.expect({.n = nv, .r = rv, .k = kv}, orders[rv][nv], fact * rhs);
      }
    }
  }
  return std::move(chk.report);
}

IdentityReport check_thm6a(const ParamGrid& grid) {
  Check chk(IdentityId::THM6_A, grid);
  const Range n = require_range(grid.n, 1, IdentityId::THM6_A, "n", "n >= 1");
  const auto harmonics = deg_harmonic_table(n.hi);
  const auto daehee = daehee_table(n.hi - 1);
  for (long nv = n.lo; nv <= n.hi; ++nv) {
    LambdaPoly rhs;
    for (long l = 0; l <= nv - 1; ++l) {
      rhs += sign_pow(l) * make_rational(1, factorial(l)) * daehee[l];
    }
    chk.expect({.n = nv}, harmonics[nv], rhs);
  }
  return std::move(chk.report);
}

IdentityReport check_thm6b(const ParamGrid& grid) {
  Check chk(IdentityId::THM6_B, grid);
  const Range n = require_range(grid.n, 1, IdentityId::THM6_B, "n", "n >= 1");
  const Range r = require_range(grid.r, 1, IdentityId::THM6_B, "r", "r >= 1");
  const HyperharmonicTable table(n.hi, r.hi);
  const auto daehee = daehee_table(n.hi - 1);
  for (long nv = n.lo; nv <= n.hi; ++nv) {
    for (long rv = r.lo; rv <= r.hi; ++rv) {
      LambdaPoly rhs;
      for (long m = 1; m <= nv; ++m) {
        rhs += sign_pow(nv - m) * Rational(binomial(rv + m - 2, rv - 1)) *
               make_rational(1, factorial(nv - m)) * daehee[nv - m];
      }
      chk.expect({.n = nv, .r = rv}, table.at(nv, rv), rhs);
    }
  }
  return std::move(chk.report);
}

IdentityReport check_thm7(const ParamGrid& grid) {
  Check chk(IdentityId::THM7, grid);
  const Range n = require_range(grid.n, 1, IdentityId::THM7, "n", "n >= 1");
  const Range r = require_range(grid.r, 1, IdentityId::THM7, "r", "r >= 1");
  const HyperharmonicTable table(n.hi, r.hi);
  const auto one_ff = one_ff_table(n.hi - 1);
  const auto derangements = derangement_table(n.hi - 1);
  for (long nv = n.lo; nv <= n.hi; ++nv) {
    for (long rv = r.lo; rv <= r.hi; ++rv) {
      LambdaPoly lhs;
      LambdaPoly rhs;
      for (long l = 1; l <= nv; ++l) {
        const Rational inv_fact = make_rational(1, factorial(nv - l));
        lhs += sign_pow(nv - l) * inv_fact * (table.at(l, rv) * one_ff[nv - l]);
        rhs += inv_fact * (table.at(l, rv - 1) * derangements[nv - l]);
      }
      chk.expect({.n = nv, .r = rv}, lhs, rhs);
    }
  }
  return std::move(chk.report);
}

IdentityReport check_thm8(const ParamGrid& grid) {
  Check chk(IdentityId::THM8, grid);
  const Range n = require_range(grid.n, 0, IdentityId::THM8, "n", "n >= 0");
  const Range N = require_range(grid.N, 1, IdentityId::THM8, "N", "N >= 1");
  const auto daehee = daehee_table(n.hi);
  const StirlingTable stirling(n.hi + 1);
  const auto base = binom_over_lambda_table(N.hi);
  for (long Nv = N.lo; Nv <= N.hi; ++Nv) {
    const auto dff = lambda_minus_n_dff_table(Nv, n.hi - Nv + 1 >= 0 ? n.hi - Nv + 1 : 0);
    for (long nv = std::max(n.lo, Nv - 1); nv <= n.hi; ++nv) {
      const long m = nv - Nv + 1;
      LambdaPoly sum;
      for (long kk = 0; kk <= m; ++kk) {
        sum += stirling.at(m, kk) * dff[kk];
      }
      const LambdaPoly rhs =
          make_rational(factorial(Nv), Int(nv + 1)) * (base[Nv] * sum);
      chk.expect({.n = nv, .N = Nv}, daehee[nv], rhs);
    }
  }
  if (chk.report.points_checked == 0) {
    throw GridError("THM8 requires n >= N-1");
  }
  return std::move(chk.report);
}

IdentityReport check_thm9(const ParamGrid& grid) {
  Check chk(IdentityId::THM9, grid);
  const Range n = require_range(grid.n, 0, IdentityId::THM9, "n", "n >= 0");
  const Range N = require_range(grid.N, 1, IdentityId::THM9, "N", "N >= 1");
  const StirlingTable stirling(n.hi);
  const auto harmonics = deg_harmonic_table(n.hi + N.hi);
  const auto base = binom_over_lambda_table(N.hi);
  for (long Nv = N.lo; Nv <= N.hi; ++Nv) {
    const auto dff = lambda_minus_n_dff_table(Nv, n.hi);
    for (long nv = n.lo; nv <= n.hi; ++nv) {
      LambdaPoly sum;
      for (long kk = 0; kk <= nv; ++kk) {
        sum += dff[kk] * stirling.at(nv, kk);
      }
      const LambdaPoly lhs =
          sign_pow(nv - Nv - 1) * make_rational(1, factorial(nv)) * (base[Nv] * sum);
      chk.expect({.n = nv, .N = Nv}, lhs, harmonic_step(nv, Nv, harmonics));
    }
  }
  return std::move(chk.report);
}

IdentityReport check_cor10(const ParamGrid& grid) {
  Check chk(IdentityId::COR10, grid);
  const Range n = require_range(grid.n, 0, IdentityId::COR10, "n", "n >= 0");
  const Range N = require_range(grid.N, 1, IdentityId::COR10, "N", "N >= 1");
  const StirlingTable stirling(n.hi);
  for (long Nv = N.lo; Nv <= N.hi; ++Nv) {
    const auto dff = lambda_minus_n_dff_table(Nv, n.hi);
    const LambdaPoly binom_n_poly = lambda_binom(Nv);
    for (long nv = n.lo; nv <= n.hi; ++nv) {
      LambdaPoly sum;
      for (long kk = 0; kk <= nv; ++kk) {
        sum += dff[kk] * stirling.at(nv, kk);
      }
      const LambdaRat lhs{make_rational(1, factorial(nv)) * sum};
      const LambdaRat rhs{Rational(binomial(nv + Nv, Nv)) * lambda_binom(nv + Nv), binom_n_poly};
      ++chk.report.points_checked;
      if (!rf_eq(lhs, rhs)) {
        chk.report.failures.push_back(
            {{.n = nv, .N = Nv}, lhs.num * rhs.den, rhs.num * lhs.den});
      }
    }
  }
  return std::move(chk.report);
}

IdentityReport check_remark11(const ParamGrid& grid) {
  Check chk(IdentityId::REMARK11, grid);
  const Range n = require_range(grid.n, 0, IdentityId::REMARK11, "n", "n >= 0");
  const Range N = require_range(grid.N, 1, IdentityId::REMARK11, "N", "N >= 1");
  for (long nv = n.lo; nv <= n.hi; ++nv) {
    for (long Nv = N.lo; Nv <= N.hi; ++Nv) {
      const Rational lhs = sign_pow(nv) * make_rational(Int(Nv), Int(nv + Nv)) *
                           Rational(binomial(nv + Nv, Nv));
      Rational sum(0);
      for (long kk = 0; kk <= nv; ++kk) {
        sum += sign_pow(kk) * Rational(int_pow(Nv, kk)) * classical_stirling1(nv, kk);
      }
      const Rational rhs = sum * make_rational(1, factorial(nv));
      chk.expect({.n = nv, .N = Nv}, LambdaPoly(lhs), LambdaPoly(rhs));
    }
  }
  return std::move(chk.report);
}

IdentityReport check_gf11(const ParamGrid& grid) {
  Check chk(IdentityId::GF11, grid);
  const std::size_t T = require_order(grid, IdentityId::GF11);
  const TruncSeries gf = (-make_deg_log(-1, T)) * make_binomial_power(-1, T);
  const auto harmonics = deg_harmonic_table(T - 1);
  for (std::size_t nv = 0; nv < T; ++nv) {
    chk.expect({.n = static_cast<long>(nv)}, gf.coeff(nv), harmonics[nv]);
  }
  return std::move(chk.report);
}

IdentityReport check_gf12(const ParamGrid& grid) {
  Check chk(IdentityId::GF12, grid);
  const std::size_t T = require_order(grid, IdentityId::GF12);
  const Range r = require_range(grid.r, 0, IdentityId::GF12, "r", "r >= 0");
  const TruncSeries neg_log = -make_deg_log(-1, T);
  const HyperharmonicTable table(T - 1, r.hi);
  for (long rv = r.lo; rv <= r.hi; ++rv) {
    const TruncSeries gf = neg_log * make_binomial_power(-rv, T);
    for (std::size_t nv = 0; nv < T; ++nv) {
      chk.expect({.n = static_cast<long>(nv), .r = rv}, gf.coeff(nv), table.at(nv, rv));
    }
  }
  return std::move(chk.report);
}

IdentityReport check_gf29(const ParamGrid& grid) {
  Check chk(IdentityId::GF29, grid);
  const std::size_t T = require_order(grid, IdentityId::GF29);
  const TruncSeries gf =
      make_binomial_power(-1, T) * make_deg_exp(LambdaPoly(Rational(1)), -1, T);
  const auto derangements = derangement_table(T - 1);
  Rational fact(1);
  for (std::size_t nv = 0; nv < T; ++nv) {
    if (nv > 0) fact *= Rational(static_cast<unsigned long>(nv));
    chk.expect({.n = static_cast<long>(nv)}, gf.coeff(nv) * fact, derangements[nv]);
  }
  return std::move(chk.report);
}

IdentityReport check_eq33_34(const ParamGrid& grid) {
  Check chk(IdentityId::EQ33_34_DERIV, grid);
  const std::size_t T = require_order(grid, IdentityId::EQ33_34_DERIV);
  Range N = require_range(grid.N, 1, IdentityId::EQ33_34_DERIV, "N", "N >= 1");
  N.hi = std::min(N.hi, static_cast<long>(T) - 1);
  if (N.empty()) {
    throw GridError("EQ33_34_DERIV requires 1 <= N < order");
  }
  const TruncSeries log_series = make_deg_log(+1, T);
  const auto daehee = daehee_table(T - 2);
  for (long Nv = N.lo; Nv <= N.hi; ++Nv) {
    const TruncSeries derived = log_series.derive(Nv);
    Rational fact(1);
    for (std::size_t nv = 0; nv < derived.order(); ++nv) {
      if (nv > 0) fact *= Rational(static_cast<unsigned long>(nv));
      const LambdaPoly rhs = Rational(static_cast<long>(nv) + Nv) * daehee[nv + Nv - 1];
      chk.expect({.n = static_cast<long>(nv), .N = Nv}, derived.coeff(nv) * fact, rhs);
    }
  }
  return std::move(chk.report);
}

IdentityReport check_eq36_37(const ParamGrid& grid) {
  Check chk(IdentityId::EQ36_37_DERIV, grid);
  const std::size_t T = require_order(grid, IdentityId::EQ36_37_DERIV);
  Range N = require_range(grid.N, 1, IdentityId::EQ36_37_DERIV, "N", "N >= 1");
  N.hi = std::min(N.hi, static_cast<long>(T) - 1);
  if (N.empty()) {
    throw GridError("EQ36_37_DERIV requires 1 <= N < order");
  }
  const TruncSeries neg_log = -make_deg_log(-1, T);
  const auto harmonics = deg_harmonic_table(T - 1);
  for (long Nv = N.lo; Nv <= N.hi; ++Nv) {
    const TruncSeries derived = neg_log.derive(Nv);
    const Rational n_fact{factorial(Nv)};
    for (std::size_t nv = 0; nv < derived.order(); ++nv) {
      const LambdaPoly rhs = n_fact * harmonic_step(nv, Nv, harmonics);
      chk.expect({.n = static_cast<long>(nv), .N = Nv}, derived.coeff(nv), rhs);
    }
  }
  return std::move(chk.report);
}

IdentityReport check_exp_log_inverse(const ParamGrid& grid) {
  Check chk(IdentityId::EXP_LOG_INVERSE, grid);
  const std::size_t T = require_order(grid, IdentityId::EXP_LOG_INVERSE);
  const TruncSeries composed =
      compose(make_deg_exp(LambdaPoly(Rational(1)), +1, T), make_deg_log(+1, T));
  for (std::size_t nv = 0; nv < T; ++nv) {
    const LambdaPoly expected = nv <= 1 ? LambdaPoly(Rational(1)) : LambdaPoly{};
    chk.expect({.n = static_cast<long>(nv)}, composed.coeff(nv), expected);
  }
  return std::move(chk.report);
}

IdentityReport check_classical_limits(const ParamGrid& grid) {
  Check chk(IdentityId::CLASSICAL_LIMITS, grid);
  const Range n = require_range(grid.n, 0, IdentityId::CLASSICAL_LIMITS, "n", "n >= 0");
  const Range r = require_range(grid.r, 0, IdentityId::CLASSICAL_LIMITS, "r", "r >= 0");
  const Rational zero(0);
  auto expect_value = [&](Family family, ParamPoint point, const LambdaPoly& value,
                          const Rational& oracle) {
    point.family = std::string(to_string(family));
    chk.expect(std::move(point), LambdaPoly(value.eval(zero)), LambdaPoly(oracle));
  };

  const auto harmonics = deg_harmonic_table(n.hi);
  const HyperharmonicTable hyper(n.hi, r.hi);
  const auto daehee = daehee_table(n.hi);
  const auto orders = deg_daehee_order_table(n.hi, std::max(r.hi, 1L));
  const StirlingTable stirling(n.hi);
  const auto derangements = derangement_table(n.hi);

  for (long nv = n.lo; nv <= n.hi; ++nv) {
    expect_value(Family::DegHarmonic, {.n = nv}, harmonics[nv], classical_harmonic(nv));
    for (long rv = r.lo; rv <= r.hi; ++rv) {
      expect_value(Family::DegHyperharmonic, {.n = nv, .r = rv}, hyper.at(nv, rv),
                   classical_hyperharmonic(nv, rv));
    }
    expect_value(Family::DegDaehee, {.n = nv}, daehee[nv], classical_daehee(nv));
    for (long rv = std::max(r.lo, 1L); rv <= std::max(r.hi, 1L); ++rv) {
      expect_value(Family::DegDaeheeOrder, {.n = nv, .r = rv}, orders[rv][nv],
                   classical_daehee_order(nv, rv));
    }
    for (long kv = 0; kv <= std::min(nv, r.hi); ++kv) {
      expect_value(Family::DegStirling1, {.n = nv, .k = kv}, stirling.at(nv, kv),
                   classical_stirling1(nv, kv));
    }
    expect_value(Family::DegDerangement, {.n = nv}, derangements[nv], classical_derangement(nv));
  }
  return std::move(chk.report);
}

}  // namespace

IdentityReport verify(IdentityId id, const ParamGrid& grid, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport report;
  switch (id) {
    case IdentityId::EQ8_CLOSED: report = check_eq8_closed(grid); break;
    case IdentityId::EQ14_RECURRENCE: report = check_eq14(grid); break;
    case IdentityId::THM1_A: report = check_thm1a(grid); break;
    case IdentityId::THM1_B: report = check_thm1b(grid); break;
    case IdentityId::THM2: report = check_thm2(grid, options); break;
    case IdentityId::THM3: report = check_thm3(grid); break;
    case IdentityId::THM4: report = check_thm4(grid); break;
    case IdentityId::THM5: report = check_thm5(grid); break;
    case IdentityId::THM6_A: report = check_thm6a(grid); break;
    case IdentityId::THM6_B: report = check_thm6b(grid); break;
    case IdentityId::THM7: report = check_thm7(grid); break;
    case IdentityId::THM8: report = check_thm8(grid); break;
    case IdentityId::THM9: report = check_thm9(grid); break;
    case IdentityId::COR10: report = check_cor10(grid); break;
    case IdentityId::REMARK11: report = check_remark11(grid); break;
    case IdentityId::GF11: report = check_gf11(grid); break;
    case IdentityId::GF12: report = check_gf12(grid); break;
    case IdentityId::GF29: report = check_gf29(grid); break;
    case IdentityId::EQ33_34_DERIV: report = check_eq33_34(grid); break;
    case IdentityId::EQ36_37_DERIV: report = check_eq36_37(grid); break;
    case IdentityId::EXP_LOG_INVERSE: report = check_exp_log_inverse(grid); break;
    case IdentityId::CLASSICAL_LIMITS: report = check_classical_limits(grid); break;
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

IdentityReport verify_gf(IdentityId id, std::size_t order, long r_or_n) {
  ParamGrid grid;
  grid.order = order;
  switch (id) {
    case IdentityId::GF12:
      grid.r = Range{r_or_n, r_or_n};
      break;
    case IdentityId::EQ33_34_DERIV:
    case IdentityId::EQ36_37_DERIV:
      grid.N = Range{r_or_n, r_or_n};
      break;
    case IdentityId::GF11:
    case IdentityId::GF29:
    case IdentityId::EXP_LOG_INVERSE:
      break;
    default:
      throw GridError(std::string(to_string(id)) + " is not a generating-function check");
  }
  return verify(id, grid);
}

IdentityReport verify_limits(unsigned n_max, unsigned order_max) {
  ParamGrid grid;
  grid.n = Range{0, static_cast<long>(n_max)};
  grid.r = Range{0, static_cast<long>(order_max)};
  return verify(IdentityId::CLASSICAL_LIMITS, grid);
}

ParamGrid default_grid(IdentityId id, Profile profile) {
  const GridProfile p = grid_profile(profile);
  const long n_max = p.n_max;
  const long ord = p.ord_max;
  const Range n_full{0, n_max};
  const Range n_pos{1, n_max};
  const Range ord_pos{1, ord};
  const Range ord_full{0, ord};
  ParamGrid grid;
  switch (id) {
    case IdentityId::EQ8_CLOSED:
    case IdentityId::EQ14_RECURRENCE:
      grid.n = n_pos;
      grid.r = ord_pos;
      break;
    case IdentityId::THM1_A:
      grid.n = n_full;
      grid.s = ord_pos;
      grid.r = ord_pos;
      break;
    case IdentityId::THM1_B:
    case IdentityId::THM3:
      grid.n = n_full;
      grid.r = ord_pos;
      break;
    case IdentityId::THM2:
      grid.n = n_full;
      break;
    case IdentityId::THM4:
    case IdentityId::THM6_B:
    case IdentityId::THM7:
      grid.n = n_pos;
      grid.r = ord_pos;
      break;
    case IdentityId::THM5:
      grid.n = n_full;
      grid.k = ord_full;
      grid.r = ord_pos;
      break;
    case IdentityId::THM6_A:
      grid.n = n_pos;
      break;
    case IdentityId::THM8:
    case IdentityId::THM9:
    case IdentityId::COR10:
    case IdentityId::REMARK11:
      grid.n = n_full;
      grid.N = ord_pos;
      break;
    case IdentityId::GF11:
    case IdentityId::GF29:
    case IdentityId::EXP_LOG_INVERSE:
      grid.order = p.order;
      break;
    case IdentityId::GF12:
      grid.order = p.order;
      grid.r = ord_full;
      break;
    case IdentityId::EQ33_34_DERIV:
    case IdentityId::EQ36_37_DERIV:
      grid.order = p.order;
      grid.N = ord_pos;
      break;
    case IdentityId::CLASSICAL_LIMITS:
      grid.n = n_full;
      grid.r = ord_full;
      break;
  }
  return grid;
}

std::vector<IdentityReport> run_all(Profile profile, const VerifyOptions& options) {
  std::vector<IdentityReport> reports;
  reports.reserve(kAllIdentityIds.size());
  for (IdentityId id : kAllIdentityIds) {
    reports.push_back(verify(id, default_grid(id, profile), options));
  }
  return reports;
}

}  // namespace degen
