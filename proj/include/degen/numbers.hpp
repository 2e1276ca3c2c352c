#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "degen/lambda_poly.hpp"
#include "degen/lambda_rat.hpp"

namespace degen {

enum class Family {
  DegHarmonic,
  DegHyperharmonic,
  DegDaehee,
  DegDaeheeOrder,
  DegStirling1,
  DegDerangement,
};

std::string_view to_string(Family family);
std::optional<Family> family_from_string(std::string_view name);

/// Degenerate harmonic number H_{n,λ}: the alternating partial sum of
/// binom(λ,k)/λ. Zero for n = 0; degree n-1 for n >= 1; classical H_n at λ=0.
LambdaPoly deg_harmonic(unsigned n);

/// H_{0,λ} .. H_{n_max,λ} in one incremental pass.
std::vector<LambdaPoly> deg_harmonic_table(unsigned n_max);

/// Degenerate hyperharmonic numbers H^{(r)}_{n,λ} as an (n, r) grid.
/// Row n = 0 is identically zero; column r = 0 holds the alternating
/// binom(λ,n)/λ base values; each column r >= 1 is the prefix sum over n
/// of column r-1. Interior cells satisfy
/// H^{(r)}_n = H^{(r)}_{n-1} + H^{(r-1)}_n.
class HyperharmonicTable {
 public:
  HyperharmonicTable(unsigned n_max, unsigned r_max);
  unsigned n_max() const { return n_max_; }
  unsigned r_max() const { return r_max_; }
  /// Throws std::out_of_range beyond the built grid.
  const LambdaPoly& at(unsigned n, unsigned r) const;

 private:
  unsigned n_max_;
  unsigned r_max_;
  std::vector<std::vector<LambdaPoly>> grid_;  // [n][r]
};

/// Computation routes for the hyperharmonic numbers; all agree everywhere.
enum class HyperRoute {
  Recurrence,      // dynamic-programming table of iterated partial sums
  ClosedFormThm1,  // explicit single sum with binomial weights
  Gf,              // ordinary generating-function coefficient extraction
};

LambdaPoly deg_hyperharmonic(unsigned n, unsigned r, HyperRoute route = HyperRoute::Recurrence);

/// H^{(r)}_{n,λ} as an explicit rational function in λ (binomial quotient
/// form). Display form only; equality checks always use the
/// denominator-cleared polynomial identity. Requires n, r >= 1.
LambdaRat deg_hyperharmonic_closed_rat(unsigned n, unsigned r);

/// Degenerate Daehee number D_{n,λ} = (λ-1)(λ-2)...(λ-n)/(n+1).
LambdaPoly deg_daehee(unsigned n);

/// Order-r degenerate Daehee number: n! times the t^n coefficient of the
/// r-th power of log_λ(1+t)/t. Requires r >= 1.
LambdaPoly deg_daehee_order(unsigned n, unsigned r);

/// All orders 0..r_max up to n_max; result[r][n]. Order 0 is the unit
/// series (1 at n = 0).
std::vector<std::vector<LambdaPoly>> deg_daehee_order_table(unsigned n_max, unsigned r_max);

/// Degenerate Stirling numbers of the first kind: change-of-basis
/// coefficients from ordinary falling factorials to degenerate falling
/// factorials, built by the triangle recurrence
/// S(n+1,k) = S(n,k-1) + (kλ-n)·S(n,k) with S(0,0) = 1.
class StirlingTable {
 public:
  explicit StirlingTable(unsigned n_max);
  unsigned n_max() const { return n_max_; }
  /// Zero polynomial outside the triangle 0 <= k <= n; throws
  /// std::out_of_range when n exceeds the built size.
  const LambdaPoly& at(unsigned n, unsigned k) const;

 private:
  unsigned n_max_;
  std::vector<std::vector<LambdaPoly>> rows_;
};

/// Zero polynomial outside the triangle 0 <= k <= n.
LambdaPoly deg_stirling1(unsigned n, unsigned k);

/// Checks the defining basis change (x)_n = Σ_k S(n,k)·(x)_{k,λ} by exact
/// polynomial equality at the n+1 sample points x = 0..n, enough to pin the
/// degree-n identity in x.
bool validate_stirling_basis(unsigned n);

/// Degenerate derangement number d_{n,λ} = n!·Σ_{k<=n} (1)_{k,λ}(-1)^k/k!.
LambdaPoly deg_derangement(unsigned n);

// Classical (λ-free) oracles, each computed by its textbook definition and
// never through the λ-polynomial path.

Rational classical_harmonic(unsigned n);
/// Computed by both the iterated-partial-sum recurrence and the
/// binomial-times-harmonic-difference closed form; throws std::logic_error
/// if the two ever disagree.
Rational classical_hyperharmonic(unsigned n, unsigned r);
Rational classical_daehee(unsigned n);  // (-1)^n n!/(n+1)
/// Via the r-th power of the λ-free series Σ (-1)^m t^m/(m+1). Requires r >= 1.
Rational classical_daehee_order(unsigned n, unsigned r);
/// Coefficient of x^k in the expanded product x(x-1)...(x-n+1).
Rational classical_stirling1(unsigned n, unsigned k);
Rational classical_derangement(unsigned n);  // d_n = n·d_{n-1} + (-1)^n

struct FamilyParams {
  unsigned n = 0;
  std::optional<unsigned> r;  // hyperharmonic / Daehee order
  std::optional<unsigned> k;  // Stirling column
};

/// Dispatch to the classical oracle for the family. Throws
/// std::invalid_argument when a required parameter is missing.
Rational classical_oracle(Family family, const FamilyParams& params);

/// Symbolic value of the family at the given parameters.
LambdaPoly family_value(Family family, const FamilyParams& params);

struct FamilyValue {
  Family family;
  FamilyParams params;
  LambdaPoly value;
};

}  // namespace degen
