#pragma once

#include <array>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "degen/lambda_poly.hpp"
#include "degen/numbers.hpp"

namespace degen {

/// Catalog keys for the verified identities. Every check is exact
/// polynomial or rational equality; there is no tolerance anywhere.
enum class IdentityId {
  EQ8_CLOSED,       // hyperharmonic closed form, denominator cleared
  EQ14_RECURRENCE,  // H^(r)_n = H^(r)_{n-1} + H^(r-1)_n
  THM1_A,           // hyperharmonics from lower orders, binomial weights
  THM1_B,           // hyperharmonics from the binom(λ,l)/λ base
  THM2,             // Daehee from consecutive harmonic differences
  THM3,             // Daehee from order-r hyperharmonics
  THM4,             // harmonics from order-r hyperharmonics, double sum
  THM5,             // order-r Daehee from order r-1 and hyperharmonics
  THM6_A,           // harmonics from alternating scaled Daehee
  THM6_B,           // hyperharmonics from alternating scaled Daehee
  THM7,             // hyperharmonic/derangement convolution identity
  THM8,             // Daehee from Stirling numbers, offset index
  THM9,             // Stirling sum vs binomial-weighted harmonic step
  COR10,            // Stirling sum as a binomial quotient (cross-multiplied)
  REMARK11,         // λ-free shadow of COR10 over classical Stirling numbers
  GF11,             // ordinary GF of the harmonic numbers
  GF12,             // ordinary GF of the order-r hyperharmonic numbers
  GF29,             // exponential GF of the derangement numbers
  EQ33_34_DERIV,    // N-th derivative of the shifted log vs Daehee form
  EQ36_37_DERIV,    // N-th derivative of the negated log vs harmonic form
  EXP_LOG_INVERSE,  // composing exp over log gives exactly 1 + t
  CLASSICAL_LIMITS, // λ=0 evaluation matches every classical oracle
};

inline constexpr std::array<IdentityId, 22> kAllIdentityIds{
    IdentityId::EQ8_CLOSED,     IdentityId::EQ14_RECURRENCE, IdentityId::THM1_A,
    IdentityId::THM1_B,         IdentityId::THM2,            IdentityId::THM3,
    IdentityId::THM4,           IdentityId::THM5,            IdentityId::THM6_A,
    IdentityId::THM6_B,         IdentityId::THM7,            IdentityId::THM8,
    IdentityId::THM9,           IdentityId::COR10,           IdentityId::REMARK11,
    IdentityId::GF11,           IdentityId::GF12,            IdentityId::GF29,
    IdentityId::EQ33_34_DERIV,  IdentityId::EQ36_37_DERIV,   IdentityId::EXP_LOG_INVERSE,
    IdentityId::CLASSICAL_LIMITS,
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view name);

/// Inclusive integer interval.
struct Range {
  long lo = 0;
  long hi = -1;
  bool empty() const { return hi < lo; }
  friend bool operator==(const Range&, const Range&) = default;
};

/// Parameter grid for one verification run. An identity reads only the
/// ranges it uses; `order` is the series truncation order for the
/// generating-function and derivative checks.
struct ParamGrid {
  std::optional<Range> n, r, s, k, N;
  std::size_t order = 0;
};

/// A requested grid that leaves an identity without admissible points, or
/// is missing a range the identity needs.
struct GridError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParamPoint {
  std::optional<long> n, r, s, k, N;
  std::string family;  // set by the classical-limit checks
};

std::string to_string(const ParamPoint& point);

struct Failure {
  ParamPoint point;
  LambdaPoly lhs;
  LambdaPoly rhs;
};

struct IdentityReport {
  IdentityId id{};
  ParamGrid grid;
  long points_checked = 0;
  std::vector<Failure> failures;
  std::chrono::microseconds elapsed{0};
  bool ok() const { return failures.empty(); }
};

/// Fault-injection hooks for exit-status tests; all off in normal use.
struct VerifyOptions {
  bool flip_thm2_sign = false;
};

/// Checks one identity over the grid, recording every exact-equality
/// failure with both sides' full polynomial values.
/// Throws GridError when the grid violates the identity's stated domain.
IdentityReport verify(IdentityId id, const ParamGrid& grid, const VerifyOptions& options = {});

/// Generating-function checks with a single order parameter (r or N,
/// ignored where the identity has none).
IdentityReport verify_gf(IdentityId id, std::size_t order, long r_or_n = 0);

/// λ=0 evaluation against the classical oracles for all six families.
IdentityReport verify_limits(unsigned n_max, unsigned order_max);

enum class Profile { Smoke, Full };

std::string_view to_string(Profile profile);
std::optional<Profile> profile_from_string(std::string_view name);

struct GridProfile {
  unsigned n_max;
  unsigned ord_max;  // cap for r, s, k, N
  std::size_t order; // series truncation order
};

GridProfile grid_profile(Profile profile);

/// Default grid for one identity under a profile; the grids run_all uses.
ParamGrid default_grid(IdentityId id, Profile profile);

/// Runs the whole catalog in enum order, one report per identity.
std::vector<IdentityReport> run_all(Profile profile, const VerifyOptions& options = {});

}  // namespace degen
