#pragma once

// Lie brackets and a registry of gate identities, each checked numerically
// against an expected status that was fixed by direct matrix arithmetic.

#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "gateroots/linalg.hpp"

namespace gateroots {

/// Default HOLDS/FAILS threshold on the Frobenius residual.
inline constexpr double kClaimTol = 1e-10;

SquareMatrix commutator(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix anticommutator(const SquareMatrix& a, const SquareMatrix& b);

enum class ClaimStatus { Holds, Fails };

std::string_view to_string(ClaimStatus status);

/// One side of an identity: scalar * value(). `text` is how the side reads.
struct ClaimSide {
  std::string text;
  std::function<SquareMatrix()> value;
  Complex scalar{1.0};

  SquareMatrix evaluate() const;
};

ClaimSide gate_side(std::string_view expr, Complex scalar = 1.0, std::string scalar_text = {});
ClaimSide commutator_side(std::string_view a, std::string_view b, Complex scalar = 1.0, std::string scalar_text = {});
ClaimSide anticommutator_side(std::string_view a, std::string_view b, Complex scalar = 1.0,
                              std::string scalar_text = {});
ClaimSide matrix_side(std::string text, SquareMatrix m, Complex scalar = 1.0);
ClaimSide computed_side(std::string text, std::function<SquareMatrix()> value);

struct Claim {
  std::string id;
  std::string description;
  ClaimSide lhs;
  ClaimSide rhs;
  std::string reference;
  ClaimStatus expected;
};

struct ClaimResult {
  std::string id;
  std::string description;
  std::string reference;
  /// +infinity when either side could not be evaluated; `error` then holds
  /// the reason.
  double residual = std::numeric_limits<double>::infinity();
  double tolerance = kClaimTol;
  ClaimStatus observed = ClaimStatus::Fails;
  ClaimStatus expected = ClaimStatus::Holds;
  bool matches_expected = false;
  std::string error;
};

struct VerificationReport {
  std::vector<ClaimResult> results;
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t mismatches = 0;
  bool overall_ok = true;
};

const std::vector<Claim>& builtin_claims();

/// Never throws for evaluation problems: they become FAILS with an infinite
/// residual. Throws DomainError for tol <= 0.
ClaimResult evaluate_claim(const Claim& claim, double tol = kClaimTol);

/// Evaluates every registered claim whose id starts with `id_prefix`, in
/// registry order.
VerificationReport run_all(double tol = kClaimTol, std::string_view id_prefix = {});

}  // namespace gateroots
