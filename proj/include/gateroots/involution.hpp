#pragma once

// Euler relation, generators and roots of self-inverse gates, plus a
// spectral principal root for unitaries that are not involutions.

#include "gateroots/gates.hpp"

namespace gateroots {

/// Hermitian G with exp(iG) equal to the source gate.
struct HermitianGenerator {
  SquareMatrix matrix;
  std::size_t source_dim;
};

enum class RootMethod { ClosedForm, Spectral };

struct RootResult {
  UnitaryGate root;
  unsigned order;
  RootMethod method;
};

/// e^{i alpha A} = cos(alpha) I + i sin(alpha) A for an involution A.
SquareMatrix euler(const UnitaryGate& a, double alpha);

/// G = (pi/2)(I - A).
HermitianGenerator generator(const UnitaryGate& a);

/// n-th root I + (e^{i pi/n} - 1)(I - A)/2; (I - A)/2 is the projector onto
/// the -1 eigenspace, so this is exp(i (pi/2n)(I - A)). n = 1 returns A.
RootResult nth_root_involution(const UnitaryGate& a, unsigned n);

/// (e^{i pi/4} I + e^{-i pi/4} A) / sqrt(2).
RootResult sqrt_involution(const UnitaryGate& a);

/// V diag(e^{i theta_k / n}) V^dag with eigenphases theta_k in (-pi, pi];
/// an eigenvalue of -1 always maps to +pi.
RootResult principal_root(const UnitaryGate& u, unsigned n);

/// (e^{i pi/4}|x> + e^{-i pi/4} g|x>) / sqrt(2), with g|x> taken from the
/// gate's action formula. Only defined for X, Y, Z, H, CCNOT, CSWAP, PERES.
StateVector root_action_state(GateName g, const BasisState& x);

/// The involution square-root formula evaluated without its precondition.
/// Exposed so the claims registry can reproduce expressions written for
/// non-involutions; not a root in general.
SquareMatrix sqrt_formula_unchecked(const SquareMatrix& a);

}  // namespace gateroots
