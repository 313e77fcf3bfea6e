#pragma once

#include "octoclass/algebra.hpp"
#include "octoclass/spinor.hpp"

namespace octoclass {

/// Controlling spin-tensor theta^{CD}: real symmetric in the new basis.
struct ThetaTensor {
  Mat8 mat;
  bool has_identity_term = false;
};

/// Forward construction:
///   theta[C,D] = (1/24) sum eta_{lm}^r M_l[A,B] M_m[C,A] M_r[D,B]
///              + (1/4) delta_{CD}   (only when has_identity).
/// Expects identity-stripped constants and new-basis operators; the result is
/// verified real and symmetric within tol.
ThetaTensor theta_from_constants(const StructuralConstants& stripped,
                                 const ConnectingOperators& ops, bool has_identity,
                                 double tol = kDefaultTol);

/// Reverse motion: full structural constants (identity rows included) from
/// the controlling spin-tensor,
///   eta_{ij}^k = (1/2) sum M_j[C,A] M_i[A,B] M_k[D,B] theta[C,D].
StructuralConstants reconstruct_constants(const ThetaTensor& theta,
                                          const ConnectingOperators& ops,
                                          double tol = kDefaultTol);

/// End-to-end: table -> stripped constants -> theta (new-basis operators).
ThetaTensor theta_of_table(const MultiplicationTable& t, double tol = kDefaultTol);

}  // namespace octoclass
