#pragma once

#include "octoclass/numerics.hpp"

#include <array>

namespace octoclass {

enum class SpinorBasis { Old, New };

/// The eight connecting operators M_i (scaled by sqrt(2)) linking the vector
/// index i to a pair of spinor indices. M_1 is symmetric; the others are
/// antisymmetric (this is what makes the identity-preservation constraints
/// non-trivial).
struct ConnectingOperators {
  std::array<Mat8c, 8> mats{};
  SpinorBasis basis_tag = SpinorBasis::Old;
};

/// Metric spin-tensor: antidiagonal block form [[0,E],[E,0]] in the old
/// basis, identity in the new one.
struct MetricSpinTensor {
  Mat8c mat;
};

/// Spinor basis transformation U = (1/sqrt(2)) [[E, E], [-iE, iE]].
struct BasisChange {
  Mat8c mat;
};

/// Antisymmetric generator T_{AB} on spinor space (index raising is trivial
/// in the new basis).
struct SpinorGenerator {
  Mat8 mat;
};

/// Frozen seed operators in the old spinor basis; entries in {0, +-1, +-i},
/// eight non-zeros per operator.
ConnectingOperators build_seed_operators();

BasisChange standard_basis_change();

MetricSpinTensor old_basis_metric();

/// M'_i = U * M_i * U^T for every operator (both spinor indices transformed).
ConnectingOperators change_spinor_basis(const ConnectingOperators& ops, const BasisChange& u);

/// Convenience: the frozen seed pushed to the new basis. Real-valued there.
const ConnectingOperators& new_basis_operators();

/// Infinitesimal vector -> spinor map:
/// S_C^A = (1/4) sum_{i,j,B} T^{ij} M_j[A,B] M_i[C,B].
/// Requires T antisymmetric within tol and ops in the new basis; the result is
/// verified real and antisymmetric. This is a Lie algebra isomorphism of so(8).
SpinorGenerator vector_to_spinor_generator(const Mat8& t, const ConnectingOperators& ops,
                                           double tol = kDefaultTol);

/// Max over i,j of |M_i M_j^T + M_j M_i^T - 2 delta_ij I|_inf. The plain
/// transpose is the adjoint convention under which the frozen seed satisfies
/// the composition-algebra normalization exactly.
double clifford_diagnostic(const ConnectingOperators& ops);

}  // namespace octoclass
