#pragma once

#include "octoclass/classify.hpp"

#include <utility>

namespace octoclass {

/// Coordinates of an antisymmetric spinor generator: the 28 values
/// {T_{AB} : 1 <= A < B <= 8}, ordered lexicographically by (A,B).
int pair_index(int a, int b);                 // 1-based A < B -> 0..27
std::pair<int, int> pair_of_index(int idx);   // inverse

enum class ConstraintOrigin { Identity, Theta };

struct ConstraintRow {
  Eigen::Matrix<double, 1, 28> coeffs;
  ConstraintOrigin origin;
};

struct ConstraintSystem {
  std::vector<ConstraintRow> rows;

  Eigen::MatrixXd matrix() const;
  void append(const ConstraintSystem& other);
};

/// Identity-preservation constraints: for each operator, the antisymmetric
/// pairing of its real and imaginary parts against T_{AB}. Rank 7 for the
/// frozen operator family.
ConstraintSystem identity_constraints(const ConnectingOperators& ops);

/// Spin-tensor-preservation constraints: rows of the commutator condition
/// [T, theta] = 0 over the 28 coordinates.
ConstraintSystem theta_constraints(const ThetaTensor& theta);

struct StabilizerResult {
  int dimension = 0;
  int rank_identity = 0;
  int rank_theta = 0;
  int rank_combined = 0;
  ConstraintSystem system;  // stacked rows actually used
};

/// Dimension of the Lie algebra of infinitesimal automorphisms:
/// 28 minus the rank of the stacked constraint system (identity rows only
/// for unital tables).
StabilizerResult stabilizer_dimension(const MultiplicationTable& t, double tol = kDefaultTol);

/// Human-readable rendering of one constraint row, e.g. "-T12 -T34 +T56 +T78 = 0".
std::string format_constraint(const Eigen::Matrix<double, 1, 28>& row, double tol = kDefaultTol);

}  // namespace octoclass
