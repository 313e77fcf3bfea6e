#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace octoclass {

using Complex = std::complex<double>;
using Mat8 = Eigen::Matrix<double, 8, 8>;
using Mat8c = Eigen::Matrix<Complex, 8, 8>;
using Vec8 = Eigen::Matrix<double, 8, 1>;

inline constexpr double kDefaultTol = 1e-9;

/// Input failed a precondition (bad file, malformed table, wrong shape).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (symmetry, realness, metric).
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Eigenvalues of a real symmetric 8x8 matrix, sorted descending, computed
/// by cyclic Jacobi rotations until the off-diagonal Frobenius norm drops
/// below tol. Throws ConsistencyError if the input is not symmetric within tol.
std::vector<double> symmetric_eigenvalues(const Mat8& m, double tol = kDefaultTol);

struct RankNullspace {
  int rank = 0;
  std::vector<Eigen::VectorXd> nullspace;  // basis of ker(A), n-vectors
};

/// Row-echelon rank and nullspace basis of a dense real matrix, using
/// Gaussian elimination with pivoting by maximum absolute value.
RankNullspace rank_and_nullspace(const Eigen::MatrixXd& a, double tol = kDefaultTol);

}  // namespace octoclass
