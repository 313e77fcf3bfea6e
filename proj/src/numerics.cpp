#include "octoclass/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace octoclass {

namespace {

double off_diagonal_norm(const Mat8& a) {
  double s = 0.0;
  for (int p = 0; p < 8; ++p)
    for (int q = 0; q < 8; ++q)
      if (p != q) s += a(p, q) * a(p, q);
  return std::sqrt(s);
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const Mat8& m, double tol) {
  if (tol <= 0.0) throw ConsistencyError("symmetric_eigenvalues: tol must be positive");
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol)
    throw ConsistencyError("symmetric_eigenvalues: input not symmetric, max |A-A^T| = " +
                           std::to_string(asym));

  Mat8 a = 0.5 * (m + m.transpose());
  // Cyclic Jacobi sweeps. 8x8 converges in a handful of sweeps.
  for (int sweep = 0; sweep < 64 && off_diagonal_norm(a) >= tol; ++sweep) {
    for (int p = 0; p < 8; ++p) {
      for (int q = p + 1; q < 8; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < tol * 1e-3) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        Mat8 g = Mat8::Identity();
        g(p, p) = c;
        g(q, q) = c;
        g(p, q) = s;
        g(q, p) = -s;
        a = g.transpose() * a * g;
      }
    }
  }

  std::vector<double> ev(8);
  for (int i = 0; i < 8; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

RankNullspace rank_and_nullspace(const Eigen::MatrixXd& a, double tol) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  RankNullspace out;
  if (rows == 0 || cols == 0) {
    for (Eigen::Index j = 0; j < cols; ++j)
      out.nullspace.push_back(Eigen::VectorXd::Unit(cols, j));
    return out;
  }

  Eigen::MatrixXd r = a;
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index best = row;
    for (Eigen::Index i = row + 1; i < rows; ++i)
      if (std::abs(r(i, col)) > std::abs(r(best, col))) best = i;
    if (std::abs(r(best, col)) <= tol) continue;
    r.row(row).swap(r.row(best));
    r.row(row) /= r(row, col);
    for (Eigen::Index i = 0; i < rows; ++i)
      if (i != row && r(i, col) != 0.0) r.row(i) -= r(i, col) * r.row(row);
    pivot_cols.push_back(col);
    ++row;
  }
  out.rank = static_cast<int>(pivot_cols.size());

  // Free columns parameterize the nullspace of the reduced system.
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (Eigen::Index c : pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(cols);
    v(free_col) = 1.0;
    for (size_t k = 0; k < pivot_cols.size(); ++k)
      v(pivot_cols[k]) = -r(static_cast<Eigen::Index>(k), free_col);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

}  // namespace octoclass
