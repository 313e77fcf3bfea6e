// Shared independent oracles and frozen regression baselines for the test
// suites. Header-only; everything lives in an anonymous-namespace-free
// inline form so unit tests and the acceptance battery agree exactly.
#pragma once

#include "octoclass/stabilizer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace octoclass::testing {

// Eigenvalues of a symmetric matrix located as sign-change roots of the
// characteristic polynomial det(M - x I), refined by bisection. Independent
// of the Jacobi solver; valid when the spectrum is simple (almost sure for
// random input).
inline std::vector<double> charpoly_eigenvalues(const Mat8& m) {
  auto p = [&](double x) { return (m - x * Mat8::Identity()).determinant(); };
  double radius = 0.0;
  for (int r = 0; r < 8; ++r) radius = std::max(radius, m.row(r).cwiseAbs().sum());
  const int grid = 40000;
  std::vector<double> roots;
  double x_prev = -radius, p_prev = p(x_prev);
  for (int k = 1; k <= grid; ++k) {
    const double x = -radius + 2.0 * radius * k / grid;
    const double px = p(x);
    if (p_prev == 0.0) roots.push_back(x_prev);
    else if (p_prev * px < 0.0) {
      double lo = x_prev, hi = x, plo = p_prev;
      for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi), pm = p(mid);
        if (plo * pm <= 0.0) hi = mid;
        else lo = mid, plo = pm;
      }
      roots.push_back(0.5 * (lo + hi));
    }
    x_prev = x;
    p_prev = px;
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

// Frozen controlling spin-tensor of each builtin under the standard operator
// family (regression baseline).
inline Mat8 expected_theta(const std::string& name) {
  Mat8 th = Mat8::Zero();
  auto diag = [&](std::initializer_list<double> values) {
    int i = 0;
    for (double v : values) th(i, i) = v, ++i;
  };
  if (name == "octonion") diag({2, 0, 0, 0, 0, 0, 0, 0});
  else if (name == "gen-octonion-e1") diag({1, 1, 0, 0, 0, 0, 0, 0});
  else if (name == "gen-octonion-e4") diag({1, 0, 0, 0, 0, 0, 0, 1});
  else if (name == "quaternion-analog") diag({0.5, 0.5, 0, 0, 0.5, 0.5, 0, 0});
  else if (name == "carcass") diag({1, 0, 0, 0, 0, 0, 0, -1});
  else if (name == "octonion-noncanonical")
    th(0, 0) = th(0, 1) = th(1, 0) = th(1, 1) = 1.0;
  else throw std::invalid_argument("no baseline for " + name);
  return th;
}

// Frozen descending eigenvalue signature of each builtin.
inline std::vector<double> expected_signature(const std::string& name) {
  if (name == "octonion" || name == "octonion-noncanonical")
    return {2, 0, 0, 0, 0, 0, 0, 0};
  if (name == "gen-octonion-e1" || name == "gen-octonion-e4")
    return {1, 1, 0, 0, 0, 0, 0, 0};
  if (name == "quaternion-analog") return {0.5, 0.5, 0.5, 0.5, 0, 0, 0, 0};
  if (name == "carcass") return {1, 0, 0, 0, 0, 0, 0, -1};
  throw std::invalid_argument("no signature baseline for " + name);
}

// Frozen identity-preservation relations of the standard operator family,
// one per imaginary unit, over the 28 pair coordinates.
inline Eigen::MatrixXd frozen_identity_relations() {
  struct Term { int a, b; double v; };
  static const std::vector<std::vector<Term>> rows = {
      {{1, 2, -1}, {3, 4, -1}, {5, 6, +1}, {7, 8, +1}},
      {{1, 3, +1}, {2, 4, -1}, {5, 7, -1}, {6, 8, +1}},
      {{1, 4, -1}, {2, 3, -1}, {5, 8, +1}, {6, 7, +1}},
      {{1, 5, +1}, {2, 6, +1}, {3, 7, +1}, {4, 8, +1}},
      {{1, 6, +1}, {2, 5, -1}, {3, 8, -1}, {4, 7, +1}},
      {{1, 7, -1}, {2, 8, -1}, {3, 5, +1}, {4, 6, +1}},
      {{1, 8, +1}, {2, 7, -1}, {3, 6, +1}, {4, 5, -1}},
  };
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(7, 28);
  for (size_t r = 0; r < rows.size(); ++r)
    for (const Term& t : rows[r]) m(static_cast<Eigen::Index>(r), pair_index(t.a, t.b)) = t.v;
  return m;
}

// Frozen spin-tensor-preservation relations for the canonical octonion:
// T_{1k} = 0 for k = 2..8.
inline Eigen::MatrixXd frozen_octonion_theta_relations() {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(7, 28);
  for (int k = 2; k <= 8; ++k) m(k - 2, pair_index(1, k)) = 1.0;
  return m;
}

inline int stacked_rank(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd s(a.rows() + b.rows(), a.cols());
  s << a, b;
  return rank_and_nullspace(s).rank;
}

}  // namespace octoclass::testing
