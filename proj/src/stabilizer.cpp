#include "octoclass/stabilizer.hpp"

#include <cmath>
#include <sstream>

namespace octoclass {

int pair_index(int a, int b) {
  // (1,2) -> 0, (1,3) -> 1, ..., (7,8) -> 27
  return (a - 1) * 8 - (a - 1) * a / 2 + (b - a - 1);
}

std::pair<int, int> pair_of_index(int idx) {
  for (int a = 1; a <= 7; ++a) {
    const int count = 8 - a;
    if (idx < count) return {a, a + 1 + idx};
    idx -= count;
  }
  throw ConsistencyError("pair_of_index: index out of range");
}

Eigen::MatrixXd ConstraintSystem::matrix() const {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), 28);
  for (size_t r = 0; r < rows.size(); ++r) m.row(static_cast<Eigen::Index>(r)) = rows[r].coeffs;
  return m;
}

void ConstraintSystem::append(const ConstraintSystem& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

namespace {

void push_if_nonzero(ConstraintSystem& sys, const Eigen::Matrix<double, 1, 28>& row,
                     ConstraintOrigin origin) {
  if (row.cwiseAbs().maxCoeff() > 1e-12) sys.rows.push_back({row, origin});
}

// Normalize leading coefficient to +-1 for readable output and stable dedup.
Eigen::Matrix<double, 1, 28> normalized(Eigen::Matrix<double, 1, 28> row) {
  for (int k = 0; k < 28; ++k)
    if (std::abs(row(k)) > 1e-12) return row / std::abs(row(k));
  return row;
}

}  // namespace

ConstraintSystem identity_constraints(const ConnectingOperators& ops) {
  if (ops.basis_tag != SpinorBasis::New)
    throw ConsistencyError("identity_constraints: operators must be in the new basis");
  ConstraintSystem sys;
  for (const Mat8c& m : ops.mats) {
    Eigen::Matrix<double, 1, 28> re = Eigen::Matrix<double, 1, 28>::Zero();
    Eigen::Matrix<double, 1, 28> im = Eigen::Matrix<double, 1, 28>::Zero();
    for (int a = 1; a <= 8; ++a)
      for (int b = a + 1; b <= 8; ++b) {
        const Complex c = m(a - 1, b - 1) - m(b - 1, a - 1);
        re(pair_index(a, b)) = c.real();
        im(pair_index(a, b)) = c.imag();
      }
    push_if_nonzero(sys, normalized(re), ConstraintOrigin::Identity);
    push_if_nonzero(sys, normalized(im), ConstraintOrigin::Identity);
  }
  return sys;
}

ConstraintSystem theta_constraints(const ThetaTensor& theta) {
  const Mat8& th = theta.mat;
  ConstraintSystem sys;
  // [T, theta] is symmetric when theta is symmetric and T antisymmetric,
  // so the upper triangle including the diagonal spans all constraints.
  for (int oa = 0; oa < 8; ++oa)
    for (int ob = oa; ob < 8; ++ob) {
      Eigen::Matrix<double, 1, 28> row = Eigen::Matrix<double, 1, 28>::Zero();
      for (int a = 1; a <= 8; ++a)
        for (int b = a + 1; b <= 8; ++b) {
          // T = E_{ab} - E_{ba}; coefficient of (T th - th T)[oa, ob]
          double v = 0.0;
          if (a - 1 == oa) v += th(b - 1, ob);
          if (b - 1 == oa) v -= th(a - 1, ob);
          if (b - 1 == ob) v -= th(oa, a - 1);
          if (a - 1 == ob) v += th(oa, b - 1);
          row(pair_index(a, b)) = v;
        }
      push_if_nonzero(sys, normalized(row), ConstraintOrigin::Theta);
    }
  return sys;
}

StabilizerResult stabilizer_dimension(const MultiplicationTable& t, double tol) {
  StabilizerResult res;
  const ThetaTensor th = theta_of_table(t, tol);
  const ConstraintSystem th_sys = theta_constraints(th);
  res.rank_theta = rank_and_nullspace(th_sys.matrix(), tol).rank;

  if (t.has_identity) {
    res.system = identity_constraints(new_basis_operators());
    res.rank_identity = rank_and_nullspace(res.system.matrix(), tol).rank;
  }
  res.system.append(th_sys);
  res.rank_combined = rank_and_nullspace(res.system.matrix(), tol).rank;
  res.dimension = 28 - res.rank_combined;
  return res;
}

std::string format_constraint(const Eigen::Matrix<double, 1, 28>& row, double tol) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 28; ++k) {
    const double v = row(k);
    if (std::abs(v) <= tol) continue;
    const auto [a, b] = pair_of_index(k);
    if (!first) os << ' ';
    os << (v < 0 ? '-' : '+');
    if (std::abs(std::abs(v) - 1.0) > tol) os << std::abs(v) << '*';
    os << 'T' << a << b;
    first = false;
  }
  if (first) os << '0';
  os << " = 0";
  return os.str();
}

}  // namespace octoclass
