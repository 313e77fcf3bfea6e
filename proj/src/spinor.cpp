#include "octoclass/spinor.hpp"

#include <cmath>

namespace octoclass {

namespace {

constexpr Complex kI{0.0, 1.0};

struct SeedEntry {
  int op, a, b;  // 1-based, upper triangle (a < b)
  Complex value;
};

// Upper-triangle seed values. Operator 1 completes symmetrically, the others
// antisymmetrically.
const SeedEntry kSeed[] = {
    {1, 1, 5, 1.0},  {1, 2, 6, 1.0},  {1, 3, 7, 1.0},  {1, 4, 8, 1.0},
    {2, 1, 2, -1.0}, {2, 3, 4, -1.0}, {2, 5, 6, -1.0}, {2, 7, 8, -1.0},
    {3, 1, 5, -kI},  {3, 2, 6, -kI},  {3, 3, 7, -kI},  {3, 4, 8, -kI},
    {4, 1, 2, kI},   {4, 3, 4, -kI},  {4, 5, 6, -kI},  {4, 7, 8, kI},
    {5, 1, 4, kI},   {5, 2, 3, -kI},  {5, 5, 8, -kI},  {5, 6, 7, kI},
    {6, 1, 3, -kI},  {6, 2, 4, -kI},  {6, 5, 7, kI},   {6, 6, 8, kI},
    {7, 1, 4, -1.0}, {7, 2, 3, -1.0}, {7, 5, 8, -1.0}, {7, 6, 7, -1.0},
    {8, 1, 3, 1.0},  {8, 2, 4, -1.0}, {8, 5, 7, 1.0},  {8, 6, 8, -1.0},
};

}  // namespace

ConnectingOperators build_seed_operators() {
  ConnectingOperators ops;
  for (auto& m : ops.mats) m.setZero();
  for (const auto& e : kSeed) {
    Mat8c& m = ops.mats[e.op - 1];
    m(e.a - 1, e.b - 1) = e.value;
    m(e.b - 1, e.a - 1) = (e.op == 1) ? e.value : -e.value;
  }
  ops.basis_tag = SpinorBasis::Old;
  return ops;
}

BasisChange standard_basis_change() {
  BasisChange u;
  u.mat.setZero();
  const double s = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < 4; ++k) {
    u.mat(k, k) = s;
    u.mat(k, k + 4) = s;
    u.mat(k + 4, k) = -kI * s;
    u.mat(k + 4, k + 4) = kI * s;
  }
  return u;
}

MetricSpinTensor old_basis_metric() {
  MetricSpinTensor eps;
  eps.mat.setZero();
  for (int k = 0; k < 4; ++k) {
    eps.mat(k, k + 4) = 1.0;
    eps.mat(k + 4, k) = 1.0;
  }
  return eps;
}

ConnectingOperators change_spinor_basis(const ConnectingOperators& ops, const BasisChange& u) {
  ConnectingOperators out;
  for (int i = 0; i < 8; ++i) out.mats[i] = u.mat * ops.mats[i] * u.mat.transpose();
  out.basis_tag = SpinorBasis::New;
  return out;
}

const ConnectingOperators& new_basis_operators() {
  static const ConnectingOperators ops =
      change_spinor_basis(build_seed_operators(), standard_basis_change());
  return ops;
}

SpinorGenerator vector_to_spinor_generator(const Mat8& t, const ConnectingOperators& ops,
                                           double tol) {
  if ((t + t.transpose()).cwiseAbs().maxCoeff() > tol)
    throw ConsistencyError("vector_to_spinor_generator: input not antisymmetric");
  Mat8c s = Mat8c::Zero();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      if (t(i, j) == 0.0) continue;
      // S[C,A] += T^{ij} (M_i M_j^T)[C,A]
      s += t(i, j) * (ops.mats[i] * ops.mats[j].transpose());
    }
  s *= 0.25;
  if (s.imag().cwiseAbs().maxCoeff() > tol)
    throw ConsistencyError("vector_to_spinor_generator: non-real result");
  SpinorGenerator g{s.real()};
  if ((g.mat + g.mat.transpose()).cwiseAbs().maxCoeff() > tol)
    throw ConsistencyError("vector_to_spinor_generator: result not antisymmetric");
  return g;
}

double clifford_diagnostic(const ConnectingOperators& ops) {
  double worst = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const Mat8c r = ops.mats[i] * ops.mats[j].transpose() +
                      ops.mats[j] * ops.mats[i].transpose() -
                      (i == j ? 2.0 : 0.0) * Mat8c::Identity();
      worst = std::max(worst, r.cwiseAbs().maxCoeff());
    }
  return worst;
}

}  // namespace octoclass
