#include "octoclass/theta.hpp"

namespace octoclass {

ThetaTensor theta_from_constants(const StructuralConstants& stripped,
                                 const ConnectingOperators& ops, bool has_identity,
                                 double tol) {
  if (ops.basis_tag != SpinorBasis::New)
    throw ConsistencyError("theta_from_constants: operators must be in the new basis");
  const auto& m = ops.mats;

  // Staged contraction, O(8^5): first sum the operator-weighted constants,
  // then close the two spinor loops.
  // stage1[m](A,B) = sum_l eta_{lm}^r=... handled per r below.
  Mat8c theta = Mat8c::Zero();
  for (int r = 0; r < 8; ++r) {
    // w(A,B) accumulated over l,m for this r: eta_{lm}^r M_m M_l^T has the
    // wrong index layout, so keep the explicit pair sum; the constants are
    // sparse (at most one r per (l,m)).
    Mat8c partial = Mat8c::Zero();  // partial[C,B] = sum_{l,m,A} eta M_m[C,A] M_l[A,B]
    for (int l = 0; l < 8; ++l)
      for (int mm = 0; mm < 8; ++mm) {
        const double e = stripped.eta(l, mm, r);
        if (e == 0.0) continue;
        partial += e * (m[mm] * m[l]);
      }
    // theta[C,D] += partial[C,B] * M_r[D,B]
    theta += partial * m[r].transpose();
  }
  theta /= 24.0;
  if (has_identity) theta += 0.25 * Mat8c::Identity();

  const double imag = theta.imag().cwiseAbs().maxCoeff();
  if (imag > tol)
    throw ConsistencyError("theta_from_constants: non-real theta (max imag " +
                           std::to_string(imag) + "); seed/basis inconsistency");
  ThetaTensor out{theta.real(), has_identity};
  const double asym = (out.mat - out.mat.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol)
    throw ConsistencyError("theta_from_constants: theta not symmetric (defect " +
                           std::to_string(asym) + ")");
  return out;
}

StructuralConstants reconstruct_constants(const ThetaTensor& theta,
                                          const ConnectingOperators& ops, double tol) {
  if (ops.basis_tag != SpinorBasis::New)
    throw ConsistencyError("reconstruct_constants: operators must be in the new basis");
  const auto& m = ops.mats;
  const Mat8c th = theta.mat.cast<Complex>();

  StructuralConstants out;
  double imag = 0.0;
  for (int j = 0; j < 8; ++j) {
    // left[A,D] = sum_C M_j[C,A] theta[C,D]
    const Mat8c left = m[j].transpose() * th;
    for (int i = 0; i < 8; ++i) {
      // mid[B,D] = sum_A M_i[A,B] left[A,D]
      const Mat8c mid = m[i].transpose() * left;
      for (int k = 0; k < 8; ++k) {
        // eta_{ij}^k = (1/2) sum_{B,D} mid[B,D] M_k[D,B]
        const Complex v = 0.5 * (mid * m[k]).trace();
        imag = std::max(imag, std::abs(v.imag()));
        out.eta(i, j, k) = v.real();
      }
    }
  }
  if (imag > tol)
    throw ConsistencyError("reconstruct_constants: imaginary residue " + std::to_string(imag));
  return out;
}

ThetaTensor theta_of_table(const MultiplicationTable& t, double tol) {
  const StructuralConstants stripped =
      strip_identity_components(to_structural_constants(t));
  return theta_from_constants(stripped, new_basis_operators(), t.has_identity, tol);
}

}  // namespace octoclass
