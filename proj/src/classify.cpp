#include "octoclass/classify.hpp"

namespace octoclass {

Signature signature(const MultiplicationTable& t, double tol) {
  const ThetaTensor th = theta_of_table(t, tol);
  Signature s;
  s.eigenvalues = symmetric_eigenvalues(th.mat, tol);
  s.has_identity = t.has_identity;
  s.source = t.name;
  return s;
}

ClassificationReport compare(const MultiplicationTable& a, const MultiplicationTable& b,
                             double tol) {
  ClassificationReport rep;
  rep.left = signature(a);
  rep.right = signature(b);
  for (int k = 0; k < 8; ++k)
    rep.max_deviation =
        std::max(rep.max_deviation, std::abs(rep.left.eigenvalues[k] - rep.right.eigenvalues[k]));
  const bool same_spectrum = rep.max_deviation < tol;
  // Unital and non-unital spectra are not on a common footing (theta_0 is
  // omitted for the latter), so the flag is a hard key.
  const bool same_kind = rep.left.has_identity == rep.right.has_identity;
  rep.verdict = (same_spectrum && same_kind) ? Verdict::Isomorphic : Verdict::NotIsomorphic;
  return rep;
}

}  // namespace octoclass
