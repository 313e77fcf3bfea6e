#pragma once

#include "octoclass/theta.hpp"

#include <string>
#include <vector>

namespace octoclass {

/// Classification key: descending eigenvalues of the controlling spin-tensor
/// plus the unitality flag.
struct Signature {
  std::vector<double> eigenvalues;  // 8 values, sorted descending
  bool has_identity = false;
  std::string source;
};

enum class Verdict { Isomorphic, NotIsomorphic };

struct ClassificationReport {
  Verdict verdict = Verdict::NotIsomorphic;
  Signature left, right;
  double max_deviation = 0.0;  // elementwise over sorted eigenvalues
};

inline constexpr double kSignatureTol = 1e-6;

Signature signature(const MultiplicationTable& t, double tol = kDefaultTol);

ClassificationReport compare(const MultiplicationTable& a, const MultiplicationTable& b,
                             double tol = kSignatureTol);

}  // namespace octoclass
