#include "octoclass/classify.hpp"
#include "octoclass/theta.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace octoclass;
using octoclass::testing::expected_theta;

TEST_CASE("controlling spin-tensor matches the regression baseline, entrywise") {
  for (const std::string& name : builtin_names()) {
    CAPTURE(name);
    const ThetaTensor th = theta_of_table(builtin(name));
    CHECK((th.mat - expected_theta(name)).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(th.has_identity_term == builtin(name).has_identity);
  }
}

TEST_CASE("theta is real and symmetric on all builtins") {
  for (const std::string& name : builtin_names()) {
    const Mat8 th = theta_of_table(builtin(name)).mat;
    CHECK((th - th.transpose()).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("reverse motion reconstructs the full product of unital tables") {
  for (const std::string& name : builtin_names()) {
    const MultiplicationTable t = builtin(name);
    if (!t.has_identity) continue;
    CAPTURE(name);
    const ThetaTensor th = theta_of_table(t);
    const StructuralConstants rec = reconstruct_constants(th, new_basis_operators());
    CHECK(to_structural_constants(t).max_abs_diff(rec) < 1e-8);
  }
}

TEST_CASE("non-unital reconstruction deviation is finite and recorded") {
  const MultiplicationTable t = builtin("carcass");
  const ThetaTensor th = theta_of_table(t);
  const StructuralConstants rec = reconstruct_constants(th, new_basis_operators());
  const double dev = to_structural_constants(t).max_abs_diff(rec);
  CHECK(std::isfinite(dev));
  MESSAGE("carcass roundtrip deviation: ", dev);
}

TEST_CASE("signatures are invariant under random orthogonal spinor conjugation") {
  const Mat8 base = theta_of_table(builtin("octonion")).mat;
  const std::vector<double> ref = symmetric_eigenvalues(base);
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    Mat8 a;
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) a(r, c) = dist(rng);
    const Mat8 q = Eigen::HouseholderQR<Mat8>(a).householderQ();
    const std::vector<double> evs = symmetric_eigenvalues(Mat8(q * base * q.transpose()));
    for (int k = 0; k < 8; ++k) CHECK(std::abs(evs[k] - ref[k]) < 1e-8);
  }
}

TEST_CASE("signature comparison across the builtin corpus") {
  auto verdict = [](const char* a, const char* b) {
    return compare(builtin(a), builtin(b)).verdict;
  };
  CHECK(verdict("octonion", "octonion-noncanonical") == Verdict::Isomorphic);
  CHECK(verdict("gen-octonion-e1", "gen-octonion-e4") == Verdict::Isomorphic);
  CHECK(verdict("octonion", "quaternion-analog") == Verdict::NotIsomorphic);
  CHECK(verdict("octonion", "carcass") == Verdict::NotIsomorphic);
  CHECK(verdict("gen-octonion-e1", "quaternion-analog") == Verdict::NotIsomorphic);
}

TEST_CASE("expected eigenvalue signatures") {
  for (const std::string& name : builtin_names()) {
    CAPTURE(name);
    const std::vector<double> want = octoclass::testing::expected_signature(name);
    const Signature sig = signature(builtin(name));
    for (int k = 0; k < 8; ++k) CHECK(std::abs(sig.eigenvalues[k] - want[k]) < 1e-6);
  }
}
