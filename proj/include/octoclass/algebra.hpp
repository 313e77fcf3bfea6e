#pragma once

#include "octoclass/numerics.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace octoclass {

/// One cell of a multiplication table: zero or a signed basis element.
struct SignedBasisRef {
  int sign = 0;   // +1, -1, or 0 for the zero product
  int index = 0;  // 0..7, meaningful only when sign != 0

  bool is_zero() const { return sign == 0; }
  friend bool operator==(const SignedBasisRef&, const SignedBasisRef&) = default;
};

/// 8x8 signed-basis product table: cells[r][c] = e_r * e_c.
struct MultiplicationTable {
  std::array<std::array<SignedBasisRef, 8>, 8> cells{};
  std::string name;
  bool has_identity = false;

  friend bool operator==(const MultiplicationTable& a, const MultiplicationTable& b) {
    return a.cells == b.cells;
  }
};

/// Real tensor of structural constants: eta(l,m,r) is the e_r coefficient
/// of e_l * e_m. Indices 0-based here; slot 0 is the algebra identity.
struct StructuralConstants {
  std::array<Mat8, 8> values{};  // values[l](m,r)

  StructuralConstants() {
    for (auto& v : values) v.setZero();
  }
  double& eta(int l, int m, int r) { return values[l](m, r); }
  double eta(int l, int m, int r) const { return values[l](m, r); }

  double max_abs_diff(const StructuralConstants& o) const {
    double d = 0.0;
    for (int l = 0; l < 8; ++l) d = std::max(d, (values[l] - o.values[l]).cwiseAbs().maxCoeff());
    return d;
  }
};

/// Element of the 8-dimensional algebra in coordinates over e_0..e_7.
using AlgebraElement = Vec8;

/// Parse the table file format: lines starting with '#' are comments,
/// exactly 8 data lines of 8 tokens `0` or `[+-]?e[0-7]`.
/// Throws ParseError with line/column position on malformed input.
MultiplicationTable parse_table(std::string_view text, std::string name = "");

/// Render back to the file format; parse_table(render_table(t)) == t.
std::string render_table(const MultiplicationTable& t);

StructuralConstants to_structural_constants(const MultiplicationTable& t);

/// Copy with every component touching the identity slot zeroed
/// (first, second, or third index equal to 0). Mandatory preprocessing
/// before building the algebra part of the controlling spin-tensor.
StructuralConstants strip_identity_components(const StructuralConstants& c);

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b,
                        const StructuralConstants& c);

/// Conjugation of Eq-style hypercomplex elements: keeps the e_0 coordinate,
/// negates the rest.
AlgebraElement conjugate(const AlgebraElement& a);

/// Scalar part of (a*conj(b) + b*conj(a))/2. Throws ConsistencyError when the
/// result has a non-scalar component beyond tol (non-metric algebra).
double inner_product(const AlgebraElement& a, const AlgebraElement& b,
                     const StructuralConstants& c, double tol = kDefaultTol);

struct AxiomViolation {
  enum class Kind { AlternativeElastic, Elastic };
  Kind kind;
  int a, b, c;      // basis indices of the violating triple
  double residual;  // max-abs of the identity defect
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Exhaustive check of the polarized alternative-type and flexible identities
/// over all 8^3 basis triples.
AxiomReport check_axioms(const MultiplicationTable& t, double tol = kDefaultTol);

/// Built-in corpus. Known names: octonion, gen-octonion-e1, gen-octonion-e4,
/// quaternion-analog, carcass, octonion-noncanonical.
MultiplicationTable builtin(std::string_view name);

const std::vector<std::string>& builtin_names();

}  // namespace octoclass
