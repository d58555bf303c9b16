#ifndef CSTAR_LINALG_HPP
#define CSTAR_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cstar/types.hpp"

namespace cstar {

/// U * M * V == S with S diagonal, d_1 | d_2 | ..., and U, V unimodular.
struct SmithForm {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;

  /// Nonzero diagonal entries of S.
  std::vector<Integer> invariants() const;
};

SmithForm smith_normal_form(const IntMatrix& M);

/// Row-style Hermite form: H == T * M, H in row echelon form with positive
/// pivots and the entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix H;
  IntMatrix T;
  Eigen::Index rank = 0;
};

HermiteForm hermite_normal_form(const IntMatrix& M);

/// Nonzero rows of the Hermite form: a canonical basis of the row lattice.
IntMatrix row_lattice_basis(const IntMatrix& M);

/// Presentation of K = Z^cols(P) / im(P^T).
///
/// A vector x in Z^cols(P) maps to the class (free_projection * x,
/// torsion rows * x mod modulus). free_projection is in Hermite form, so
/// two presentations of the same quotient compare equal row by row.
struct AbelianPresentation {
  Eigen::Index rank = 0;
  std::vector<Integer> torsion_invariants;
  IntMatrix free_projection;
  std::vector<std::pair<IntRowVector, Integer>> torsion_projection;
};

AbelianPresentation cokernel_presentation(const IntMatrix& P);

/// Element of K: free coordinates plus torsion residues.
struct ClassVector {
  IntVector free;
  IntVector torsion;

  friend bool operator==(const ClassVector&, const ClassVector&) = default;
};

ClassVector class_of(const AbelianPresentation& K, const IntVector& x);

/// Divides by the gcd of the entries; direction and signs are preserved.
IntVector primitivize(const IntVector& v);

Integer content(const IntVector& v);

/// Some x with A * x == b over the integers, if one exists.
std::optional<IntVector> integral_solve(const IntMatrix& A, const IntVector& b);

// Generic elimination helpers, instantiated for Integer and Rational input.

/// Reduced row echelon form over Q together with the pivot columns.
struct EchelonForm {
  RatMatrix R;
  std::vector<Eigen::Index> pivots;
};

EchelonForm reduced_row_echelon(const RatMatrix& M);

template <typename Scalar>
Eigen::Index rank(const MatrixX<Scalar>& M) {
  return static_cast<Eigen::Index>(reduced_row_echelon(M.template cast<Rational>()).pivots.size());
}

/// Basis (as columns) of the rational kernel, scaled to primitive integer
/// vectors.
IntMatrix integer_kernel(const RatMatrix& M);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& M);

/// Clears denominators and divides by the content.
IntVector primitive_integer_vector(const RatVector& v);

Integer floor_div(const Integer& a, const Integer& b);

}  // namespace cstar

#endif  // CSTAR_LINALG_HPP
