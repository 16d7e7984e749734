#pragma once

#include "spinstat/matrix.hpp"

#include <map>
#include <string_view>
#include <vector>

namespace spinstat {

enum class SymmetryClass { Symmetric, Antisymmetric, Mixed, Zero };

std::string_view to_string(SymmetryClass c);

struct SymmetryParts {
  ExactMatrix sym;
  ExactMatrix antisym;
  SymmetryClass cls = SymmetryClass::Zero;
};

/// Splits a square matrix into (M + M^T)/2 and (M - M^T)/2 and classifies it.
SymmetryParts symmetry_decompose(const ExactMatrix& m);
SymmetryClass classify_symmetry(const ExactMatrix& m);

struct RowEchelon {
  ExactMatrix reduced;              ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Reduced row echelon form; the leftmost available pivot is always taken.
RowEchelon rref(ExactMatrix m);
std::size_t rank(const ExactMatrix& m);

/// Basis of the right nullspace. Each vector has a 1 in its free column and
/// zeros in the other free columns, so the basis is canonical.
std::vector<Vector> kernel(const ExactMatrix& m);

/// Same contract as kernel() for a system given as sparse rows
/// (column -> coefficient). Suited to the large, very sparse systems that
/// define invariant bilinear forms.
using SparseRow = std::map<std::size_t, Scalar>;
std::vector<Vector> sparse_kernel(std::vector<SparseRow> rows, std::size_t cols);

/// Throws PreconditionError when the matrix is singular.
ExactMatrix inverse(const ExactMatrix& m);
Scalar determinant(const ExactMatrix& m);

/// Coefficients c[0..n] of det(xI - M), lowest degree first, c[n] = 1.
std::vector<Scalar> characteristic_polynomial(const ExactMatrix& m);

/// Reduced basis of the span of the given vectors (rows of the RREF).
std::vector<Vector> span_basis(std::span<const Vector> vectors);

}  // namespace spinstat
