#pragma once

#include <optional>
#include <vector>

#include "primtower/arith/field_element.hpp"

namespace primtower {

using Vector = std::vector<FieldElement>;
using Matrix = std::vector<Vector>;  // row-major

struct Echelon {
  Matrix rows;              // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column of each row
};

/// Gauss-Jordan elimination over the field of rational functions.
Echelon reduced_echelon(const Matrix& m, int cols);
int rank(const Matrix& m, int cols);
/// Some solution of A z = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b, int cols);
/// Basis of {z : A z = 0}.
std::vector<Vector> nullspace(const Matrix& a, int cols);

/// Rows expressing sum_j z_j elems[j] = 0 over the constants Q(v_0..v_{P-1}):
/// one row per monomial in the variables >= P after clearing a common
/// denominator.
Matrix coordinate_rows(const std::vector<FieldElement>& elems, int num_params);

}  // namespace primtower
