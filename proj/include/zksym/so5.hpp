#pragma once

#include <array>
#include <string_view>

#include <Eigen/Dense>

#include "zksym/lie_algebra.hpp"

namespace zksym::so5 {

using Matrix5 = Eigen::Matrix<double, 5, 5>;

/// Canonical basis order. X_i span g_e, A_i span g_a, B_i span g_b and
/// C_i span g_c.
inline constexpr std::array<std::string_view, 10> kBasisNames = {
    "X1", "X2", "A1", "A2", "A3", "A4", "B1", "B2", "C1", "C2"};

/// (row, col) of the +1 entry of each basis matrix, 0-based. The entry
/// mirrored below the diagonal is -1.
///
///   [  0   x1  a1  a2  b1 ]
///   [ -x1  0   a3  a4  b2 ]
///   [ -a1 -a3  0   x2  c1 ]
///   [ -a2 -a4 -x2  0   c2 ]
///   [ -b1 -b2 -c1 -c2  0  ]
inline constexpr std::array<std::array<int, 2>, 10> kUpperEntry = {{
    {0, 1}, {2, 3},                  // X1 X2
    {0, 2}, {0, 3}, {1, 2}, {1, 3},  // A1..A4
    {0, 4}, {1, 4},                  // B1 B2
    {2, 4}, {3, 4},                  // C1 C2
}};

/// Z_2^2 labels: e = 00, a = 10, b = 01, c = ab = 11.
GradingLabel label_e();
GradingLabel label_a();
GradingLabel label_b();
GradingLabel label_c();

Matrix5 basis_matrix(std::size_t index);

/// The graded algebra with structure constants read off the matrix
/// commutators of the basis.
GradedLieAlgebra build_so5();

/// Shared immutable instance.
const GradedLieAlgebra& instance();

Matrix5 matrix_of(const AlgebraVector& x);

/// Throws InvalidInput if `m` is not skew-symmetric within `tol`.
AlgebraVector vector_of(const Matrix5& m, double tol = 1e-9);

}  // namespace zksym::so5
