#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "zksym/grading.hpp"

namespace zksym {

/// Coordinates in the algebra's raw basis.
using AlgebraVector = Eigen::VectorXd;

/// One structure constant: [e_i, e_j] has coefficient `value` on e_k.
struct StructureConstant {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  double value;
};

/// Finite-dimensional real Lie algebra with a Z_2^k-grading of its basis.
///
/// The basis order is fixed at construction and every table, frame and
/// report indexes into it. The isotropy part g_e is spanned by the basis
/// vectors carrying the identity label; m is spanned by the rest.
///
/// Construction only checks shapes. Antisymmetry, Jacobi and grading
/// closure are checked by validate(), which reports instead of throwing.
class GradedLieAlgebra {
 public:
  GradedLieAlgebra(std::vector<std::string> names,
                   std::vector<GradingLabel> grading,
                   const std::vector<StructureConstant>& constants);

  std::size_t dim() const { return names_.size(); }
  std::size_t grading_rank() const { return grading_.front().rank(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<GradingLabel>& grading() const { return grading_; }
  const GradingLabel& label(std::size_t i) const { return grading_.at(i); }

  double constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim() + j) * dim() + k];
  }

  /// Throws InvalidInput for an unknown name.
  std::size_t index_of(std::string_view name) const;
  AlgebraVector basis_vector(std::size_t i) const;
  AlgebraVector basis_vector(std::string_view name) const {
    return basis_vector(index_of(name));
  }

  std::vector<std::size_t> isotropy_indices() const;
  std::vector<std::size_t> complement_indices() const;
  std::set<GradingLabel> labels() const;
  std::set<GradingLabel> complement_labels() const;

  /// All nonzero constants in (i, j, k) lexicographic order.
  std::vector<StructureConstant> nonzeros() const;

 private:
  std::vector<std::string> names_;
  std::vector<GradingLabel> grading_;
  std::vector<double> c_;
};

/// Bilinear bracket from the structure constants. Throws DimensionMismatch.
AlgebraVector bracket(const GradedLieAlgebra& alg, const AlgebraVector& x,
                      const AlgebraVector& y);

/// Zero every coordinate whose basis label is not in `labels`.
AlgebraVector project(const GradedLieAlgebra& alg, const AlgebraVector& x,
                      const std::set<GradingLabel>& labels);

struct Violation {
  enum class Kind { Antisymmetry, Jacobi, GradingClosure };
  Kind kind;
  std::size_t i;
  std::size_t j;
  std::size_t k;
  double magnitude;
};

std::string_view to_string(Violation::Kind kind);

struct ValidationReport {
  std::vector<Violation> violations;
  double max_antisymmetry = 0.0;
  double max_jacobi = 0.0;

  bool ok() const { return violations.empty(); }
  std::size_t count(Violation::Kind kind) const;
};

/// Checks antisymmetry of c[i][j][.], the Jacobi identity on every basis
/// triple i < j < l, and grading closure of every nonzero constant.
/// Comparisons are strict (`> tol`), so tol = 0 demands exact values.
ValidationReport validate(const GradedLieAlgebra& alg, double tol);

}  // namespace zksym
