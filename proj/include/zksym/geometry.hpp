#pragma once

#include <vector>

#include <Eigen/Dense>

#include "zksym/lie_algebra.hpp"
#include "zksym/metric.hpp"

namespace zksym {

/// table[i][j] is an m-vector in frame coordinates.
using FrameTable = std::vector<std::vector<Eigen::VectorXd>>;

/// Riemannian geometry at the origin of a reductive homogeneous space
/// G/H with g = h + m, for the invariant metric given by `form`.
///
/// Everything public works in coordinates of the orthonormal frame, where
/// the metric is the Euclidean dot product. The Levi-Civita connection is
/// the Nomizu operator
///   nabla_X Y = U(X, Y) + 1/2 [X, Y]_m,
/// with U the symmetric map defined by
///   2 B(U(X,Y), Z) = B(X, [Z,Y]_m) + B([Z,X]_m, Y).
/// Curvature composes Nomizu operators:
///   R(X,Y) = [L_X, L_Y] - L_{[X,Y]_m} - ad([X,Y]_h)|_m.
///
/// All tables are built in the constructor; the object is immutable after.
class InvariantGeometry {
 public:
  InvariantGeometry(const GradedLieAlgebra& alg, AdaptedForm form, OrthonormalFrame frame);

  Eigen::Index dim() const { return static_cast<Eigen::Index>(m_.size()); }
  const OrthonormalFrame& frame() const { return frame_; }
  const AdaptedForm& form() const { return form_; }
  Eigen::VectorXd basis(Eigen::Index i) const { return Eigen::VectorXd::Unit(dim(), i); }

  Eigen::VectorXd to_raw(const Eigen::VectorXd& f) const { return frame_.vectors * f; }
  Eigen::VectorXd to_frame(const Eigen::VectorXd& raw) const { return frame_inverse_ * raw; }

  /// U-map on raw m-coordinates: assembles the right-hand side over the raw
  /// basis of m and solves with the Gram matrix (Cholesky).
  Eigen::VectorXd u_map_raw(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  Eigen::VectorXd u_map(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
  Eigen::VectorXd bracket_m(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
  /// Coefficients of [x, y]_h in the raw isotropy basis.
  Eigen::VectorXd bracket_h(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
  Eigen::VectorXd nabla(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
  /// Matrix of Y -> nabla_X Y.
  Eigen::MatrixXd nomizu_operator(const Eigen::VectorXd& x) const;
  Eigen::VectorXd curvature(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                            const Eigen::VectorXd& z) const;

  /// rho_ij = sum_k <R(E_k, E_i) E_j, E_k>.
  const Eigen::MatrixXd& ricci() const { return ricci_; }

  /// (nabla_X rho)(Y, Z) = -rho(nabla_X Y, Z) - rho(Y, nabla_X Z).
  double ricci_derivative(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                          const Eigen::VectorXd& z) const;
  /// Cyclic sum of ricci_derivative: the first Ledger tensor.
  double ledger(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                const Eigen::VectorXd& z) const;
  /// max |L| over all unordered frame triples i <= j <= k.
  double max_ledger() const;

  FrameTable bracket_table() const;
  FrameTable u_table() const { return u_table_; }
  FrameTable nabla_table() const;

 private:
  const GradedLieAlgebra* alg_;
  std::vector<std::size_t> h_;
  std::vector<std::size_t> m_;
  AdaptedForm form_;
  OrthonormalFrame frame_;
  Eigen::MatrixXd frame_inverse_;
  Eigen::LLT<Eigen::MatrixXd> gram_llt_;

  FrameTable bracket_m_table_;               // [E_i, E_j]_m
  std::vector<std::vector<Eigen::VectorXd>> bracket_h_table_;  // raw h coefficients
  FrameTable u_table_;
  std::vector<Eigen::MatrixXd> nomizu_;      // L_{E_i}
  std::vector<Eigen::MatrixXd> isotropy_ad_; // ad(h_a) on m, frame coordinates
  Eigen::MatrixXd ricci_;

  Eigen::VectorXd raw_bracket_m(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
  AlgebraVector embed(const Eigen::VectorXd& raw_m) const;
};

/// Geometry of the flag manifold SO(5)/SO(2)xSO(2)xSO(1) in the frame
/// ~A1 .. ~C2 for the given parameters.
InvariantGeometry flag_geometry(const MetricParams& p);

FrameTable bracket_table(const MetricParams& p);
FrameTable u_table(const MetricParams& p);
Eigen::MatrixXd ricci(const MetricParams& p);

}  // namespace zksym
