#include "zksym/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "zksym/errors.hpp"
#include "zksym/so5.hpp"

namespace zksym {

InvariantGeometry::InvariantGeometry(const GradedLieAlgebra& alg, AdaptedForm form,
                                     OrthonormalFrame frame)
    : alg_(&alg),
      h_(alg.isotropy_indices()),
      m_(alg.complement_indices()),
      form_(std::move(form)),
      frame_(std::move(frame)) {
  const auto n = dim();
  if (form_.gram.rows() != n || form_.gram.cols() != n || frame_.vectors.rows() != n ||
      frame_.vectors.cols() != n) {
    throw DimensionMismatch("form and frame must be square of size dim m");
  }
  gram_llt_.compute(form_.gram);
  if (gram_llt_.info() != Eigen::Success) {
    throw NumericalFailure("Gram matrix is not positive-definite");
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(frame_.vectors);
  if (!lu.isInvertible()) throw NumericalFailure("frame vectors are linearly dependent");
  frame_inverse_ = lu.inverse();

  const auto un = static_cast<std::size_t>(n);
  bracket_m_table_.assign(un, std::vector<Eigen::VectorXd>(un));
  bracket_h_table_.assign(un, std::vector<Eigen::VectorXd>(un));
  u_table_.assign(un, std::vector<Eigen::VectorXd>(un));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::VectorXd xi = frame_.vectors.col(i);
      const Eigen::VectorXd xj = frame_.vectors.col(j);
      const AlgebraVector full = bracket(*alg_, embed(xi), embed(xj));
      Eigen::VectorXd mpart(n);
      for (std::size_t a = 0; a < m_.size(); ++a) mpart(static_cast<Eigen::Index>(a)) = full(static_cast<Eigen::Index>(m_[a]));
      Eigen::VectorXd hpart(static_cast<Eigen::Index>(h_.size()));
      for (std::size_t a = 0; a < h_.size(); ++a) hpart(static_cast<Eigen::Index>(a)) = full(static_cast<Eigen::Index>(h_[a]));
      bracket_m_table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = to_frame(mpart);
      bracket_h_table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(hpart);
      u_table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = to_frame(u_map_raw(xi, xj));
    }
  }

  nomizu_.assign(un, Eigen::MatrixXd(n, n));
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) {
      nomizu_[i].col(static_cast<Eigen::Index>(j)) = u_table_[i][j] + 0.5 * bracket_m_table_[i][j];
    }
  }

  isotropy_ad_.assign(h_.size(), Eigen::MatrixXd(n, n));
  for (std::size_t a = 0; a < h_.size(); ++a) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const AlgebraVector img =
          bracket(*alg_, alg_->basis_vector(h_[a]), embed(frame_.vectors.col(j)));
      Eigen::VectorXd raw(n);
      for (std::size_t b = 0; b < m_.size(); ++b) raw(static_cast<Eigen::Index>(b)) = img(static_cast<Eigen::Index>(m_[b]));
      isotropy_ad_[a].col(j) = to_frame(raw);
    }
  }

  ricci_ = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      double s = 0.0;
      for (Eigen::Index k = 0; k < n; ++k) s += curvature(basis(k), basis(i), basis(j))(k);
      ricci_(i, j) = ricci_(j, i) = s;
    }
  }
}

AlgebraVector InvariantGeometry::embed(const Eigen::VectorXd& raw_m) const {
  AlgebraVector out = AlgebraVector::Zero(static_cast<Eigen::Index>(alg_->dim()));
  for (std::size_t a = 0; a < m_.size(); ++a) out(static_cast<Eigen::Index>(m_[a])) = raw_m(static_cast<Eigen::Index>(a));
  return out;
}

Eigen::VectorXd InvariantGeometry::raw_bracket_m(const Eigen::VectorXd& x,
                                                 const Eigen::VectorXd& y) const {
  const AlgebraVector full = bracket(*alg_, embed(x), embed(y));
  Eigen::VectorXd out(dim());
  for (std::size_t a = 0; a < m_.size(); ++a) out(static_cast<Eigen::Index>(a)) = full(static_cast<Eigen::Index>(m_[a]));
  return out;
}

Eigen::VectorXd InvariantGeometry::u_map_raw(const Eigen::VectorXd& x,
                                             const Eigen::VectorXd& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("u_map operands must lie in m");
  const Eigen::MatrixXd& g = form_.gram;
  Eigen::VectorXd rhs(dim());
  for (Eigen::Index k = 0; k < dim(); ++k) {
    const Eigen::VectorXd z = Eigen::VectorXd::Unit(dim(), k);
    rhs(k) = 0.5 * (x.dot(g * raw_bracket_m(z, y)) + raw_bracket_m(z, x).dot(g * y));
  }
  return gram_llt_.solve(rhs);
}

Eigen::VectorXd InvariantGeometry::u_map(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("u_map operands must lie in m");
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim());
  for (Eigen::Index i = 0; i < dim(); ++i) {
    if (x(i) == 0.0) continue;
    for (Eigen::Index j = 0; j < dim(); ++j) {
      if (y(j) == 0.0) continue;
      out += x(i) * y(j) * u_table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return out;
}

Eigen::VectorXd InvariantGeometry::bracket_m(const Eigen::VectorXd& x,
                                             const Eigen::VectorXd& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("bracket_m operands must lie in m");
  return to_frame(raw_bracket_m(to_raw(x), to_raw(y)));
}

Eigen::VectorXd InvariantGeometry::bracket_h(const Eigen::VectorXd& x,
                                             const Eigen::VectorXd& y) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(h_.size()));
  for (Eigen::Index i = 0; i < dim(); ++i)
    for (Eigen::Index j = 0; j < dim(); ++j)
      if (x(i) != 0.0 && y(j) != 0.0)
        out += x(i) * y(j) * bracket_h_table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return out;
}

Eigen::MatrixXd InvariantGeometry::nomizu_operator(const Eigen::VectorXd& x) const {
  if (x.size() != dim()) throw DimensionMismatch("nabla direction must lie in m");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim(), dim());
  for (Eigen::Index i = 0; i < dim(); ++i) {
    if (x(i) != 0.0) out += x(i) * nomizu_[static_cast<std::size_t>(i)];
  }
  return out;
}

Eigen::VectorXd InvariantGeometry::nabla(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  if (y.size() != dim()) throw DimensionMismatch("nabla operand must lie in m");
  return nomizu_operator(x) * y;
}

Eigen::VectorXd InvariantGeometry::curvature(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                             const Eigen::VectorXd& z) const {
  const Eigen::MatrixXd lx = nomizu_operator(x);
  const Eigen::MatrixXd ly = nomizu_operator(y);
  Eigen::VectorXd out = lx * (ly * z) - ly * (lx * z) - nabla(bracket_m(x, y), z);
  const Eigen::VectorXd hx = bracket_h(x, y);
  for (std::size_t a = 0; a < h_.size(); ++a) {
    if (double c = hx(static_cast<Eigen::Index>(a)); c != 0.0) out -= c * (isotropy_ad_[a] * z);
  }
  return out;
}

double InvariantGeometry::ricci_derivative(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                           const Eigen::VectorXd& z) const {
  const Eigen::MatrixXd lx = nomizu_operator(x);
  return -(lx * y).dot(ricci_ * z) - y.dot(ricci_ * (lx * z));
}

double InvariantGeometry::ledger(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                 const Eigen::VectorXd& z) const {
  return ricci_derivative(x, y, z) + ricci_derivative(y, z, x) + ricci_derivative(z, x, y);
}

double InvariantGeometry::max_ledger() const {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < dim(); ++i)
    for (Eigen::Index j = i; j < dim(); ++j)
      for (Eigen::Index k = j; k < dim(); ++k)
        worst = std::max(worst, std::abs(ledger(basis(i), basis(j), basis(k))));
  return worst;
}

FrameTable InvariantGeometry::bracket_table() const { return bracket_m_table_; }

FrameTable InvariantGeometry::nabla_table() const {
  FrameTable out(static_cast<std::size_t>(dim()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Eigen::Index j = 0; j < dim(); ++j) out[i].push_back(nomizu_[i].col(j));
  }
  return out;
}

InvariantGeometry flag_geometry(const MetricParams& p) {
  return InvariantGeometry(so5::instance(), build_form(p), orthonormal_frame(p));
}

FrameTable bracket_table(const MetricParams& p) { return flag_geometry(p).bracket_table(); }
FrameTable u_table(const MetricParams& p) { return flag_geometry(p).u_table(); }
Eigen::MatrixXd ricci(const MetricParams& p) { return flag_geometry(p).ricci(); }

}  // namespace zksym
