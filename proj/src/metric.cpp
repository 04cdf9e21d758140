#include "zksym/metric.hpp"

#include <cmath>
#include <sstream>

#include "zksym/errors.hpp"

namespace zksym {

MetricParams MetricParams::make(double t, double u, double v, double w, double guard) {
  if (!std::isfinite(t) || !std::isfinite(u) || !std::isfinite(v) || !std::isfinite(w)) {
    throw InvalidInput("metric parameters must be finite");
  }
  if (t == 0.0 || v == 0.0 || w == 0.0) {
    throw InvalidInput("metric parameters need t v w != 0");
  }
  const double bound = 4.0 * t * t;
  if (!(std::abs(u) < bound)) {
    std::ostringstream os;
    os << "u = " << u << " outside the open interval ]-4t^2, 4t^2[ = ]" << -bound << ", "
       << bound << "[";
    throw InvalidInput(os.str());
  }
  const double k2 = t * t - u * u / (4.0 * t * t);
  if (!(k2 > 0.0) || std::sqrt(k2) < guard * std::abs(t)) {
    std::ostringstream os;
    os << "degenerate metric: K^2 = t^2 - u^2/(4t^2) = " << k2 << " (needs K >= " << guard
       << "*|t|, i.e. |u| clearly below 2t^2)";
    throw DegenerateMetric(os.str());
  }
  return MetricParams(t, u, v, w, std::sqrt(k2));
}

std::string MetricParams::to_string() const {
  std::ostringstream os;
  os << "(t=" << t_ << ", u=" << u_ << ", v=" << v_ << ", w=" << w_ << ")";
  return os.str();
}

AdaptedForm build_form(const MetricParams& p) {
  const double t2 = p.t() * p.t();
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(8, 8);
  for (int i = 0; i < 4; ++i) g(i, i) = t2;
  g(0, 3) = g(3, 0) = p.u() / 2.0;
  g(1, 2) = g(2, 1) = -p.u() / 2.0;
  g(4, 4) = g(5, 5) = p.v() * p.v();
  g(6, 6) = g(7, 7) = p.w() * p.w();
  return {std::move(g)};
}

const std::vector<std::string>& frame_names() {
  static const std::vector<std::string> names = {"~A1", "~A2", "~A3", "~A4",
                                                 "~B1", "~B2", "~C1", "~C2"};
  return names;
}

OrthonormalFrame orthonormal_frame(const MetricParams& p) {
  const double t = p.t();
  const double k = p.K();
  const double mix = p.u() / (2.0 * t * t * k);
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(8, 8);
  f(0, 0) = 1.0 / t;
  f(1, 1) = 1.0 / t;
  f(1, 2) = mix;
  f(2, 2) = 1.0 / k;
  f(0, 3) = -mix;
  f(3, 3) = 1.0 / k;
  f(4, 4) = f(5, 5) = 1.0 / p.v();
  f(6, 6) = f(7, 7) = 1.0 / p.w();
  return {frame_names(), std::move(f)};
}

OrthonormalFrame cholesky_frame(const AdaptedForm& form, const std::vector<std::string>& names) {
  Eigen::LLT<Eigen::MatrixXd> llt(form.gram);
  if (llt.info() != Eigen::Success) throw NumericalFailure("form is not positive-definite");
  // G = L L^T, so F = L^{-T} satisfies F^T G F = I.
  const auto n = form.gram.rows();
  Eigen::MatrixXd f = llt.matrixU().solve(Eigen::MatrixXd::Identity(n, n));
  return {names, std::move(f)};
}

double frame_congruence_residual(const AdaptedForm& form, const OrthonormalFrame& frame) {
  const auto n = frame.vectors.cols();
  return (frame.vectors.transpose() * form.gram * frame.vectors -
          Eigen::MatrixXd::Identity(n, n))
      .cwiseAbs()
      .maxCoeff();
}

namespace {

Eigen::VectorXd restrict_to(const AlgebraVector& x, const std::vector<std::size_t>& idx) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) out(static_cast<Eigen::Index>(i)) = x(static_cast<Eigen::Index>(idx[i]));
  return out;
}

}  // namespace

InvarianceReport check_adH_invariance(const GradedLieAlgebra& alg, const AdaptedForm& form,
                                      double tol) {
  const auto h = alg.isotropy_indices();
  const auto m = alg.complement_indices();
  if (form.gram.rows() != static_cast<Eigen::Index>(m.size())) {
    throw DimensionMismatch("form dimension does not match m");
  }
  InvarianceReport report;
  for (std::size_t z : h) {
    // Matrix of ad(Z) restricted to m; reductivity keeps the image in m.
    Eigen::MatrixXd ad(m.size(), m.size());
    for (std::size_t c = 0; c < m.size(); ++c) {
      ad.col(static_cast<Eigen::Index>(c)) =
          restrict_to(bracket(alg, alg.basis_vector(z), alg.basis_vector(m[c])), m);
    }
    const Eigen::MatrixXd r = ad.transpose() * form.gram + form.gram * ad;
    Eigen::Index ix = 0, iy = 0;
    const double worst = r.cwiseAbs().maxCoeff(&ix, &iy);
    if (worst > report.max_residual) {
      report.max_residual = worst;
      report.isotropy = z;
      report.x = m[static_cast<std::size_t>(ix)];
      report.y = m[static_cast<std::size_t>(iy)];
    }
  }
  report.ok = report.max_residual <= tol;
  return report;
}

double block_leakage(const GradedLieAlgebra& alg, const AdaptedForm& form) {
  const auto m = alg.complement_indices();
  double worst = 0.0;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b)
      if (!(alg.label(m[a]) == alg.label(m[b])))
        worst = std::max(worst, std::abs(form.gram(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b))));
  return worst;
}

}  // namespace zksym
