#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "zksym/lie_algebra.hpp"

namespace zksym {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kDefaultDegeneracyGuard = 1e-8;

/// Scalars (t, u, v, w) of an adapted metric on the flag manifold
///   B = t^2 (a1^2 + a2^2 + a3^2 + a4^2) + u (a1 a4 - a2 a3)
///       + v^2 (b1^2 + b2^2) + w^2 (c1^2 + c2^2).
///
/// make() rejects t v w = 0 and u outside ]-4t^2, 4t^2[ with InvalidInput.
/// Positive-definiteness needs the stronger |u| < 2t^2, i.e. K^2 > 0; values
/// with K < guard * |t| are refused with DegenerateMetric.
class MetricParams {
 public:
  static MetricParams make(double t, double u, double v, double w,
                           double guard = kDefaultDegeneracyGuard);

  double t() const { return t_; }
  double u() const { return u_; }
  double v() const { return v_; }
  double w() const { return w_; }
  /// sqrt(t^2 - u^2 / (4 t^2)).
  double K() const { return k_; }

  std::string to_string() const;

 private:
  MetricParams(double t, double u, double v, double w, double k)
      : t_(t), u_(u), v_(v), w_(w), k_(k) {}
  double t_, u_, v_, w_, k_;
};

/// Gram matrix of B on m in the raw complement basis. For so(5) the order
/// is (A1, A2, A3, A4, B1, B2, C1, C2).
struct AdaptedForm {
  Eigen::MatrixXd gram;
};

/// Orthonormal frame of m. Column j holds the j-th frame vector in raw
/// m-coordinates.
struct OrthonormalFrame {
  std::vector<std::string> names;
  Eigen::MatrixXd vectors;

  Eigen::Index size() const { return vectors.cols(); }
};

AdaptedForm build_form(const MetricParams& p);

/// Frame dual to the coframe
///   ~a1 = t a1 + u/(2t) a4,  ~a2 = t a2 - u/(2t) a3,  ~a3 = K a3,  ~a4 = K a4,
///   ~b_i = v b_i,  ~c_i = w c_i.
OrthonormalFrame orthonormal_frame(const MetricParams& p);

/// Frame names ~A1 .. ~C2 in table order.
const std::vector<std::string>& frame_names();

/// Generic Gram-Schmidt frame (via Cholesky) for algebras without a
/// hand-derived frame. Throws NumericalFailure if `form` is not SPD.
OrthonormalFrame cholesky_frame(const AdaptedForm& form, const std::vector<std::string>& names);

/// max |F^T G F - I|.
double frame_congruence_residual(const AdaptedForm& form, const OrthonormalFrame& frame);

struct InvarianceReport {
  double max_residual = 0.0;
  std::size_t isotropy = 0;
  std::size_t x = 0;
  std::size_t y = 0;
  bool ok = true;
};

/// max over Z in g_e and raw m-basis X, Y of |B([Z,X],Y) + B(X,[Z,Y])|.
InvarianceReport check_adH_invariance(const GradedLieAlgebra& alg, const AdaptedForm& form,
                                      double tol);

/// max |B(g_gamma, g_gamma')| over distinct labels; zero for adapted forms.
double block_leakage(const GradedLieAlgebra& alg, const AdaptedForm& form);

}  // namespace zksym
