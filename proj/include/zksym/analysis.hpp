#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "zksym/geometry.hpp"
#include "zksym/metric.hpp"

namespace zksym {

struct NaturalReductivity {
  bool value = false;
  /// max |<U(E_i, E_j), E_k>| over frame triples.
  double max_u = 0.0;
  /// Frame indices (i, j, k) attaining max_u.
  std::array<Eigen::Index, 3> witness{0, 0, 0};
};

/// U-based test: naturally reductive iff U vanishes on the frame.
NaturalReductivity is_naturally_reductive(const InvariantGeometry& geo, double tol);
NaturalReductivity is_naturally_reductive(const MetricParams& p, double tol);

/// Closed-form criterion: u = 0 and t^2 = v^2 = w^2, each within tol.
bool naturally_reductive_closed_form(const MetricParams& p, double tol);

struct IsometrySpace {
  /// Orthonormal kernel basis, one frame-coordinate column per vector.
  Eigen::MatrixXd basis;
  Eigen::VectorXd singular_values;
  Eigen::Index dimension() const { return basis.cols(); }
};

/// X in m with B([X,Y]_m, Z) + B(Y, [X,Z]_m) = 0 for all Y, Z. The system
/// is solved by SVD with cutoff tol * sigma_max.
IsometrySpace infinitesimal_isometries(const InvariantGeometry& geo, double tol);
IsometrySpace infinitesimal_isometries(const MetricParams& p, double tol);

/// Left-hand sides of the four reduced first-Ledger equations in terms of
/// the Ricci entries rho11, rho14, rho33, rho55, rho77.
std::array<double, 4> eval_star_system(const MetricParams& p, const Eigen::MatrixXd& rho);
std::array<double, 4> eval_star_system(const MetricParams& p);

enum class Branch { UZero, UNonzero };

std::string to_string(Branch b);

/// Open S-interval on which the branch has admissible solutions.
std::pair<double, double> admissible_interval(Branch b);

// u = 0 branch: P = (-S^2 + 10 S - 9) / 8.
double u0_product(double S);
double u0_discriminant(double S);

// u != 0 branch.
double unonzero_product(double S);
double unonzero_discriminant(double S);
double unonzero_usq(double S);

struct LedgerResiduals {
  double ledger = 0.0;  // max |L| over the 120 unordered frame triples
  double star = 0.0;    // max |(*)| residual
  double gram = 0.0;    // frame congruence residual
};

/// Normalised solution (V = v^2/t^2, W = w^2/t^2, Usq = u^2/t^4) of the
/// first Ledger condition together with the metric it defines.
struct LedgerSolution {
  Branch branch;
  double S;
  double V;
  double W;
  double Usq;
  MetricParams params;
  LedgerResiduals residuals;
  bool naturally_reductive;
};

/// Metric parameters for (V, W, Usq) at scale t, with u = sign * t^2 sqrt(Usq).
MetricParams params_from_normalized(double V, double W, double Usq, double t, double sign);

/// Families B2(S) (V < W) and B3(S) (V > W). Throws InvalidInput for S
/// outside ]1, 9[.
std::array<LedgerSolution, 2> solve_ledger_u0(double S, double t = 1.0,
                                             double tol = kDefaultTolerance);

/// Both (V, W) orderings times both signs of u. Throws InvalidInput for S
/// outside ]1/3, (7 - sqrt 17)/2[.
std::vector<LedgerSolution> solve_ledger_unonzero(double S, double t = 1.0,
                                                  double tol = kDefaultTolerance);

struct VerificationReport {
  bool pass = false;
  LedgerResiduals residuals;
  double consistency = 0.0;
  bool naturally_reductive = false;
  bool expected_naturally_reductive = false;
  std::string message;
};

VerificationReport verify_solution(const LedgerSolution& sol, double tol);

}  // namespace zksym
