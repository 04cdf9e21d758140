#include "zksym/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zksym/errors.hpp"

namespace zksym {

NaturalReductivity is_naturally_reductive(const InvariantGeometry& geo, double tol) {
  NaturalReductivity out;
  const auto table = geo.u_table();
  for (Eigen::Index i = 0; i < geo.dim(); ++i) {
    for (Eigen::Index j = 0; j < geo.dim(); ++j) {
      const Eigen::VectorXd& u = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      Eigen::Index k = 0;
      const double m = u.cwiseAbs().maxCoeff(&k);
      if (m > out.max_u) {
        out.max_u = m;
        out.witness = {i, j, k};
      }
    }
  }
  out.value = out.max_u <= tol;
  return out;
}

NaturalReductivity is_naturally_reductive(const MetricParams& p, double tol) {
  return is_naturally_reductive(flag_geometry(p), tol);
}

bool naturally_reductive_closed_form(const MetricParams& p, double tol) {
  const double t2 = p.t() * p.t();
  return std::abs(p.u()) <= tol && std::abs(t2 - p.v() * p.v()) <= tol &&
         std::abs(t2 - p.w() * p.w()) <= tol;
}

IsometrySpace infinitesimal_isometries(const InvariantGeometry& geo, double tol) {
  const Eigen::Index n = geo.dim();
  // Row (y, z), column x: <[E_x, E_y]_m, E_z> + <E_y, [E_x, E_z]_m>.
  const FrameTable br = geo.bracket_table();
  Eigen::MatrixXd system(n * n, n);
  for (Eigen::Index x = 0; x < n; ++x) {
    const auto& row = br[static_cast<std::size_t>(x)];
    for (Eigen::Index y = 0; y < n; ++y) {
      for (Eigen::Index z = 0; z < n; ++z) {
        system(y * n + z, x) = row[static_cast<std::size_t>(y)](z) + row[static_cast<std::size_t>(z)](y);
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
  IsometrySpace out;
  out.singular_values = svd.singularValues();
  const double sigma_max = out.singular_values.size() ? out.singular_values(0) : 0.0;
  const double cutoff = tol * sigma_max;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < out.singular_values.size(); ++i) {
    if (out.singular_values(i) > cutoff) ++rank;
  }
  out.basis = svd.matrixV().rightCols(n - rank);
  return out;
}

IsometrySpace infinitesimal_isometries(const MetricParams& p, double tol) {
  return infinitesimal_isometries(flag_geometry(p), tol);
}

std::array<double, 4> eval_star_system(const MetricParams& p, const Eigen::MatrixXd& rho) {
  const double t = p.t(), u = p.u(), v = p.v(), w = p.w(), k = p.K();
  const double t2 = t * t, v2 = v * v, w2 = w * w, k2 = k * k;
  const double r11 = rho(0, 0), r14 = rho(0, 3), r33 = rho(2, 2), r55 = rho(4, 4),
               r77 = rho(6, 6);
  return {
      (v2 - w2) * r11 + (w2 - t2) * r55 + (t2 - v2) * r77 + u * (w2 - v2) / (2 * t * k) * r14,
      -u / (2 * t) * r55 + u / (2 * t) * r77 + (v2 - w2) / k * r14,
      u * (v2 - w2) / (2 * t * v * w * k) * r33 + u * w / (2 * t * v * k) * r55 -
          (v2 - w2) / (v * w) * r14 - u * v / (2 * t * w * k) * r77,
      (v2 - w2) * r33 + (w2 - k2) * r55 + (k2 - v2) * r77,
  };
}

std::array<double, 4> eval_star_system(const MetricParams& p) {
  return eval_star_system(p, ricci(p));
}

std::string to_string(Branch b) { return b == Branch::UZero ? "u-zero" : "u-nonzero"; }

std::pair<double, double> admissible_interval(Branch b) {
  if (b == Branch::UZero) return {1.0, 9.0};
  return {1.0 / 3.0, (7.0 - std::sqrt(17.0)) / 2.0};
}

double u0_product(double S) { return (-S * S + 10.0 * S - 9.0) / 8.0; }
double u0_discriminant(double S) { return (3.0 * S * S - 10.0 * S + 9.0) / 2.0; }

double unonzero_product(double S) {
  return -S * (S - 4.0) * (3.0 * S - 1.0) / (8.0 * (8.0 - 3.0 * S));
}
double unonzero_discriminant(double S) {
  return S * (-3.0 * S * S + 3.0 * S + 4.0) / (2.0 * (8.0 - 3.0 * S));
}
double unonzero_usq(double S) { return 4.0 * (8.0 - 7.0 * S + S * S) / (8.0 - 3.0 * S); }

namespace {

void require_in_interval(Branch b, double S) {
  const auto [lo, hi] = admissible_interval(b);
  if (!(S > lo && S < hi)) {
    std::ostringstream os;
    os.precision(17);
    os << "S = " << S << " outside the admissible open interval ]" << lo << ", " << hi
       << "[ of the " << to_string(b) << " branch";
    throw InvalidInput(os.str());
  }
}

double max_abs(const std::array<double, 4>& r) {
  double m = 0.0;
  for (double x : r) m = std::max(m, std::abs(x));
  return m;
}

LedgerSolution evaluate(Branch branch, double S, double V, double W, double Usq,
                        const MetricParams& p, double tol) {
  const InvariantGeometry geo = flag_geometry(p);
  LedgerResiduals res;
  res.ledger = geo.max_ledger();
  res.star = max_abs(eval_star_system(p, geo.ricci()));
  res.gram = frame_congruence_residual(geo.form(), geo.frame());
  return {branch, S, V, W, Usq, p, res, is_naturally_reductive(geo, tol).value};
}

}  // namespace

MetricParams params_from_normalized(double V, double W, double Usq, double t, double sign) {
  if (!(V > 0.0) || !(W > 0.0) || !(Usq >= 0.0)) {
    throw InvalidInput("normalized parameters need V > 0, W > 0, Usq >= 0");
  }
  const double t2 = t * t;
  return MetricParams::make(t, std::copysign(t2 * std::sqrt(Usq), sign), t * std::sqrt(V),
                            t * std::sqrt(W));
}

std::array<LedgerSolution, 2> solve_ledger_u0(double S, double t, double tol) {
  require_in_interval(Branch::UZero, S);
  const double root = std::sqrt(u0_discriminant(S));
  const double x1 = (S - root) / 2.0;
  const double x2 = (S + root) / 2.0;
  return {evaluate(Branch::UZero, S, x1, x2, 0.0, params_from_normalized(x1, x2, 0.0, t, 1.0), tol),
          evaluate(Branch::UZero, S, x2, x1, 0.0, params_from_normalized(x2, x1, 0.0, t, 1.0), tol)};
}

std::vector<LedgerSolution> solve_ledger_unonzero(double S, double t, double tol) {
  require_in_interval(Branch::UNonzero, S);
  const double delta = unonzero_discriminant(S);
  if (delta < 0.0) throw NumericalFailure("negative discriminant inside admissible interval");
  const double root = std::sqrt(delta);
  const double big = (S + root) / 2.0;
  const double small = (S - root) / 2.0;
  const double usq = unonzero_usq(S);

  std::vector<LedgerSolution> out;
  for (auto [V, W] : {std::pair{big, small}, std::pair{small, big}}) {
    for (double sign : {1.0, -1.0}) {
      out.push_back(evaluate(Branch::UNonzero, S, V, W, usq,
                             params_from_normalized(V, W, usq, t, sign), tol));
    }
  }
  return out;
}

VerificationReport verify_solution(const LedgerSolution& sol, double tol) {
  VerificationReport rep;
  std::ostringstream why;
  try {
    const double sign = sol.params.u() < 0.0 ? -1.0 : 1.0;
    const MetricParams p = params_from_normalized(sol.V, sol.W, sol.Usq, sol.params.t(), sign);

    double consistency = std::max({std::abs(p.u() - sol.params.u()),
                                   std::abs(p.v() * p.v() - sol.params.v() * sol.params.v()),
                                   std::abs(p.w() * p.w() - sol.params.w() * sol.params.w()),
                                   std::abs(sol.V + sol.W - sol.S)});
    if (sol.branch == Branch::UZero) {
      consistency = std::max({consistency, std::abs(sol.Usq), std::abs(sol.V * sol.W - u0_product(sol.S))});
    } else {
      consistency = std::max({consistency, std::abs(sol.V * sol.W - unonzero_product(sol.S)),
                              std::abs(sol.Usq - unonzero_usq(sol.S))});
    }
    rep.consistency = consistency;

    const InvariantGeometry geo = flag_geometry(p);
    rep.residuals.ledger = geo.max_ledger();
    rep.residuals.star = max_abs(eval_star_system(p, geo.ricci()));
    rep.residuals.gram = frame_congruence_residual(geo.form(), geo.frame());
    rep.naturally_reductive = is_naturally_reductive(geo, tol).value;
    rep.expected_naturally_reductive = sol.branch == Branch::UZero &&
                                       std::abs(sol.V - 1.0) <= tol &&
                                       std::abs(sol.W - 1.0) <= tol;

    rep.pass = true;
    auto fail = [&](const std::string& what, double value) {
      rep.pass = false;
      why << what << " residual " << value << " > " << tol << "; ";
    };
    if (rep.residuals.ledger > tol) fail("ledger", rep.residuals.ledger);
    if (rep.residuals.star > tol) fail("star", rep.residuals.star);
    if (rep.residuals.gram > tol) fail("gram", rep.residuals.gram);
    if (rep.consistency > tol) fail("consistency", rep.consistency);
    if (rep.naturally_reductive != rep.expected_naturally_reductive) {
      rep.pass = false;
      why << "naturally reductive = " << rep.naturally_reductive << ", expected "
          << rep.expected_naturally_reductive << "; ";
    }
  } catch (const std::exception& e) {
    rep.pass = false;
    why << e.what();
  }
  rep.message = rep.pass ? "PASS" : "FAIL: " + why.str();
  return rep;
}

}  // namespace zksym
