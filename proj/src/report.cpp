#include "zksym/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace zksym::report {

nlohmann::json params_json(const MetricParams& p) {
  return {{"t", p.t()}, {"u", p.u()}, {"v", p.v()}, {"w", p.w()}, {"K", p.K()}};
}

nlohmann::json validation_json(const GradedLieAlgebra& alg, const ValidationReport& rep) {
  auto violations = nlohmann::json::array();
  for (const auto& v : rep.violations) {
    violations.push_back({{"kind", to_string(v.kind)},
                          {"indices", {v.i, v.j, v.k}},
                          {"names", {alg.names()[v.i], alg.names()[v.j], alg.names()[v.k]}},
                          {"magnitude", v.magnitude}});
  }
  return {{"valid", rep.ok()},
          {"max_antisymmetry", rep.max_antisymmetry},
          {"max_jacobi", rep.max_jacobi},
          {"violations", std::move(violations)}};
}

nlohmann::json table_json(const FrameTable& table, const std::vector<std::string>& names,
                          double tol) {
  auto entries = nlohmann::json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = i; j < table[i].size(); ++j) {
      const Eigen::VectorXd& c = table[i][j];
      if (c.cwiseAbs().maxCoeff() <= tol) continue;
      entries.push_back({{"i", i},
                         {"j", j},
                         {"x", names[i]},
                         {"y", names[j]},
                         {"coefficients", std::vector<double>(c.data(), c.data() + c.size())}});
    }
  }
  return {{"frame", names}, {"entries", std::move(entries)}};
}

nlohmann::json matrix_json(const Eigen::MatrixXd& m) {
  auto rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) row[static_cast<std::size_t>(j)] = m(i, j);
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json solution_json(const LedgerSolution& sol) {
  return {{"branch", to_string(sol.branch)},
          {"S", sol.S},
          {"V", sol.V},
          {"W", sol.W},
          {"Usq", sol.Usq},
          {"params", {{"t", sol.params.t()}, {"u", sol.params.u()}, {"v", sol.params.v()}, {"w", sol.params.w()}}},
          {"residuals",
           {{"ledger", sol.residuals.ledger}, {"star", sol.residuals.star}, {"gram", sol.residuals.gram}}},
          {"naturally_reductive", sol.naturally_reductive}};
}

nlohmann::json solution_json(const LedgerSolution& sol, const VerificationReport& rep) {
  auto doc = solution_json(sol);
  doc["verified"] = rep.pass;
  doc["verification"] = rep.message;
  return doc;
}

std::string combination(const Eigen::VectorXd& coeffs, const std::vector<std::string>& names,
                        double tol, int precision) {
  std::ostringstream os;
  os << std::setprecision(precision);
  bool first = true;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    const double c = coeffs(k);
    if (std::abs(c) <= tol) continue;
    if (first) {
      os << c;
    } else {
      os << (c < 0 ? " - " : " + ") << std::abs(c);
    }
    os << ' ' << names[static_cast<std::size_t>(k)];
    first = false;
  }
  return first ? "0" : os.str();
}

std::string table_text(const FrameTable& table, const std::vector<std::string>& names,
                       double tol, int precision) {
  const std::size_t n = table.size();
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  std::size_t width = 4;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      cells[i][j] = combination(table[i][j], names, tol, precision);
      width = std::max(width, cells[i][j].size());
    }
  }
  std::ostringstream os;
  const auto w = static_cast<int>(width + 2);
  os << std::left << std::setw(6) << "";
  for (const auto& name : names) os << std::setw(w) << name;
  os << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    os << std::setw(6) << names[i];
    for (std::size_t j = 0; j < n; ++j) os << std::setw(w) << (j < i ? "" : cells[i][j]);
    os << '\n';
  }
  return os.str();
}

std::string matrix_text(const Eigen::MatrixXd& m, const std::vector<std::string>& names,
                        int precision) {
  std::ostringstream os;
  const int w = precision + 8;
  os << std::setw(6) << "";
  for (const auto& name : names) os << std::setw(w) << name;
  os << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << std::left << std::setw(6) << names[static_cast<std::size_t>(i)] << std::right;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double x = std::abs(m(i, j)) < 1e-14 ? 0.0 : m(i, j);
      os << std::setw(w) << std::setprecision(precision) << x;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace zksym::report
