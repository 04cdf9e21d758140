#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zksym/analysis.hpp"
#include "zksym/geometry.hpp"
#include "zksym/lie_algebra.hpp"

namespace zksym::report {

nlohmann::json params_json(const MetricParams& p);
nlohmann::json validation_json(const GradedLieAlgebra& alg, const ValidationReport& rep);
/// {"frame": [...], "entries": [{"i","j","x","y","coefficients": [...]}]},
/// nonzero entries with i <= j only (tables are (anti)symmetric).
nlohmann::json table_json(const FrameTable& table, const std::vector<std::string>& names,
                          double tol);
nlohmann::json matrix_json(const Eigen::MatrixXd& m);
nlohmann::json solution_json(const LedgerSolution& sol);
nlohmann::json solution_json(const LedgerSolution& sol, const VerificationReport& rep);

/// Human-readable linear combination, e.g. "-1.36752 ~C1 + 0.2 ~A4".
std::string combination(const Eigen::VectorXd& coeffs, const std::vector<std::string>& names,
                        double tol, int precision = 6);

/// Upper-triangular text grid with rows and columns labelled by `names`.
std::string table_text(const FrameTable& table, const std::vector<std::string>& names,
                       double tol, int precision = 6);
std::string matrix_text(const Eigen::MatrixXd& m, const std::vector<std::string>& names,
                        int precision = 6);

}  // namespace zksym::report
