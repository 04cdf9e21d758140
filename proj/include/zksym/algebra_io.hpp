#pragma once

#include <filesystem>

#include <json.hpp>

#include "zksym/lie_algebra.hpp"

namespace zksym {

/// JSON document layout:
///   {"dim": n, "names": [...], "grading": [[0,1], ...],
///    "structure": [[i, j, k, value], ...]}
/// Only nonzero constants are listed. Integer-valued constants are written
/// as JSON integers so they round-trip bit-exactly.
nlohmann::json algebra_to_json(const GradedLieAlgebra& alg);

/// Throws InvalidInput on any schema problem.
GradedLieAlgebra algebra_from_json(const nlohmann::json& doc);

GradedLieAlgebra load_algebra(const std::filesystem::path& path);

}  // namespace zksym
