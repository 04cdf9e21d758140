#include "zksym/algebra_io.hpp"

#include <cmath>
#include <fstream>

#include "zksym/errors.hpp"

namespace zksym {

namespace {

nlohmann::json number(double v) {
  if (std::trunc(v) == v && std::abs(v) < 9.0e15) return static_cast<long long>(v);
  return v;
}

}  // namespace

nlohmann::json algebra_to_json(const GradedLieAlgebra& alg) {
  nlohmann::json doc;
  doc["dim"] = alg.dim();
  doc["names"] = alg.names();
  auto grading = nlohmann::json::array();
  for (const auto& g : alg.grading()) {
    auto bits = nlohmann::json::array();
    for (bool b : g.bits()) bits.push_back(b ? 1 : 0);
    grading.push_back(std::move(bits));
  }
  doc["grading"] = std::move(grading);
  auto structure = nlohmann::json::array();
  for (const auto& sc : alg.nonzeros()) {
    structure.push_back({sc.i, sc.j, sc.k, number(sc.value)});
  }
  doc["structure"] = std::move(structure);
  return doc;
}

GradedLieAlgebra algebra_from_json(const nlohmann::json& doc) {
  try {
    const auto dim = doc.at("dim").get<std::size_t>();
    auto names = doc.at("names").get<std::vector<std::string>>();
    if (names.size() != dim) throw InvalidInput("names length differs from dim");

    std::vector<GradingLabel> grading;
    for (const auto& entry : doc.at("grading")) {
      std::vector<bool> bits;
      for (const auto& b : entry) {
        const int bit = b.get<int>();
        if (bit != 0 && bit != 1) throw InvalidInput("grading bits must be 0 or 1");
        bits.push_back(bit == 1);
      }
      grading.emplace_back(std::move(bits));
    }

    std::vector<StructureConstant> constants;
    for (const auto& entry : doc.at("structure")) {
      if (!entry.is_array() || entry.size() != 4) {
        throw InvalidInput("structure entries must be [i, j, k, value]");
      }
      constants.push_back({entry[0].get<std::size_t>(), entry[1].get<std::size_t>(),
                           entry[2].get<std::size_t>(), entry[3].get<double>()});
    }
    return GradedLieAlgebra(std::move(names), std::move(grading), constants);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed algebra document: ") + e.what());
  }
}

GradedLieAlgebra load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open algebra file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("algebra file is not valid JSON: " + std::string(e.what()));
  }
  return algebra_from_json(doc);
}

}  // namespace zksym
