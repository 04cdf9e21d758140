#include "zksym/so5.hpp"

#include <cmath>

#include "zksym/errors.hpp"

namespace zksym::so5 {

GradingLabel label_e() { return GradingLabel({false, false}); }
GradingLabel label_a() { return GradingLabel({true, false}); }
GradingLabel label_b() { return GradingLabel({false, true}); }
GradingLabel label_c() { return GradingLabel({true, true}); }

Matrix5 basis_matrix(std::size_t index) {
  const auto [r, c] = kUpperEntry.at(index);
  Matrix5 m = Matrix5::Zero();
  m(r, c) = 1.0;
  m(c, r) = -1.0;
  return m;
}

Matrix5 matrix_of(const AlgebraVector& x) {
  if (x.size() != static_cast<Eigen::Index>(kBasisNames.size())) {
    throw DimensionMismatch("so(5) vectors have 10 coordinates");
  }
  Matrix5 m = Matrix5::Zero();
  for (std::size_t i = 0; i < kBasisNames.size(); ++i) {
    m += x(static_cast<Eigen::Index>(i)) * basis_matrix(i);
  }
  return m;
}

AlgebraVector vector_of(const Matrix5& m, double tol) {
  const double skew = (m + m.transpose()).cwiseAbs().maxCoeff();
  if (skew > tol) {
    throw InvalidInput("matrix is not skew-symmetric (residual " + std::to_string(skew) + ")");
  }
  AlgebraVector x(static_cast<Eigen::Index>(kBasisNames.size()));
  for (std::size_t i = 0; i < kBasisNames.size(); ++i) {
    const auto [r, c] = kUpperEntry[i];
    x(static_cast<Eigen::Index>(i)) = m(r, c);
  }
  return x;
}

GradedLieAlgebra build_so5() {
  std::vector<std::string> names(kBasisNames.begin(), kBasisNames.end());
  std::vector<GradingLabel> grading = {label_e(), label_e(), label_a(), label_a(), label_a(),
                                       label_a(), label_b(), label_b(), label_c(), label_c()};
  std::vector<StructureConstant> constants;
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = 0; j < names.size(); ++j) {
      const Matrix5 mi = basis_matrix(i);
      const Matrix5 mj = basis_matrix(j);
      const AlgebraVector comm = vector_of(mi * mj - mj * mi);
      for (std::size_t k = 0; k < names.size(); ++k) {
        if (double v = comm(static_cast<Eigen::Index>(k)); v != 0.0) constants.push_back({i, j, k, v});
      }
    }
  }
  return GradedLieAlgebra(std::move(names), std::move(grading), constants);
}

const GradedLieAlgebra& instance() {
  static const GradedLieAlgebra alg = build_so5();
  return alg;
}

}  // namespace zksym::so5
