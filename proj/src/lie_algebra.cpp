#include "zksym/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "zksym/errors.hpp"

namespace zksym {

GradedLieAlgebra::GradedLieAlgebra(std::vector<std::string> names,
                                   std::vector<GradingLabel> grading,
                                   const std::vector<StructureConstant>& constants)
    : names_(std::move(names)), grading_(std::move(grading)) {
  if (names_.empty()) throw InvalidInput("algebra must have positive dimension");
  if (grading_.size() != names_.size()) {
    throw InvalidInput("grading has " + std::to_string(grading_.size()) +
                       " labels for " + std::to_string(names_.size()) +
                       " basis vectors");
  }
  const auto rank = grading_.front().rank();
  for (const auto& g : grading_) {
    if (g.rank() != rank) throw InvalidInput("grading labels of mixed rank");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw InvalidInput("duplicate basis name " + n);
  }

  const std::size_t n = names_.size();
  c_.assign(n * n * n, 0.0);
  for (const auto& sc : constants) {
    if (sc.i >= n || sc.j >= n || sc.k >= n) {
      throw InvalidInput("structure constant index out of range");
    }
    c_[(sc.i * n + sc.j) * n + sc.k] = sc.value;
  }
}

std::size_t GradedLieAlgebra::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InvalidInput("unknown basis element " + std::string(name));
  return static_cast<std::size_t>(it - names_.begin());
}

AlgebraVector GradedLieAlgebra::basis_vector(std::size_t i) const {
  AlgebraVector e = AlgebraVector::Zero(static_cast<Eigen::Index>(dim()));
  e(static_cast<Eigen::Index>(i)) = 1.0;
  return e;
}

std::vector<std::size_t> GradedLieAlgebra::isotropy_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (grading_[i].is_identity()) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> GradedLieAlgebra::complement_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!grading_[i].is_identity()) out.push_back(i);
  }
  return out;
}

std::set<GradingLabel> GradedLieAlgebra::labels() const {
  return {grading_.begin(), grading_.end()};
}

std::set<GradingLabel> GradedLieAlgebra::complement_labels() const {
  std::set<GradingLabel> out;
  for (const auto& g : grading_) {
    if (!g.is_identity()) out.insert(g);
  }
  return out;
}

std::vector<StructureConstant> GradedLieAlgebra::nonzeros() const {
  std::vector<StructureConstant> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (double c = constant(i, j, k); c != 0.0) out.push_back({i, j, k, c});
  return out;
}

AlgebraVector bracket(const GradedLieAlgebra& alg, const AlgebraVector& x,
                      const AlgebraVector& y) {
  const auto n = static_cast<Eigen::Index>(alg.dim());
  if (x.size() != n || y.size() != n) {
    throw DimensionMismatch("bracket operands must have length " + std::to_string(n));
  }
  AlgebraVector out = AlgebraVector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (x(i) == 0.0) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double xy = x(i) * y(j);
      if (xy == 0.0) continue;
      for (Eigen::Index k = 0; k < n; ++k) {
        out(k) += xy * alg.constant(static_cast<std::size_t>(i),
                                    static_cast<std::size_t>(j),
                                    static_cast<std::size_t>(k));
      }
    }
  }
  return out;
}

AlgebraVector project(const GradedLieAlgebra& alg, const AlgebraVector& x,
                      const std::set<GradingLabel>& labels) {
  if (x.size() != static_cast<Eigen::Index>(alg.dim())) {
    throw DimensionMismatch("projected vector has wrong length");
  }
  AlgebraVector out = x;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (!labels.contains(alg.label(i))) out(static_cast<Eigen::Index>(i)) = 0.0;
  }
  return out;
}

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Antisymmetry: return "antisymmetry";
    case Violation::Kind::Jacobi: return "jacobi";
    case Violation::Kind::GradingClosure: return "grading-closure";
  }
  return "unknown";
}

std::size_t ValidationReport::count(Violation::Kind kind) const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(),
      [kind](const Violation& v) { return v.kind == kind; }));
}

ValidationReport validate(const GradedLieAlgebra& alg, double tol) {
  ValidationReport report;
  const std::size_t n = alg.dim();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double r = std::abs(alg.constant(i, j, k) + alg.constant(j, i, k));
        report.max_antisymmetry = std::max(report.max_antisymmetry, r);
        if (r > tol) report.violations.push_back({Violation::Kind::Antisymmetry, i, j, k, r});
      }
    }
  }

  // [[e_i, e_j], e_l] + [[e_j, e_l], e_i] + [[e_l, e_i], e_j], componentwise.
  std::vector<double> jac(n);
  auto accumulate = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (std::size_t p = 0; p < n; ++p) {
      const double cab = alg.constant(a, b, p);
      if (cab == 0.0) continue;
      for (std::size_t q = 0; q < n; ++q) jac[q] += cab * alg.constant(p, c, q);
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t l = j + 1; l < n; ++l) {
        std::fill(jac.begin(), jac.end(), 0.0);
        accumulate(i, j, l);
        accumulate(j, l, i);
        accumulate(l, i, j);
        double r = 0.0;
        for (double v : jac) r = std::max(r, std::abs(v));
        report.max_jacobi = std::max(report.max_jacobi, r);
        if (r > tol) report.violations.push_back({Violation::Kind::Jacobi, i, j, l, r});
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const GradingLabel expected = alg.label(i) * alg.label(j);
      for (std::size_t k = 0; k < n; ++k) {
        const double c = std::abs(alg.constant(i, j, k));
        if (c > tol && !(alg.label(k) == expected)) {
          report.violations.push_back({Violation::Kind::GradingClosure, i, j, k, c});
        }
      }
    }
  }
  return report;
}

}  // namespace zksym
