#include "zksym/grading.hpp"

#include <algorithm>

#include "zksym/errors.hpp"

namespace zksym {

GradingLabel::GradingLabel(std::vector<bool> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw InvalidInput("grading label needs at least one bit");
}

GradingLabel GradingLabel::identity(std::size_t rank) {
  return GradingLabel(std::vector<bool>(rank, false));
}

bool GradingLabel::is_identity() const {
  return std::none_of(bits_.begin(), bits_.end(), [](bool b) { return b; });
}

GradingLabel GradingLabel::operator*(const GradingLabel& other) const {
  if (rank() != other.rank()) {
    throw DimensionMismatch("grading labels of different rank");
  }
  std::vector<bool> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = bits_[i] != other.bits_[i];
  return GradingLabel(std::move(out));
}

std::string GradingLabel::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace zksym
