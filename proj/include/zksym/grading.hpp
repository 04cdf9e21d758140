#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace zksym {

/// Element of the elementary abelian group Z_2^k, stored as k bits.
/// Multiplication is componentwise XOR; every element is an involution.
class GradingLabel {
 public:
  explicit GradingLabel(std::vector<bool> bits);

  static GradingLabel identity(std::size_t rank);

  std::size_t rank() const { return bits_.size(); }
  const std::vector<bool>& bits() const { return bits_; }
  bool is_identity() const;

  /// Throws DimensionMismatch when the ranks differ.
  GradingLabel operator*(const GradingLabel& other) const;

  bool operator==(const GradingLabel&) const = default;
  bool operator<(const GradingLabel& other) const { return bits_ < other.bits_; }

  /// Bit string, most significant first: "01", "11", ...
  std::string to_string() const;

 private:
  std::vector<bool> bits_;
};

}  // namespace zksym
