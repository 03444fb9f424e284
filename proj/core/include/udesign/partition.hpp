#pragma once

#include <cstdint>
#include <string>

#include "udesign/prime_field.hpp"

namespace udesign {

/// Two-part partition (a, b) of v = a + b with a >= b >= 1.
class TwoPartPartition {
 public:
  /// Throws std::invalid_argument unless a >= b >= 1.
  TwoPartPartition(std::uint64_t a, std::uint64_t b);

  [[nodiscard]] std::uint64_t a() const noexcept { return a_; }
  [[nodiscard]] std::uint64_t b() const noexcept { return b_; }
  [[nodiscard]] std::uint64_t v() const noexcept { return a_ + b_; }

  friend bool operator==(const TwoPartPartition&, const TwoPartPartition&) = default;

 private:
  std::uint64_t a_;
  std::uint64_t b_;
};

/// b = alpha * p^beta + b_hat with beta = l_p(b), 1 <= alpha < p, b_hat < p^beta.
struct Decomposition {
  std::uint64_t alpha;
  std::uint32_t beta;
  std::uint64_t b_hat;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

Decomposition decompose(std::uint64_t b, Prime p);

enum class PartitionKind { James, Pointed, Generic };

struct PartitionClass {
  PartitionKind kind = PartitionKind::Generic;
  /// Only meaningful for Pointed.
  std::uint64_t b_hat = 0;

  friend bool operator==(const PartitionClass&, const PartitionClass&) = default;
};

/// James when val(a+1) > l_p(b); pointed when b = p^beta + b_hat with
/// b_hat < p^val(a+1) < p^beta (b_hat = 0 included); generic otherwise.
PartitionClass classify(const TwoPartPartition& part, Prime p);

/// James test through the congruence a = -1 mod p^(l_p(b)+1).
bool james_alternative(const TwoPartPartition& part, Prime p);

std::string to_string(const PartitionClass& cls);

}  // namespace udesign
