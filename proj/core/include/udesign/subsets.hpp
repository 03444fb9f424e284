#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "udesign/fplinalg.hpp"

namespace udesign {

/// Largest supported ground-set size; every C(v, k) with v <= kMaxGround fits in 64 bits.
inline constexpr std::uint32_t kMaxGround = 62;

/// Exact C(n, k) for n <= kMaxGround (0 when k > n). Throws std::out_of_range beyond.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// A subset of [v] = {1, ..., v}, stored ascending.
class Subset {
 public:
  /// Throws std::invalid_argument unless elements are strictly increasing and in [1, v].
  Subset(std::vector<std::uint32_t> elements, std::uint32_t v);

  /// Parses the comma-separated form `1,3,4`; an empty string is the empty set.
  static Subset parse(std::string_view text, std::uint32_t v);
  /// {first, ..., last} as a subset of [v].
  static Subset range(std::uint32_t first, std::uint32_t last, std::uint32_t v);

  [[nodiscard]] std::span<const std::uint32_t> elements() const noexcept { return elements_; }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] std::uint32_t ground() const noexcept { return v_; }
  [[nodiscard]] bool contains(std::uint32_t x) const noexcept;
  [[nodiscard]] bool disjoint_from(const Subset& other) const noexcept;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  std::vector<std::uint32_t> elements_;
  std::uint32_t v_;
};

/// Colex rank sum_{i=1..k} C(s_i - 1, i) of an ascending element list.
std::uint64_t colex_rank(std::span<const std::uint32_t> elements);
std::uint64_t colex_rank(const Subset& s);

/// Inverse of colex_rank; throws std::out_of_range unless r < C(v, k).
Subset colex_unrank(std::uint64_t r, std::uint32_t k, std::uint32_t v);

/// Calls fn(elements) for every k-subset of [v] in colex order, so the n-th
/// call sees the subset of rank n.
void for_each_subset(std::uint32_t v, std::uint32_t k,
                     const std::function<void(std::span<const std::uint32_t>)>& fn);

/// All k-subsets of [v] in colex order.
std::vector<Subset> all_subsets(std::uint32_t v, std::uint32_t k);

/// 0/1 containment matrix between i-subsets (rows) and b-subsets (columns)
/// of [v], both in colex order.
struct InclusionMatrix {
  std::uint32_t i;
  std::uint32_t b;
  std::uint32_t v;
  FpMatrix entries;
};

/// Throws std::invalid_argument unless i <= b <= v.
InclusionMatrix inclusion_matrix(std::uint32_t i, std::uint32_t b, std::uint32_t v, Prime p);

/// Rows of A_j^b(v) for each j in `levels`, stacked in the given order.
FpMatrix stacked_inclusion(std::uint32_t b, std::span<const std::uint32_t> levels,
                           std::uint32_t v, Prime p);

enum class ApplyStrategy { Auto, SupersetsPerRow, SubsetsPerColumn };

/// result[Z] = sum of values[Y] over b-sets Y containing the j-set Z, without
/// materialising the inclusion matrix. Auto iterates supersets of each Z when
/// C(v-j, b-j) <= C(b, j) and subsets of each nonzero Y otherwise.
FpVector inclusion_apply(std::span<const Residue> values, std::uint32_t b, std::uint32_t j,
                         std::uint32_t v, Prime p, ApplyStrategy strategy = ApplyStrategy::Auto);

}  // namespace udesign
