#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "udesign/design.hpp"
#include "udesign/partition.hpp"

namespace udesign {

/// Levels on which a universal design for (a, b) can be non-null, ordered by
/// i >=_X j iff i > j and C(b-j, i-j) != 0 mod p.
struct SupportPoset {
  /// Ascending subset of {0, ..., b-1}.
  std::vector<std::uint32_t> elements;
  /// Pairs (i, j) with i >=_X j.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> relation;
  /// Connected components of the comparability graph, each ascending,
  /// ordered by least element.
  std::vector<std::vector<std::uint32_t>> components;

  [[nodiscard]] bool contains(std::uint32_t j) const noexcept;
  [[nodiscard]] bool comparable(std::uint32_t i, std::uint32_t j) const noexcept;
};

/// j belongs to X iff (b-j)_m + a_m < p for every m < l_p(b).
SupportPoset support_poset(const TwoPartPartition& part, Prime p);

/// Two components for pointed partitions, one otherwise.
std::size_t predicted_component_count(const TwoPartPartition& part, Prime p);

/// Basis (in reduced row-echelon form) of the space of spectra of universal
/// designs with block size b on [v]. Throws std::invalid_argument unless
/// v - b >= b >= 1.
std::vector<FpVector> coefficient_space(std::uint32_t v, std::uint32_t b, Prime p);

struct ClassifyReport {
  TwoPartPartition partition;
  Prime p;
  PartitionClass cls;
  Decomposition decomposition;
  SupportPoset poset;
  /// Dimension of the space of spectra: 2 when pointed, else 1.
  std::size_t predicted_dimension;
  /// James partitions only.
  std::optional<Spectrum> canonical_spectrum;
};

ClassifyReport classify_report(const TwoPartPartition& part, Prime p);

}  // namespace udesign
