#include "udesign/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "udesign/construct.hpp"
#include "udesign/padic.hpp"

namespace udesign {

bool SupportPoset::contains(std::uint32_t j) const noexcept {
  return std::binary_search(elements.begin(), elements.end(), j);
}

bool SupportPoset::comparable(std::uint32_t i, std::uint32_t j) const noexcept {
  return std::any_of(relation.begin(), relation.end(), [&](const auto& r) {
    return (r.first == i && r.second == j) || (r.first == j && r.second == i);
  });
}

SupportPoset support_poset(const TwoPartPartition& part, Prime p) {
  const std::uint64_t b = part.b();
  const std::uint32_t top = p_length(b, p);
  const DigitVector a_digits = digits(part.a(), p);

  SupportPoset out;
  for (std::uint64_t j = 0; j < b; ++j) {
    const DigitVector gap = digits(b - j, p);
    bool member = true;
    for (std::uint32_t m = 0; m < top && member; ++m) {
      member = gap.at(m) + a_digits.at(m) < p.value();
    }
    if (member) out.elements.push_back(static_cast<std::uint32_t>(j));
  }

  // Union-find over positions in `elements`.
  std::vector<std::size_t> parent(out.elements.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t lo = 0; lo < out.elements.size(); ++lo) {
    for (std::size_t hi = lo + 1; hi < out.elements.size(); ++hi) {
      const std::uint32_t i = out.elements[hi], j = out.elements[lo];
      if (binom_mod(b - j, i - j, p) != 0) {
        out.relation.emplace_back(i, j);
        parent[find(hi)] = find(lo);
      }
    }
  }
  std::vector<std::ptrdiff_t> component_of_root(out.elements.size(), -1);
  for (std::size_t k = 0; k < out.elements.size(); ++k) {
    const std::size_t root = find(k);
    if (component_of_root[root] < 0) {
      component_of_root[root] = static_cast<std::ptrdiff_t>(out.components.size());
      out.components.emplace_back();
    }
    out.components[static_cast<std::size_t>(component_of_root[root])].push_back(out.elements[k]);
  }
  return out;
}

std::size_t predicted_component_count(const TwoPartPartition& part, Prime p) {
  return classify(part, p).kind == PartitionKind::Pointed ? 2 : 1;
}

std::vector<FpVector> coefficient_space(std::uint32_t v, std::uint32_t b, Prime p) {
  if (b < 1 || 2 * b > v) throw std::invalid_argument("coefficient_space requires v - b >= b >= 1");

  // Unknowns: the C(v, b) design values followed by mu_0, ..., mu_{b-1}.
  // Row for (j, Z): hat(u)(Z) - mu_j = 0.
  std::vector<std::uint32_t> levels(b);
  std::iota(levels.begin(), levels.end(), 0u);
  const FpMatrix inclusion = stacked_inclusion(b, levels, v, p);
  const std::size_t n = inclusion.cols();
  FpMatrix system(inclusion.rows(), n + b, p);
  std::size_t row = 0;
  for (std::uint32_t j = 0; j < b; ++j) {
    for (std::uint64_t z = 0; z < binomial(v, j); ++z, ++row) {
      std::copy_n(inclusion.row(row).begin(), n, system.row(row).begin());
      system.set(row, n + j, -1);
    }
  }

  // Project the nullspace onto the mu coordinates, reading each basis vector
  // straight from the reduced form.
  const RowEchelon e = rref(std::move(system));
  std::vector<std::ptrdiff_t> pivot_row(n + b, -1);
  for (std::size_t i = 0; i < e.rank; ++i) pivot_row[e.pivots[i]] = static_cast<std::ptrdiff_t>(i);
  std::vector<FpVector> projected;
  for (std::size_t f = 0; f < n + b; ++f) {
    if (pivot_row[f] >= 0) continue;
    FpVector mu(b, 0);
    for (std::uint32_t j = 0; j < b; ++j) {
      const std::size_t col = n + j;
      if (col == f) {
        mu[j] = 1;
      } else if (pivot_row[col] >= 0) {
        mu[j] = p.neg(e.reduced.at(static_cast<std::size_t>(pivot_row[col]), f));
      }
    }
    projected.push_back(std::move(mu));
  }

  const RowEchelon basis = rref(matrix_from_vectors(projected, b, p));
  std::vector<FpVector> out;
  for (std::size_t i = 0; i < basis.rank; ++i) {
    const auto r = basis.reduced.row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

ClassifyReport classify_report(const TwoPartPartition& part, Prime p) {
  const PartitionClass cls = classify(part, p);
  std::optional<Spectrum> canonical;
  if (cls.kind == PartitionKind::James) canonical = james_canonical_spectrum(part.a(), part.b(), p);
  return {part,
          p,
          cls,
          decompose(part.b(), p),
          support_poset(part, p),
          cls.kind == PartitionKind::Pointed ? std::size_t{2} : std::size_t{1},
          std::move(canonical)};
}

}  // namespace udesign
