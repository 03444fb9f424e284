#include "udesign/construct.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "udesign/padic.hpp"

namespace udesign {

namespace {

std::uint32_t checked_ground(std::uint64_t v) {
  if (v > kMaxGround) throw std::out_of_range("ground set too large: " + std::to_string(v));
  return static_cast<std::uint32_t>(v);
}

// Levels b - p^l for 0 <= l <= l_p(b); constancy there forces universality.
std::vector<std::uint32_t> prime_power_levels(std::uint32_t b, Prime p) {
  std::vector<std::uint32_t> levels;
  const std::uint32_t top = p_length(b, p);
  for (std::uint32_t l = 0; l <= top; ++l) {
    levels.push_back(static_cast<std::uint32_t>(b - prime_power(p, l)));
  }
  return levels;
}

}  // namespace

Design constant_design(std::uint32_t v, std::uint32_t b, Prime p, Residue k) {
  return Design(v, b, p, FpVector(binomial(v, b), p.reduce_unsigned(k)));
}

Design james_null(std::uint32_t v, const Subset& x, const Subset& y,
                  std::span<const std::uint32_t> f_image, Prime p) {
  const std::size_t b = x.size();
  if (b == 0 || y.size() != b) throw std::invalid_argument("james_null needs |X| = |Y| >= 1");
  if (x.ground() > v || y.ground() > v) throw std::invalid_argument("X, Y must lie in [v]");
  if (!x.disjoint_from(y)) throw std::invalid_argument("X and Y must be disjoint");
  if (f_image.size() != b) throw std::invalid_argument("f must map every element of X");
  std::vector<std::uint32_t> sorted(f_image.begin(), f_image.end());
  std::sort(sorted.begin(), sorted.end());
  if (!std::equal(sorted.begin(), sorted.end(), y.elements().begin())) {
    throw std::invalid_argument("f must be a bijection X -> Y");
  }

  // A block Z inside X u Y avoiding every pair {x, f(x)} picks exactly one
  // element from each of the b pairs.
  Design u(v, static_cast<std::uint32_t>(b), p);
  const auto xs = x.elements();
  std::vector<std::uint32_t> block(b);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b); ++mask) {
    std::uint32_t from_y = 0;
    for (std::size_t i = 0; i < b; ++i) {
      const bool take_y = (mask >> i) & 1u;
      block[i] = take_y ? f_image[i] : xs[i];
      from_y += take_y ? 1u : 0u;
    }
    std::sort(block.begin(), block.end());
    u.set_rank(colex_rank(block), from_y % 2 == 0 ? 1 : -1);
  }
  return u;
}

Design james_null(std::uint32_t v, const Subset& x, const Subset& y, Prime p) {
  return james_null(v, x, y, y.elements(), p);
}

Design prime_power_design(std::uint64_t a, std::uint32_t beta, Prime p) {
  const std::uint64_t b = prime_power(p, beta);
  if (b > a) throw std::invalid_argument("prime_power_design requires p^beta <= a");
  if (valuation(a + 1, p) >= beta) {
    throw std::invalid_argument("prime_power_design requires val(a+1) < beta");
  }
  const std::uint32_t v = checked_ground(a + b);
  const auto avoid = static_cast<std::uint32_t>(a - b + 1);
  Design u(v, static_cast<std::uint32_t>(b), p);
  std::uint64_t rank = 0;
  for_each_subset(v, static_cast<std::uint32_t>(b), [&](std::span<const std::uint32_t> s) {
    if (s.front() > avoid) u.set_rank(rank, 1);
    ++rank;
  });
  return u;
}

Design lift_u_Y(const Design& base, const Subset& y, std::uint32_t v) {
  if (y.ground() > v) throw std::invalid_argument("Y must lie in [v]");
  if (base.ground() + y.size() != v) {
    throw std::invalid_argument("base must live on a ground set of size v - |Y|");
  }
  std::vector<std::uint32_t> image;
  for (std::uint32_t e = 1; e <= v; ++e) {
    if (!y.contains(e)) image.push_back(e);
  }
  const std::uint32_t block = base.block() + static_cast<std::uint32_t>(y.size());
  Design out(v, block, base.prime());
  std::vector<std::uint32_t> merged(block);
  std::uint64_t rank = 0;
  const auto values = base.values();
  for_each_subset(base.ground(), base.block(), [&](std::span<const std::uint32_t> s) {
    const Residue value = values[rank++];
    if (value == 0) return;
    std::vector<std::uint32_t> mapped(s.size());
    for (std::size_t t = 0; t < s.size(); ++t) mapped[t] = image[s[t] - 1];
    std::merge(mapped.begin(), mapped.end(), y.elements().begin(), y.elements().end(),
               merged.begin());
    out.set_rank(colex_rank(merged), value);
  });
  return out;
}

Design ubar_X(const Subset& x, std::uint64_t a, std::uint32_t beta, std::uint64_t b_hat,
              Prime p) {
  const std::uint64_t top = prime_power(p, beta);
  if (x.size() + 1 != top + b_hat) throw std::invalid_argument("ubar_X needs |X| = p^beta + b_hat - 1");
  const std::uint32_t v = checked_ground(a + top + b_hat);
  if (x.ground() > v) throw std::invalid_argument("X must lie in [v]");
  const Design base = prime_power_design(a, beta, p);

  Design sum(v, static_cast<std::uint32_t>(top + b_hat), p);
  const auto xs = x.elements();
  for_each_subset(static_cast<std::uint32_t>(x.size()), static_cast<std::uint32_t>(b_hat),
                  [&](std::span<const std::uint32_t> positions) {
                    std::vector<std::uint32_t> ys;
                    for (std::uint32_t pos : positions) ys.push_back(xs[pos - 1]);
                    sum = add(sum, lift_u_Y(base, Subset(std::move(ys), v), v));
                  });
  return sum;
}

Design pointed_design(std::uint64_t a, std::uint64_t b, Prime p) {
  const PartitionClass cls = classify(TwoPartPartition(a, b), p);
  if (cls.kind != PartitionKind::Pointed) {
    throw std::invalid_argument("pointed_design requires a pointed partition");
  }
  if (cls.b_hat == 0) {
    throw std::invalid_argument("b_hat = 0: use prime_power_design instead");
  }
  const Decomposition d = decompose(b, p);
  const std::uint32_t v = checked_ground(a + b);
  const auto inner_block = static_cast<std::uint32_t>(b - 1);
  const auto level = static_cast<std::uint32_t>(d.b_hat);

  const std::optional<Design> weights = solve_level_design(v, inner_block, level, 1, p);
  if (!weights) throw std::logic_error("no non-null b_hat-design of block size b-1");

  Design out(v, static_cast<std::uint32_t>(b), p);
  std::uint64_t rank = 0;
  for_each_subset(v, inner_block, [&](std::span<const std::uint32_t> s) {
    const Residue w = (*weights)[rank++];
    if (w == 0) return;
    const Subset x(std::vector<std::uint32_t>(s.begin(), s.end()), v);
    out = add(out, scale(ubar_X(x, a, d.beta, d.b_hat, p), w));
  });
  return out;
}

std::optional<Design> solve_design(std::uint32_t v, std::uint32_t b, Prime p,
                                   const Spectrum& target) {
  if (target.levels() != b) throw std::invalid_argument("target spectrum needs b levels");
  const FpVector mus = target.values();
  const std::vector<std::uint32_t> levels = prime_power_levels(b, p);
  const FpMatrix system = stacked_inclusion(b, levels, v, p);

  FpVector rhs;
  rhs.reserve(system.rows());
  for (std::uint32_t j : levels) rhs.insert(rhs.end(), binomial(v, j), mus[j]);
  AffineSolutionSpace sol = solve(system, rhs);
  if (!sol.particular) return std::nullopt;

  // The solution is universal; its remaining coefficients are forced by the
  // prime-power levels, so a mismatch means the target is unattainable.
  Design u(v, b, p, std::move(*sol.particular));
  if (spectrum(u) != target) return std::nullopt;
  return u;
}

std::optional<Design> solve_level_design(std::uint32_t v, std::uint32_t b, std::uint32_t t,
                                         Residue mu, Prime p) {
  const InclusionMatrix a = inclusion_matrix(t, b, v, p);
  const FpVector rhs(a.entries.rows(), p.reduce_unsigned(mu));
  AffineSolutionSpace sol = solve(a.entries, rhs);
  if (!sol.particular) return std::nullopt;
  return Design(v, b, p, std::move(*sol.particular));
}

Spectrum james_canonical_spectrum(std::uint64_t a, std::uint64_t b, Prime p) {
  if (classify(TwoPartPartition(a, b), p).kind != PartitionKind::James) {
    throw std::invalid_argument("james_canonical_spectrum requires a James partition");
  }
  std::vector<std::uint32_t> vals;
  for (std::uint64_t s = 0; s < b; ++s) vals.push_back(binom_valuation(a + b - s, a, p));
  const std::uint32_t d = *std::min_element(vals.begin(), vals.end());
  Spectrum out;
  for (std::uint64_t s = 0; s < b; ++s) {
    out.coeffs.emplace_back(vals[s] == d ? binom_unit_part(a + b - s, a, p) : Residue{0});
  }
  return out;
}

bool wilson_exists(std::uint64_t v, std::uint64_t b, std::uint64_t t, Prime p) {
  if (t > b || b + t > v) throw std::invalid_argument("wilson_exists requires t <= b <= v - t");
  for (std::uint64_t i = 0; i <= t; ++i) {
    if (binom_mod(b - i, t - i, p) == 0 && binom_mod(v - i, t - i, p) != 0) return false;
  }
  return true;
}

bool cor_nonnull_prime_power_level(std::uint64_t a, std::uint64_t b, std::uint32_t l, Prime p) {
  if (b == 0 || l > p_length(b, p)) {
    throw std::invalid_argument("cor_nonnull_prime_power_level requires l <= l_p(b)");
  }
  return digits(a, p).at(l) != p.value() - 1 || b < prime_power(p, l + 1);
}

}  // namespace udesign
