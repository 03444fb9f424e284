#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the code paths it is used to check.

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "udesign/design.hpp"

namespace udesign::oracle {

using BigInt = boost::multiprecision::cpp_int;

/// Exact Pascal triangle rows 0..n_max.
inline std::vector<std::vector<BigInt>> pascal(std::size_t n_max) {
  std::vector<std::vector<BigInt>> rows(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    rows[n].assign(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

inline std::uint32_t big_valuation(BigInt n, std::uint32_t p) {
  std::uint32_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline std::uint64_t small_binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// C(a+1,1), ..., C(a+b,b) all divisible by p, by direct evaluation.
inline bool divisibility_loop(std::uint64_t a, std::uint64_t b, std::uint32_t p,
                              const std::vector<std::vector<BigInt>>& tri) {
  for (std::uint64_t j = 1; j <= b; ++j) {
    if (tri[a + j][j] % p != 0) return false;
  }
  return true;
}

/// k-subsets of [v] as bitmasks (bit x-1 for element x) in increasing numeric
/// order, which is exactly colex order.
inline std::vector<std::uint32_t> masks(std::uint32_t v, std::uint32_t k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << v); ++m) {
    if (static_cast<std::uint32_t>(std::popcount(m)) == k) out.push_back(m);
  }
  return out;
}

/// Brute-force induced function: for each j-set Z, sum u over blocks Y with Z subset of Y.
inline std::vector<std::uint64_t> hat(std::uint32_t v, std::uint32_t b, std::uint32_t p,
                                      const std::vector<std::uint32_t>& values,
                                      std::uint32_t j) {
  const auto ys = masks(v, b);
  const auto zs = masks(v, j);
  std::vector<std::uint64_t> out;
  for (std::uint32_t z : zs) {
    std::uint64_t s = 0;
    for (std::size_t r = 0; r < ys.size(); ++r) {
      if ((ys[r] & z) == z) s += values[r];
    }
    out.push_back(s % p);
  }
  return out;
}

/// Brute-force spectrum with nullopt on non-constant levels.
inline std::vector<std::optional<std::uint64_t>> brute_spectrum(const Design& u) {
  std::vector<std::uint32_t> values(u.values().begin(), u.values().end());
  std::vector<std::optional<std::uint64_t>> out;
  for (std::uint32_t j = 0; j < u.block(); ++j) {
    const auto h = hat(u.ground(), u.block(), u.prime().value(), values, j);
    bool constant = true;
    for (auto x : h) constant = constant && x == h.front();
    out.push_back(constant ? std::optional<std::uint64_t>(h.front()) : std::nullopt);
  }
  return out;
}

inline bool same_spectrum(const Design& u, const Spectrum& s) {
  const auto brute = brute_spectrum(u);
  if (brute.size() != s.levels()) return false;
  for (std::size_t j = 0; j < brute.size(); ++j) {
    if (brute[j].has_value() != s.coeffs[j].has_value()) return false;
    if (brute[j] && *brute[j] != *s.coeffs[j]) return false;
  }
  return true;
}

inline Design random_design(std::uint32_t v, std::uint32_t b, Prime p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, p.value() - 1);
  FpVector values(small_binom(v, b));
  for (auto& x : values) x = static_cast<Residue>(dist(rng));
  return Design(v, b, p, std::move(values));
}

}  // namespace udesign::oracle
