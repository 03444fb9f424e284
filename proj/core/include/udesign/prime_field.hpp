#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace udesign {

/// A residue of the prime field F_p, always kept in [0, p).
using Residue = std::uint16_t;

/// A validated prime modulus. Construction performs the primality check once;
/// every other module takes a `Prime` and never re-validates.
class Prime {
 public:
  /// Largest supported modulus (exclusive). Residues are stored in 16 bits.
  static constexpr std::uint64_t kLimit = 1u << 16;

  /// Throws std::invalid_argument if `value` is not a prime below kLimit.
  explicit Prime(std::uint64_t value);

  [[nodiscard]] std::uint32_t value() const noexcept { return p_; }
  operator std::uint32_t() const noexcept { return p_; }  // NOLINT(google-explicit-constructor)

  [[nodiscard]] Residue reduce(std::int64_t x) const noexcept;
  [[nodiscard]] Residue reduce_unsigned(std::uint64_t x) const noexcept {
    return static_cast<Residue>(x % p_);
  }

  [[nodiscard]] Residue add(Residue x, Residue y) const noexcept {
    const std::uint32_t s = std::uint32_t{x} + y;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  [[nodiscard]] Residue sub(Residue x, Residue y) const noexcept {
    return static_cast<Residue>(x >= y ? x - y : x + p_ - y);
  }
  [[nodiscard]] Residue neg(Residue x) const noexcept {
    return static_cast<Residue>(x == 0 ? 0 : p_ - x);
  }
  [[nodiscard]] Residue mul(Residue x, Residue y) const noexcept {
    return static_cast<Residue>((std::uint32_t{x} * y) % p_);
  }
  [[nodiscard]] Residue pow(Residue x, std::uint64_t e) const noexcept;
  /// Multiplicative inverse; throws std::domain_error for 0.
  [[nodiscard]] Residue inv(Residue x) const;

  friend bool operator==(Prime, Prime) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// True when every entry lies in [0, p).
bool all_reduced(std::span<const Residue> values, Prime p) noexcept;

}  // namespace udesign
