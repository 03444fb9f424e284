#pragma once

#include <cstdint>
#include <vector>

#include "udesign/prime_field.hpp"

namespace udesign {

/// Base-p expansion of a nonnegative integer, least significant digit first.
/// The last digit is nonzero; zero has no digits.
struct DigitVector {
  std::vector<std::uint32_t> digits;
  Prime p;

  /// Digit at position i, zero past the end.
  [[nodiscard]] std::uint32_t at(std::size_t i) const noexcept {
    return i < digits.size() ? digits[i] : 0u;
  }
  [[nodiscard]] std::uint64_t value() const noexcept;
};

DigitVector digits(std::uint64_t n, Prime p);

/// Exponent of the largest power of p dividing n. Throws for n = 0.
std::uint32_t valuation(std::uint64_t n, Prime p);

/// Index of the leading base-p digit, so p^l <= n < p^(l+1). Throws for n = 0.
std::uint32_t p_length(std::uint64_t n, Prime p);

/// p^e as an integer; throws std::overflow_error if it does not fit.
std::uint64_t prime_power(Prime p, std::uint32_t e);

/// C(n, k) mod p by Lucas' theorem (digit-wise). C(n, k) = 0 for k > n.
Residue binom_mod(std::uint64_t n, std::uint64_t k, Prime p);

/// p-adic valuation of C(n, k), counted as the carries in k + (n - k) base p.
/// Throws std::invalid_argument for k > n.
std::uint32_t binom_valuation(std::uint64_t n, std::uint64_t k, Prime p);

/// C(n, k) / p^val(C(n, k)) reduced mod p; never zero. Throws for k > n.
Residue binom_unit_part(std::uint64_t n, std::uint64_t k, Prime p);

/// Whether C(a+1, 1), ..., C(a+b, b) are all divisible by p, decided by the
/// congruence a = -1 mod p^(l_p(b)+1), i.e. val(a+1) > l_p(b). Throws for b = 0.
bool divisibility_run(std::uint64_t a, std::uint64_t b, Prime p);

}  // namespace udesign
