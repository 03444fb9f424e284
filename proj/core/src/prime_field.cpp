#include "udesign/prime_field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace udesign {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : p_(static_cast<std::uint32_t>(value)) {
  if (value >= kLimit || !is_prime(value)) {
    throw std::invalid_argument("modulus " + std::to_string(value) +
                                " is not a prime below 65536");
  }
}

Residue Prime::reduce(std::int64_t x) const noexcept {
  const std::int64_t r = x % static_cast<std::int64_t>(p_);
  return static_cast<Residue>(r < 0 ? r + p_ : r);
}

Residue Prime::pow(Residue x, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = x;
  while (e != 0) {
    if (e & 1u) result = (result * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

Residue Prime::inv(Residue x) const {
  if (x % p_ == 0) throw std::domain_error("zero has no inverse in F_p");
  // Extended Euclid; p is prime so gcd(x, p) = 1.
  std::int64_t r0 = p_, r1 = x, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  return reduce(s0);
}

bool all_reduced(std::span<const Residue> values, Prime p) noexcept {
  return std::all_of(values.begin(), values.end(),
                     [p](Residue r) { return r < p.value(); });
}

}  // namespace udesign
