#include "udesign/padic.hpp"

#include <limits>
#include <stdexcept>

namespace udesign {

std::uint64_t DigitVector::value() const noexcept {
  std::uint64_t n = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) n = n * p.value() + *it;
  return n;
}

DigitVector digits(std::uint64_t n, Prime p) {
  DigitVector out{{}, p};
  while (n != 0) {
    out.digits.push_back(static_cast<std::uint32_t>(n % p.value()));
    n /= p.value();
  }
  return out;
}

std::uint32_t valuation(std::uint64_t n, Prime p) {
  if (n == 0) throw std::invalid_argument("valuation of 0 is undefined");
  std::uint32_t v = 0;
  while (n % p.value() == 0) {
    n /= p.value();
    ++v;
  }
  return v;
}

std::uint32_t p_length(std::uint64_t n, Prime p) {
  if (n == 0) throw std::invalid_argument("p-adic length of 0 is undefined");
  std::uint32_t l = 0;
  while (n >= p.value()) {
    n /= p.value();
    ++l;
  }
  return l;
}

std::uint64_t prime_power(Prime p, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p.value()) {
      throw std::overflow_error("prime power exceeds 64 bits");
    }
    r *= p.value();
  }
  return r;
}

namespace {

// C(n, k) mod p for single digits 0 <= k <= n < p.
Residue small_binom(std::uint32_t n, std::uint32_t k, Prime p) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Residue num = 1 % p.value(), den = 1 % p.value();
  for (std::uint32_t i = 0; i < k; ++i) {
    num = p.mul(num, static_cast<Residue>(n - i));
    den = p.mul(den, static_cast<Residue>(i + 1));
  }
  return p.mul(num, p.inv(den));
}

// (n! with every factor of p removed) mod p.
Residue factorial_unit(std::uint64_t n, Prime p) {
  Residue r = 1 % p.value();
  for (std::uint64_t i = 2; i <= n; ++i) {
    std::uint64_t f = i;
    while (f % p.value() == 0) f /= p.value();
    r = p.mul(r, p.reduce_unsigned(f));
  }
  return r;
}

}  // namespace

Residue binom_mod(std::uint64_t n, std::uint64_t k, Prime p) {
  if (k > n) return 0;
  Residue r = 1 % p.value();
  while (k != 0 && r != 0) {
    r = p.mul(r, small_binom(static_cast<std::uint32_t>(n % p.value()),
                             static_cast<std::uint32_t>(k % p.value()), p));
    n /= p.value();
    k /= p.value();
  }
  return r;
}

std::uint32_t binom_valuation(std::uint64_t n, std::uint64_t k, Prime p) {
  if (k > n) throw std::invalid_argument("binom_valuation requires k <= n");
  std::uint64_t x = k, y = n - k;
  std::uint32_t carry = 0, carries = 0;
  while (x != 0 || y != 0 || carry != 0) {
    const std::uint64_t s = x % p.value() + y % p.value() + carry;
    carry = s >= p.value() ? 1u : 0u;
    carries += carry;
    x /= p.value();
    y /= p.value();
  }
  return carries;
}

Residue binom_unit_part(std::uint64_t n, std::uint64_t k, Prime p) {
  if (k > n) throw std::invalid_argument("binom_unit_part requires k <= n");
  const Residue den = p.mul(factorial_unit(k, p), factorial_unit(n - k, p));
  return p.mul(factorial_unit(n, p), p.inv(den));
}

bool divisibility_run(std::uint64_t a, std::uint64_t b, Prime p) {
  if (b == 0) throw std::invalid_argument("divisibility_run requires b >= 1");
  // C(a+j, j) = 0 mod p for all j <= b exactly when p^(l_p(b)+1) divides a+1.
  return valuation(a + 1, p) > p_length(b, p);
}

}  // namespace udesign
