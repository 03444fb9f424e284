#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "udesign/design.hpp"
#include "udesign/partition.hpp"

namespace udesign {

/// Every block gets the value k; spectrum mu_j = k * C(v-j, b-j).
Design constant_design(std::uint32_t v, std::uint32_t b, Prime p, Residue k);

/// Null design built from disjoint b-sets X, Y and a bijection f : X -> Y,
/// where f_image[i] is the image of the i-th smallest element of X.
/// u(Z) = (-1)^|Z n Y| when Z lies in X u Y and never contains both x and
/// f(x); u(Z) = 0 otherwise. Throws std::invalid_argument on size, overlap or
/// non-bijective f.
Design james_null(std::uint32_t v, const Subset& x, const Subset& y,
                  std::span<const std::uint32_t> f_image, Prime p);

/// Order-preserving f (the i-th element of X goes to the i-th element of Y).
Design james_null(std::uint32_t v, const Subset& x, const Subset& y, Prime p);

/// For b = p^beta <= a with val(a+1) < beta: the indicator of the b-subsets of
/// [a + b] avoiding [a - b + 1]. Non-null only at level 0.
Design prime_power_design(std::uint64_t a, std::uint32_t beta, Prime p);

/// Places `base` (a function on [v - |Y|]) on [v] \ Y via the order-preserving
/// bijection and returns Z -> base(Z \ Y) for Z containing Y, 0 otherwise.
Design lift_u_Y(const Design& base, const Subset& y, std::uint32_t v);

/// Sum of lift_u_Y(prime_power_design(a, beta, p), Y) over the b_hat-subsets
/// Y of X, where |X| = p^beta + b_hat - 1 and v = a + p^beta + b_hat.
Design ubar_X(const Subset& x, std::uint64_t a, std::uint32_t beta, std::uint64_t b_hat, Prime p);

/// Universal design for a pointed (a, b) with b_hat >= 1 that is non-null
/// only on level b_hat. Throws std::invalid_argument otherwise.
Design pointed_design(std::uint64_t a, std::uint64_t b, Prime p);

/// Some design with exactly the given (fully defined) spectrum, or nothing
/// when no universal design has it.
std::optional<Design> solve_design(std::uint32_t v, std::uint32_t b, Prime p,
                                   const Spectrum& target);

/// Some design whose level-t induced function is the constant mu, with no
/// constraint on other levels.
std::optional<Design> solve_level_design(std::uint32_t v, std::uint32_t b, std::uint32_t t,
                                         Residue mu, Prime p);

/// Mod-p reduction of the integral spectrum C(a+b-s, a) / p^d, where d is the
/// least valuation among s < b. Throws unless (a, b) is James.
Spectrum james_canonical_spectrum(std::uint64_t a, std::uint64_t b, Prime p);

/// Wilson's criterion for a non-null t-design of block size b on v points:
/// C(b-i, t-i) = 0 implies C(v-i, t-i) = 0 mod p for all i <= t.
/// Throws unless t <= b <= v - t.
bool wilson_exists(std::uint64_t v, std::uint64_t b, std::uint64_t t, Prime p);

/// Non-null (b - p^l)-designs for (a, b) exist iff a_l != p-1 or b < p^(l+1).
/// Throws unless l <= l_p(b).
bool cor_nonnull_prime_power_level(std::uint64_t a, std::uint64_t b, std::uint32_t l, Prime p);

}  // namespace udesign
