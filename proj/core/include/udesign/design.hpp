#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "udesign/fplinalg.hpp"
#include "udesign/subsets.hpp"

namespace udesign {

/// A function from the b-subsets of [v] to F_p, stored as C(v, b) residues
/// indexed by colex rank.
class Design {
 public:
  /// The zero function. Throws std::invalid_argument unless 1 <= b <= v <= kMaxGround.
  Design(std::uint32_t v, std::uint32_t b, Prime p);
  /// Throws if the length is not C(v, b) or a value is not reduced.
  Design(std::uint32_t v, std::uint32_t b, Prime p, FpVector values);

  [[nodiscard]] std::uint32_t ground() const noexcept { return v_; }
  [[nodiscard]] std::uint32_t block() const noexcept { return b_; }
  [[nodiscard]] Prime prime() const noexcept { return p_; }
  [[nodiscard]] std::span<const Residue> values() const noexcept { return values_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

  [[nodiscard]] Residue operator[](std::uint64_t rank) const noexcept { return values_[rank]; }
  [[nodiscard]] Residue value(const Subset& block) const;
  void set(const Subset& block, std::int64_t value);
  void set_rank(std::uint64_t rank, std::int64_t value) { values_.at(rank) = p_.reduce(value); }

  [[nodiscard]] bool is_zero() const noexcept;

  friend bool operator==(const Design&, const Design&) = default;

 private:
  std::uint32_t v_;
  std::uint32_t b_;
  Prime p_;
  FpVector values_;
};

/// Per-level coefficients mu_0, ..., mu_{b-1}; an entry is empty when the
/// induced function on that level is not constant.
struct Spectrum {
  std::vector<std::optional<Residue>> coeffs;

  static Spectrum from_values(std::span<const Residue> mus);

  [[nodiscard]] std::size_t levels() const noexcept { return coeffs.size(); }
  [[nodiscard]] bool fully_defined() const noexcept;
  /// All coefficients; throws std::logic_error if some level is non-constant.
  [[nodiscard]] FpVector values() const;
  [[nodiscard]] bool is_null() const noexcept;
  /// `(1,0,*)`, with `*` marking a non-constant level.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Induced function on level j: sum of u(Y) over blocks Y containing each
/// j-subset. Throws std::invalid_argument for j > b.
FpVector hat(const Design& u, std::uint32_t j);

/// mu_j when hat(u, j) is constant. Throws std::invalid_argument unless j < b.
std::optional<Residue> level_coefficient(const Design& u, std::uint32_t j);

Spectrum spectrum(const Design& u);

/// Every level j < b has a constant induced function.
bool is_universal(const Design& u);

/// Checks only the levels b - p^l, 0 <= l <= l_p(b); agrees with is_universal.
bool is_universal_fast(const Design& u);

/// mu_j = C(v-j, t-j) / C(b-j, t-j) * mu_t over F_p, or empty when the
/// denominator vanishes mod p. Throws unless j <= t <= b <= v.
std::optional<Residue> propagate_coefficient(std::uint64_t v, std::uint64_t b, std::uint64_t t,
                                             std::uint64_t j, Residue mu_t, Prime p);

/// Nonzero k with s1 = k * s2, if any. Two zero spectra are similar with k = 1.
/// Throws std::invalid_argument if a level is undefined or lengths differ.
std::optional<Residue> similar(const Spectrum& s1, const Spectrum& s2, Prime p);

Design add(const Design& u, const Design& w);
Design scale(const Design& u, Residue k);
/// The function that is 1 on `block` and 0 elsewhere.
Design indicator(std::uint32_t v, Prime p, const Subset& block);

/// Transports u along the order-preserving injection [v] -> [new_v] given by
/// `image` (image[x-1] is the image of x): the result is u(preimage of S) when
/// S lies inside the image and 0 elsewhere.
Design relabel(const Design& u, std::span<const std::uint32_t> image, std::uint32_t new_v);

/// Integer coefficient recurrence mu_{j+1} (v - j) = (b - j) mu_j for all
/// consecutive levels, which characterises spectra of universal integral designs.
bool satisfies_integral_recurrence(std::uint64_t v, std::uint64_t b,
                                   std::span<const std::int64_t> mus);

}  // namespace udesign
