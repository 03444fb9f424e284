#include "udesign/design.hpp"

#include <algorithm>
#include <stdexcept>

#include "udesign/padic.hpp"

namespace udesign {

namespace {

void check_shape(std::uint32_t v, std::uint32_t b) {
  if (b < 1 || b > v) throw std::invalid_argument("design requires 1 <= b <= v");
  if (v > kMaxGround) throw std::out_of_range("design ground set too large");
}

void check_same_shape(const Design& u, const Design& w) {
  if (u.ground() != w.ground() || u.block() != w.block() || u.prime() != w.prime()) {
    throw std::invalid_argument("designs differ in (v, b, p)");
  }
}

}  // namespace

Design::Design(std::uint32_t v, std::uint32_t b, Prime p) : v_(v), b_(b), p_(p) {
  check_shape(v, b);
  values_.assign(binomial(v, b), 0);
}

Design::Design(std::uint32_t v, std::uint32_t b, Prime p, FpVector values)
    : v_(v), b_(b), p_(p), values_(std::move(values)) {
  check_shape(v, b);
  if (values_.size() != binomial(v, b)) {
    throw std::invalid_argument("design needs exactly C(v, b) values");
  }
  if (!all_reduced(values_, p)) throw std::invalid_argument("design value not reduced mod p");
}

Residue Design::value(const Subset& block) const {
  if (block.size() != b_ || block.ground() > v_) throw std::invalid_argument("not a block");
  return values_[colex_rank(block)];
}

void Design::set(const Subset& block, std::int64_t value) {
  if (block.size() != b_ || block.ground() > v_) throw std::invalid_argument("not a block");
  values_[colex_rank(block)] = p_.reduce(value);
}

bool Design::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](Residue r) { return r == 0; });
}

Spectrum Spectrum::from_values(std::span<const Residue> mus) {
  Spectrum s;
  s.coeffs.assign(mus.begin(), mus.end());
  return s;
}

bool Spectrum::fully_defined() const noexcept {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& c) { return c.has_value(); });
}

FpVector Spectrum::values() const {
  FpVector out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (!c) throw std::logic_error("spectrum has a non-constant level");
    out.push_back(*c);
  }
  return out;
}

bool Spectrum::is_null() const noexcept {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const auto& c) { return c.has_value() && *c == 0; });
}

std::string Spectrum::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (j > 0) out += ',';
    out += coeffs[j] ? std::to_string(*coeffs[j]) : "*";
  }
  return out + ")";
}

FpVector hat(const Design& u, std::uint32_t j) {
  if (j > u.block()) throw std::invalid_argument("hat level exceeds block size");
  return inclusion_apply(u.values(), u.block(), j, u.ground(), u.prime());
}

std::optional<Residue> level_coefficient(const Design& u, std::uint32_t j) {
  if (j >= u.block()) throw std::invalid_argument("coefficient level must be below b");
  const FpVector induced = hat(u, j);
  const Residue first = induced.front();
  if (std::any_of(induced.begin(), induced.end(), [first](Residue r) { return r != first; })) {
    return std::nullopt;
  }
  return first;
}

Spectrum spectrum(const Design& u) {
  Spectrum s;
  for (std::uint32_t j = 0; j < u.block(); ++j) s.coeffs.push_back(level_coefficient(u, j));
  return s;
}

bool is_universal(const Design& u) {
  for (std::uint32_t j = 0; j < u.block(); ++j) {
    if (!level_coefficient(u, j)) return false;
  }
  return true;
}

bool is_universal_fast(const Design& u) {
  const Prime p = u.prime();
  const std::uint32_t top = p_length(u.block(), p);
  for (std::uint32_t l = 0; l <= top; ++l) {
    const auto level = static_cast<std::uint32_t>(u.block() - prime_power(p, l));
    if (!level_coefficient(u, level)) return false;
  }
  return true;
}

std::optional<Residue> propagate_coefficient(std::uint64_t v, std::uint64_t b, std::uint64_t t,
                                             std::uint64_t j, Residue mu_t, Prime p) {
  if (j > t || t > b || b > v) {
    throw std::invalid_argument("propagate_coefficient requires j <= t <= b <= v");
  }
  const Residue den = binom_mod(b - j, t - j, p);
  if (den == 0) return std::nullopt;
  const Residue num = binom_mod(v - j, t - j, p);
  return p.mul(p.mul(num, p.inv(den)), p.reduce_unsigned(mu_t));
}

std::optional<Residue> similar(const Spectrum& s1, const Spectrum& s2, Prime p) {
  if (s1.levels() != s2.levels()) throw std::invalid_argument("spectra differ in length");
  const FpVector mu = s1.values();
  const FpVector gamma = s2.values();
  std::optional<Residue> k;
  for (std::size_t j = 0; j < mu.size(); ++j) {
    if (gamma[j] != 0) {
      k = p.mul(mu[j], p.inv(gamma[j]));
      break;
    }
  }
  if (!k) {
    // gamma is zero: only the zero spectrum is proportional to it.
    const bool mu_zero = std::all_of(mu.begin(), mu.end(), [](Residue r) { return r == 0; });
    return mu_zero ? std::optional<Residue>(1) : std::nullopt;
  }
  if (*k == 0) return std::nullopt;
  for (std::size_t j = 0; j < mu.size(); ++j) {
    if (mu[j] != p.mul(*k, gamma[j])) return std::nullopt;
  }
  return k;
}

Design add(const Design& u, const Design& w) {
  check_same_shape(u, w);
  FpVector out(u.size());
  for (std::size_t r = 0; r < out.size(); ++r) out[r] = u.prime().add(u[r], w[r]);
  return Design(u.ground(), u.block(), u.prime(), std::move(out));
}

Design scale(const Design& u, Residue k) {
  const Prime p = u.prime();
  FpVector out(u.size());
  const Residue kk = p.reduce_unsigned(k);
  for (std::size_t r = 0; r < out.size(); ++r) out[r] = p.mul(u[r], kk);
  return Design(u.ground(), u.block(), p, std::move(out));
}

Design indicator(std::uint32_t v, Prime p, const Subset& block) {
  if (block.ground() > v) throw std::invalid_argument("block outside ground set");
  Design u(v, static_cast<std::uint32_t>(block.size()), p);
  u.set(block, 1);
  return u;
}

Design relabel(const Design& u, std::span<const std::uint32_t> image, std::uint32_t new_v) {
  if (image.size() != u.ground()) throw std::invalid_argument("injection must cover [v]");
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] < 1 || image[i] > new_v || (i > 0 && image[i] <= image[i - 1])) {
      throw std::invalid_argument("relabel needs a strictly increasing injection into [new_v]");
    }
  }
  Design out(new_v, u.block(), u.prime());
  std::vector<std::uint32_t> mapped(u.block());
  std::uint64_t rank = 0;
  const std::span<const Residue> values = u.values();
  for_each_subset(u.ground(), u.block(), [&](std::span<const std::uint32_t> s) {
    const Residue x = values[rank++];
    if (x == 0) return;
    for (std::size_t t = 0; t < s.size(); ++t) mapped[t] = image[s[t] - 1];
    out.set_rank(colex_rank(mapped), x);
  });
  return out;
}

__extension__ using Wide = __int128;

bool satisfies_integral_recurrence(std::uint64_t v, std::uint64_t b,
                                   std::span<const std::int64_t> mus) {
  for (std::uint64_t j = 0; j + 1 < mus.size(); ++j) {
    if (j >= b || j >= v) return false;
    const Wide lhs = static_cast<Wide>(mus[j + 1]) * static_cast<Wide>(v - j);
    const Wide rhs = static_cast<Wide>(mus[j]) * static_cast<Wide>(b - j);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace udesign
