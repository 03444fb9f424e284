#include "udesign/subsets.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>

namespace udesign {

namespace {

using BinomialTable = std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1>;

const BinomialTable& table() {
  static const BinomialTable t = [] {
    BinomialTable out{};
    for (std::uint32_t n = 0; n <= kMaxGround; ++n) {
      out[n][0] = 1;
      for (std::uint32_t k = 1; k <= n; ++k) out[n][k] = out[n - 1][k - 1] + out[n - 1][k];
    }
    return out;
  }();
  return t;
}

// Table lookup without range checks; callers keep n <= kMaxGround.
inline std::uint64_t choose(std::uint32_t n, std::uint32_t k) noexcept {
  return k > n ? 0 : table()[n][k];
}

// Advances an ascending k-subset of [v] to its colex successor.
bool next_subset(std::vector<std::uint32_t>& s, std::uint32_t v) {
  const std::size_t k = s.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint32_t limit = i + 1 < k ? s[i + 1] : v + 1;
    if (s[i] + 1 < limit) {
      ++s[i];
      for (std::size_t t = 0; t < i; ++t) s[t] = static_cast<std::uint32_t>(t + 1);
      return true;
    }
  }
  return false;
}

// Same successor on 0-based index combinations of {0, ..., n-1}.
bool next_combination(std::vector<std::uint32_t>& idx, std::uint32_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint32_t limit = i + 1 < k ? idx[i + 1] : n;
    if (idx[i] + 1 < limit) {
      ++idx[i];
      for (std::size_t t = 0; t < i; ++t) idx[t] = static_cast<std::uint32_t>(t);
      return true;
    }
  }
  return false;
}

void check_levels(std::uint32_t j, std::uint32_t b, std::uint32_t v) {
  if (j > b || b > v) throw std::invalid_argument("inclusion levels require j <= b <= v");
  if (v > kMaxGround) throw std::out_of_range("ground set too large");
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (n > kMaxGround) throw std::out_of_range("binomial: n exceeds supported range");
  return table()[n][k];
}

Subset::Subset(std::vector<std::uint32_t> elements, std::uint32_t v)
    : elements_(std::move(elements)), v_(v) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1 || elements_[i] > v) {
      throw std::invalid_argument("subset element " + std::to_string(elements_[i]) +
                                  " outside [1," + std::to_string(v) + "]");
    }
    if (i > 0 && elements_[i] <= elements_[i - 1]) {
      throw std::invalid_argument("subset elements must be strictly increasing");
    }
  }
}

Subset Subset::parse(std::string_view text, std::uint32_t v) {
  std::vector<std::uint32_t> out;
  if (text.empty()) return Subset(out, v);
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - pos);
    std::uint32_t x = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
    if (ec != std::errc{} || end != token.data() + token.size() || token.empty()) {
      throw std::invalid_argument("malformed subset '" + std::string(text) + "'");
    }
    out.push_back(x);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Subset(std::move(out), v);
}

Subset Subset::range(std::uint32_t first, std::uint32_t last, std::uint32_t v) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = first; x <= last; ++x) out.push_back(x);
  return Subset(std::move(out), v);
}

bool Subset::contains(std::uint32_t x) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool Subset::disjoint_from(const Subset& other) const noexcept {
  return std::none_of(elements_.begin(), elements_.end(),
                      [&](std::uint32_t x) { return other.contains(x); });
}

std::string Subset::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out;
}

std::uint64_t colex_rank(std::span<const std::uint32_t> elements) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    r += choose(elements[i] - 1, static_cast<std::uint32_t>(i + 1));
  }
  return r;
}

std::uint64_t colex_rank(const Subset& s) { return colex_rank(s.elements()); }

Subset colex_unrank(std::uint64_t r, std::uint32_t k, std::uint32_t v) {
  if (k > v || r >= binomial(v, k)) throw std::out_of_range("colex rank out of range");
  std::vector<std::uint32_t> out(k);
  std::uint32_t hi = v;
  for (std::uint32_t i = k; i >= 1; --i) {
    // Largest element e with C(e-1, i) <= r.
    std::uint32_t e = i;
    while (e < hi && choose(e, i) <= r) ++e;
    out[i - 1] = e;
    r -= choose(e - 1, i);
    hi = e - 1;
  }
  return Subset(std::move(out), v);
}

void for_each_subset(std::uint32_t v, std::uint32_t k,
                     const std::function<void(std::span<const std::uint32_t>)>& fn) {
  if (k > v) return;
  std::vector<std::uint32_t> s(k);
  for (std::uint32_t i = 0; i < k; ++i) s[i] = i + 1;
  do {
    fn(s);
  } while (next_subset(s, v));
}

std::vector<Subset> all_subsets(std::uint32_t v, std::uint32_t k) {
  std::vector<Subset> out;
  for_each_subset(v, k, [&](std::span<const std::uint32_t> s) {
    out.emplace_back(std::vector<std::uint32_t>(s.begin(), s.end()), v);
  });
  return out;
}

InclusionMatrix inclusion_matrix(std::uint32_t i, std::uint32_t b, std::uint32_t v, Prime p) {
  check_levels(i, b, v);
  FpMatrix m(choose(v, i), choose(v, b), p);
  std::vector<std::uint32_t> idx(i), sub(i);
  std::uint64_t col = 0;
  for_each_subset(v, b, [&](std::span<const std::uint32_t> y) {
    for (std::uint32_t t = 0; t < i; ++t) idx[t] = t;
    do {
      for (std::uint32_t t = 0; t < i; ++t) sub[t] = y[idx[t]];
      m.set(colex_rank(sub), col, 1);
    } while (next_combination(idx, b));
    ++col;
  });
  return {i, b, v, std::move(m)};
}

FpMatrix stacked_inclusion(std::uint32_t b, std::span<const std::uint32_t> levels,
                           std::uint32_t v, Prime p) {
  std::vector<std::uint64_t> offsets;
  std::uint64_t total = 0;
  for (std::uint32_t j : levels) {
    check_levels(j, b, v);
    offsets.push_back(total);
    total += choose(v, j);
  }
  FpMatrix m(total, choose(v, b), p);
  std::vector<std::uint32_t> idx;
  std::uint64_t col = 0;
  for_each_subset(v, b, [&](std::span<const std::uint32_t> y) {
    for (std::size_t level = 0; level < levels.size(); ++level) {
      const std::uint32_t j = levels[level];
      idx.resize(j);
      for (std::uint32_t t = 0; t < j; ++t) idx[t] = t;
      do {
        std::uint64_t r = 0;
        for (std::uint32_t t = 0; t < j; ++t) r += choose(y[idx[t]] - 1, t + 1);
        m.set(offsets[level] + r, col, 1);
      } while (next_combination(idx, b));
    }
    ++col;
  });
  return m;
}

FpVector inclusion_apply(std::span<const Residue> values, std::uint32_t b, std::uint32_t j,
                         std::uint32_t v, Prime p, ApplyStrategy strategy) {
  check_levels(j, b, v);
  if (values.size() != choose(v, b)) {
    throw std::invalid_argument("design vector length does not match C(v, b)");
  }
  if (j == b) return FpVector(values.begin(), values.end());
  if (strategy == ApplyStrategy::Auto) {
    strategy = choose(v - j, b - j) <= choose(b, j) ? ApplyStrategy::SupersetsPerRow
                                                   : ApplyStrategy::SubsetsPerColumn;
  }

  std::vector<std::uint64_t> acc(choose(v, j), 0);
  if (strategy == ApplyStrategy::SubsetsPerColumn) {
    std::vector<std::uint32_t> idx(j);
    std::uint64_t col = 0;
    for_each_subset(v, b, [&](std::span<const std::uint32_t> y) {
      const Residue x = values[col++];
      if (x == 0) return;
      for (std::uint32_t t = 0; t < j; ++t) idx[t] = t;
      do {
        std::uint64_t r = 0;
        for (std::uint32_t t = 0; t < j; ++t) r += choose(y[idx[t]] - 1, t + 1);
        acc[r] += x;
      } while (next_combination(idx, b));
    });
  } else {
    const std::uint32_t extra = b - j;
    std::vector<std::uint32_t> complement, idx(extra), merged(b);
    std::uint64_t row = 0;
    for_each_subset(v, j, [&](std::span<const std::uint32_t> z) {
      complement.clear();
      for (std::uint32_t x = 1, t = 0; x <= v; ++x) {
        if (t < z.size() && z[t] == x) {
          ++t;
        } else {
          complement.push_back(x);
        }
      }
      std::uint64_t sum = 0;
      for (std::uint32_t t = 0; t < extra; ++t) idx[t] = t;
      do {
        std::size_t zi = 0, ci = 0;
        for (std::uint32_t t = 0; t < b; ++t) {
          if (ci == extra || (zi < z.size() && z[zi] < complement[idx[ci]])) {
            merged[t] = z[zi++];
          } else {
            merged[t] = complement[idx[ci++]];
          }
        }
        sum += values[colex_rank(merged)];
      } while (next_combination(idx, static_cast<std::uint32_t>(complement.size())));
      acc[row++] = sum;
    });
  }

  FpVector out(acc.size());
  for (std::size_t r = 0; r < acc.size(); ++r) out[r] = p.reduce_unsigned(acc[r]);
  return out;
}

}  // namespace udesign
