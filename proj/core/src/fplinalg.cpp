#include "udesign/fplinalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace udesign {

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, Prime p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::size_t n, Prime p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                             std::size_t cols, Prime p) {
  FpMatrix m(rows.size(), cols, p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void FpMatrix::swap_rows(std::size_t r1, std::size_t r2) noexcept {
  if (r1 == r2) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(r1 * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r1 + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(r2 * cols_));
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_) {
    throw std::invalid_argument("matrix product shape or field mismatch");
  }
  FpMatrix out(rows_, rhs.cols_, p_);
  std::vector<std::uint64_t> acc(rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t x = at(r, k);
      if (x == 0) continue;
      const auto src = rhs.row(k);
      for (std::size_t c = 0; c < rhs.cols_; ++c) acc[c] += x * src[c];
    }
    auto dst = out.row(r);
    for (std::size_t c = 0; c < rhs.cols_; ++c) dst[c] = p_.reduce_unsigned(acc[c]);
  }
  return out;
}

FpVector FpMatrix::apply(std::span<const Residue> x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector length mismatch");
  FpVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const auto src = row(r);
    for (std::size_t c = 0; c < cols_; ++c) acc += std::uint64_t{src[c]} * x[c];
    out[r] = p_.reduce_unsigned(acc);
  }
  return out;
}

FpMatrix FpMatrix::scaled(Residue k) const {
  FpMatrix out = *this;
  for (auto& x : out.data_) x = p_.mul(x, k);
  return out;
}

void FpMatrix::append_rows(const FpMatrix& below) {
  if (below.cols_ != cols_ || below.p_ != p_) {
    throw std::invalid_argument("append_rows shape or field mismatch");
  }
  data_.insert(data_.end(), below.data_.begin(), below.data_.end());
  rows_ += below.rows_;
}

FpMatrix FpMatrix::with_column(std::span<const Residue> column) const {
  if (column.size() != rows_) throw std::invalid_argument("column length mismatch");
  FpMatrix out(rows_, cols_ + 1, p_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::copy_n(row(r).begin(), cols_, out.row(r).begin());
    out.data_[r * (cols_ + 1) + cols_] = p_.reduce_unsigned(column[r]);
  }
  return out;
}

namespace {

constexpr std::uint32_t kMultipleTableLimit = 256;

RowEchelon rref_f2(FpMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::uint64_t> bits(rows * words, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto src = m.row(r);
    for (std::size_t c = 0; c < cols; ++c) {
      if (src[c] != 0) bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  auto word = [&](std::size_t r, std::size_t w) -> std::uint64_t& { return bits[r * words + w]; };

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pr = lead;
    while (pr < rows && (word(pr, w) & mask) == 0) ++pr;
    if (pr == rows) continue;
    if (pr != lead) {
      std::swap_ranges(bits.begin() + static_cast<std::ptrdiff_t>(pr * words + w),
                       bits.begin() + static_cast<std::ptrdiff_t>((pr + 1) * words),
                       bits.begin() + static_cast<std::ptrdiff_t>(lead * words + w));
    }
    const std::uint64_t* src = &bits[lead * words];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || (word(r, w) & mask) == 0) continue;
      std::uint64_t* dst = &bits[r * words];
      for (std::size_t k = w; k < words; ++k) dst[k] ^= src[k];
    }
    pivots.push_back(c);
    ++lead;
  }

  for (std::size_t r = 0; r < rows; ++r) {
    auto dst = m.row(r);
    for (std::size_t c = 0; c < cols; ++c) {
      dst[c] = static_cast<Residue>((word(r, c / 64) >> (c % 64)) & 1u);
    }
  }
  return {std::move(m), lead, std::move(pivots)};
}

// dst[k] += src[k] over [from, n), both reduced.
void add_row(Residue* dst, const Residue* src, std::size_t from, std::size_t n, std::uint32_t p) {
  for (std::size_t k = from; k < n; ++k) {
    const std::uint32_t t = std::uint32_t{dst[k]} + src[k];
    dst[k] = static_cast<Residue>(t >= p ? t - p : t);
  }
}

}  // namespace

RowEchelon rref(FpMatrix m) {
  const Prime p = m.prime();
  if (p.value() == 2) return rref_f2(std::move(m));

  const std::size_t rows = m.rows(), cols = m.cols();
  const bool use_table = p.value() <= kMultipleTableLimit;
  // multiples[(k-1)*cols + x] = k * pivot_row[x], filled lazily per pivot.
  std::vector<Residue> multiples(use_table ? (p.value() - 1) * cols : 0);
  std::vector<char> ready(p.value(), 0);
  std::vector<Residue> scratch(use_table ? 0 : cols);

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pr = lead;
    while (pr < rows && m.at(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    m.swap_rows(pr, lead);

    auto pivot = m.row(lead);
    const Residue inv = p.inv(pivot[c]);
    for (std::size_t k = c; k < cols; ++k) pivot[k] = p.mul(pivot[k], inv);
    if (use_table) std::fill(ready.begin(), ready.end(), 0);

    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead) continue;
      const Residue coeff = m.at(r, c);
      if (coeff == 0) continue;
      const Residue neg = p.neg(coeff);
      const Residue* src;
      if (use_table) {
        Residue* slot = multiples.data() + (neg - 1) * cols;
        if (!ready[neg]) {
          for (std::size_t k = c; k < cols; ++k) slot[k] = p.mul(pivot[k], neg);
          ready[neg] = 1;
        }
        src = slot;
      } else {
        for (std::size_t k = c; k < cols; ++k) scratch[k] = p.mul(pivot[k], neg);
        src = scratch.data();
      }
      add_row(m.row(r).data(), src, c, cols, p.value());
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(m), lead, std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

namespace {

std::vector<FpVector> nullspace_from_rref(const RowEchelon& e, std::size_t cols) {
  const Prime p = e.reduced.prime();
  std::vector<char> is_pivot(cols, 0);
  std::size_t pivot_rows = 0;
  for (std::size_t pc : e.pivots) {
    if (pc < cols) {
      is_pivot[pc] = 1;
      ++pivot_rows;
    }
  }
  std::vector<FpVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    FpVector x(cols, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < pivot_rows; ++i) x[e.pivots[i]] = p.neg(e.reduced.at(i, f));
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace

std::vector<FpVector> nullspace(const FpMatrix& m) {
  return nullspace_from_rref(rref(m), m.cols());
}

AffineSolutionSpace solve(const FpMatrix& m, std::span<const Residue> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  const std::size_t cols = m.cols();
  const RowEchelon e = rref(m.with_column(rhs));

  AffineSolutionSpace out;
  out.nullspace_basis = nullspace_from_rref(e, cols);
  const bool inconsistent = !e.pivots.empty() && e.pivots.back() == cols;
  if (!inconsistent) {
    FpVector x(cols, 0);
    for (std::size_t i = 0; i < e.rank; ++i) x[e.pivots[i]] = e.reduced.at(i, cols);
    out.particular = std::move(x);
  }
  return out;
}

FpMatrix matrix_from_vectors(const std::vector<FpVector>& vectors, std::size_t cols, Prime p) {
  FpMatrix m(vectors.size(), cols, p);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != cols) throw std::invalid_argument("vector length mismatch");
    auto dst = m.row(r);
    for (std::size_t c = 0; c < cols; ++c) dst[c] = p.reduce_unsigned(vectors[r][c]);
  }
  return m;
}

bool in_span(const std::vector<FpVector>& basis, std::span<const Residue> w, Prime p) {
  const std::size_t n = w.size();
  FpMatrix m = matrix_from_vectors(basis, n, p);
  const std::size_t before = rank(m);
  FpMatrix extended(1, n, p);
  for (std::size_t c = 0; c < n; ++c) extended.set(0, c, w[c]);
  m.append_rows(extended);
  return rank(m) == before;
}

}  // namespace udesign
