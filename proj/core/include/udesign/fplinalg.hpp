#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "udesign/prime_field.hpp"

namespace udesign {

using FpVector = std::vector<Residue>;

/// Dense row-major matrix over F_p. Entries are always reduced.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, Prime p);

  static FpMatrix identity(std::size_t n, Prime p);
  /// Rows must all have length `cols`; entries are reduced mod p.
  static FpMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                            std::size_t cols, Prime p);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] Prime prime() const noexcept { return p_; }

  [[nodiscard]] Residue at(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::int64_t value) noexcept {
    data_[r * cols_ + c] = p_.reduce(value);
  }
  [[nodiscard]] std::span<Residue> row(std::size_t r) noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<const Residue> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  void swap_rows(std::size_t r1, std::size_t r2) noexcept;

  /// Matrix product; throws std::invalid_argument on shape or field mismatch.
  [[nodiscard]] FpMatrix operator*(const FpMatrix& rhs) const;
  /// Matrix-vector product; throws std::invalid_argument on length mismatch.
  [[nodiscard]] FpVector apply(std::span<const Residue> x) const;
  [[nodiscard]] FpMatrix scaled(Residue k) const;
  /// Appends the rows of `below`; throws on column or field mismatch.
  void append_rows(const FpMatrix& below);
  /// Appends one column holding `column`; throws on length mismatch.
  [[nodiscard]] FpMatrix with_column(std::span<const Residue> column) const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Prime p_;
  std::vector<Residue> data_;
};

struct RowEchelon {
  FpMatrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivots are chosen as the first row (from the
/// current one down) with a nonzero entry in the column, so results are
/// deterministic. For p = 2 rows are bit-packed internally.
RowEchelon rref(FpMatrix m);

std::size_t rank(const FpMatrix& m);

/// Basis of {x : m x = 0}, one vector per non-pivot column in increasing
/// column order, with a 1 in that column.
std::vector<FpVector> nullspace(const FpMatrix& m);

struct AffineSolutionSpace {
  std::optional<FpVector> particular;
  std::vector<FpVector> nullspace_basis;

  [[nodiscard]] bool consistent() const noexcept { return particular.has_value(); }
};

/// Solution set of m x = rhs. The particular solution sets every free
/// variable to zero. Throws std::invalid_argument on length mismatch.
AffineSolutionSpace solve(const FpMatrix& m, std::span<const Residue> rhs);

/// Whether w lies in the F_p-span of `basis`. Throws on length mismatch.
bool in_span(const std::vector<FpVector>& basis, std::span<const Residue> w, Prime p);

/// Stacks vectors of equal length as matrix rows.
FpMatrix matrix_from_vectors(const std::vector<FpVector>& vectors, std::size_t cols, Prime p);

}  // namespace udesign
