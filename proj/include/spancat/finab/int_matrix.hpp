#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace spancat::finab {

/// Overflow-checked int64 arithmetic. Throws std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Non-negative remainder.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

/// Dense row-major integer matrix. Shapes with zero rows or zero columns
/// are legal and keep their other dimension.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  /// rows x cols matrix with `diag` on the leading diagonal.
  static IntMatrix diagonal(std::span<const std::int64_t> diag, std::size_t rows,
                            std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::int64_t> column(std::size_t j) const;
  std::vector<std::int64_t> row(std::size_t i) const;
  bool is_zero() const;

  // Elementary operations; each is unimodular.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, std::int64_t factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, std::int64_t factor);

  /// Keeps the listed rows (in order).
  IntMatrix select_rows(std::span<const std::size_t> which) const;
  IntMatrix select_cols(std::span<const std::size_t> which) const;
  IntMatrix col_range(std::size_t begin, std::size_t end) const;
  IntMatrix row_range(std::size_t begin, std::size_t end) const;

  /// [A | B]
  static IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
  /// [A ; B]
  static IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);
  /// [A 0 ; 0 B]
  static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

  IntMatrix transposed() const;
  std::vector<std::int64_t> apply(std::span<const std::int64_t> x) const;

  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);

  auto operator<=>(const IntMatrix&) const = default;
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

}  // namespace spancat::finab
