#ifndef EVOALG_MATRIX_HPP
#define EVOALG_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "evoalg/field.hpp"

namespace evoalg {

// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& spec, std::size_t n);
  // Every row must have the same length and every entry the given spec.
  static Matrix from_rows(const FieldSpec& spec, const std::vector<std::vector<Scalar>>& rows);
  // Convenience for fixtures: integer entries.
  static Matrix from_ints(const FieldSpec& spec, const std::vector<std::vector<long>>& rows);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<Scalar> row_vector(std::size_t r) const;

  Matrix transpose() const;
  Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
  void swap_rows(std::size_t a, std::size_t b);

  Matrix operator*(const Matrix& rhs) const;
  // Entry-wise equality (tolerance-based over ApproxReals).
  friend bool operator==(const Matrix& a, const Matrix& b);

  bool is_zero() const;
  double max_magnitude() const;

 private:
  FieldSpec spec_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix rref;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

// Canonical reduced row echelon form. Over ApproxReals the pivot is the
// largest-magnitude candidate and tolerance-small entries are cleared to 0.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
Matrix inverse(const Matrix& m);

}  // namespace evoalg

#endif
