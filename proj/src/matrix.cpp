#include "evoalg/matrix.hpp"

#include <algorithm>
#include <optional>

namespace evoalg {

Matrix::Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(spec)) {}

Matrix Matrix::identity(const FieldSpec& spec, std::size_t n) {
  Matrix m(spec, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(spec);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& spec, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(spec, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) raise(Errc::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(rows[r][c].spec() == spec))
        raise(Errc::MixedFieldSpecs, "matrix entry from " + rows[r][c].spec().describe());
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& spec, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Scalar>> scalars;
  for (const auto& row : rows) {
    auto& out = scalars.emplace_back();
    for (long v : row) out.push_back(Scalar::from_int(spec, v));
  }
  return from_rows(spec, scalars);
}

std::vector<Scalar> Matrix::row_vector(std::size_t r) const {
  auto view = row(r);
  return {view.begin(), view.end()};
}

Matrix Matrix::transpose() const {
  Matrix t(spec_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
  Matrix s(spec_, row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r)
    for (std::size_t c = 0; c < col_idx.size(); ++c) s(r, c) = (*this)(row_idx[r], col_idx[c]);
  return s;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (!(spec_ == rhs.spec_)) raise(Errc::MixedFieldSpecs, "matrix product across fields");
  if (cols_ != rhs.rows_) raise(Errc::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(spec_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero() && spec_.is_exact()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.spec_ == b.spec_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

double Matrix::max_magnitude() const {
  double m = 0.0;
  for (const auto& s : data_) m = std::max(m, s.magnitude());
  return m;
}

// ---------------------------------------------------------------------------

namespace {

// Row with the pivot for column c among rows [from, rows): first nonzero
// entry for exact fields, largest magnitude over ApproxReals.
std::optional<std::size_t> find_pivot(const Matrix& m, std::size_t from, std::size_t c) {
  std::optional<std::size_t> best;
  for (std::size_t r = from; r < m.rows(); ++r) {
    if (m(r, c).is_zero()) continue;
    if (m.spec().is_exact()) return r;
    if (!best || m(r, c).magnitude() > m(*best, c).magnitude()) best = r;
  }
  return best;
}

}  // namespace

RrefResult rref(const Matrix& input) {
  Matrix m = input;
  const FieldSpec& spec = m.spec();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    const auto pivot = find_pivot(m, row, c);
    if (!pivot) {
      for (std::size_t r = row; r < m.rows(); ++r) m(r, c) = Scalar::zero(spec);
      continue;
    }
    m.swap_rows(row, *pivot);
    const Scalar inv = m(row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
    m(row, c) = Scalar::one(spec);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const Scalar factor = m(r, c);
      if (factor.is_zero() && spec.is_exact()) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= factor * m(row, j);
      m(r, c) = Scalar::zero(spec);
    }
    pivots.push_back(c);
    ++row;
  }
  if (!spec.is_exact()) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (r >= row || m(r, c).is_zero()) m(r, c) = Scalar::zero(spec);
  }
  return {std::move(m), row, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Scalar determinant(const Matrix& input) {
  if (!input.is_square()) raise(Errc::NonSquare, "determinant of a non-square matrix");
  Matrix m = input;
  const FieldSpec& spec = m.spec();
  Scalar det = Scalar::one(spec);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto pivot = find_pivot(m, c, c);
    if (!pivot) return Scalar::zero(spec);
    if (*pivot != c) {
      m.swap_rows(c, *pivot);
      det = -det;
    }
    const Scalar p = m(c, c);
    det *= p;
    const Scalar inv = p.inverse();
    for (std::size_t r = c + 1; r < m.rows(); ++r) {
      const Scalar factor = m(r, c) * inv;
      if (factor.is_zero() && spec.is_exact()) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= factor * m(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& input) {
  if (!input.is_square()) raise(Errc::NonSquare, "inverse of a non-square matrix");
  const std::size_t n = input.rows();
  const FieldSpec& spec = input.spec();
  Matrix aug(spec, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = input(r, c);
    aug(r, n + r) = Scalar::one(spec);
  }
  const RrefResult red = rref(aug);
  if (red.rank < n || (n > 0 && red.pivot_cols[n - 1] != n - 1))
    raise(Errc::SingularMatrix, "matrix is singular");
  Matrix inv(spec, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.rref(r, n + c);
  return inv;
}

}  // namespace evoalg
