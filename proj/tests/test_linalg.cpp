#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace evoalg;
using namespace evoalg::testing;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime_field(2);

Matrix random_matrix(const FieldSpec& spec, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-2, 2);
  Matrix m(spec, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar::from_int(spec, d(rng));
  return m;
}

bool is_rref(const RrefResult& res) {
  const Matrix& m = res.rref;
  std::size_t last = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    bool zero_row = true;
    for (std::size_t c = 0; c < m.cols(); ++c) zero_row = zero_row && m(r, c).is_zero();
    if (r >= res.rank) {
      if (!zero_row) return false;
      continue;
    }
    const std::size_t pc = res.pivot_cols[r];
    if (r > 0 && pc <= last) return false;
    last = pc;
    if (!m(r, pc).is_one()) return false;
    for (std::size_t c = 0; c < pc; ++c)
      if (!m(r, c).is_zero()) return false;
    for (std::size_t rr = 0; rr < m.rows(); ++rr)
      if (rr != r && !m(rr, pc).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rref examples") {
  const auto a = rref(Matrix::from_ints(Q, {{0, 1}, {1, 1}}));
  CHECK(a.rref == Matrix::identity(Q, 2));
  CHECK(a.rank == 2);
  CHECK(a.pivot_cols == std::vector<std::size_t>{0, 1});

  CHECK(rank(Matrix::from_ints(F2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})) == 2);

  const auto z = rref(Matrix(Q, 3, 3));
  CHECK(z.rank == 0);
  CHECK(z.pivot_cols.empty());
}

TEST_CASE("determinant examples") {
  CHECK(determinant(Matrix::identity(Q, 3)).is_one());
  const Matrix pl = Matrix::from_ints(Q, {{1, 0, 0}, {1, -1, 1}, {2, 1, 0}});
  CHECK(cofactor_det(pl).render() == "-1");
  CHECK(determinant(pl).render() == "-1");
  CHECK(determinant(Matrix::from_ints(Q, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})).is_zero());
  try {
    determinant(Matrix(Q, 2, 3));
    FAIL("expected NonSquare");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonSquare);
  }
}

TEST_CASE("inverse examples") {
  CHECK(inverse(Matrix::identity(Q, 4)) == Matrix::identity(Q, 4));
  CHECK(inverse(Matrix::from_ints(Q, {{2}}))(0, 0).render() == "1/2");
  try {
    inverse(Matrix::from_ints(Q, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
    FAIL("expected SingularMatrix");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SingularMatrix);
  }
  try {
    inverse(Matrix(Q, 1, 2));
    FAIL("expected NonSquare");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonSquare);
  }
}

TEST_CASE("rref properties on random exact matrices") {
  std::mt19937_64 rng(17);
  for (const FieldSpec spec : {Q, F2, FieldSpec::prime_field(3), FieldSpec::prime_field(7)}) {
    for (int t = 0; t < 150; ++t) {
      std::uniform_int_distribution<std::size_t> dim(1, 5);
      const Matrix m = random_matrix(spec, dim(rng), dim(rng), rng);
      const RrefResult res = rref(m);
      CHECK(is_rref(res));
      CHECK(res.rank == res.pivot_cols.size());
      CHECK(rref(res.rref).rref == res.rref);
      CHECK(rank(m.transpose()) == res.rank);

      // Row space preserved: stacking m under its RREF does not raise rank.
      Matrix stacked(spec, 2 * m.rows(), m.cols());
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
          stacked(r, c) = m(r, c);
          stacked(m.rows() + r, c) = res.rref(r, c);
        }
      CHECK(rank(stacked) == res.rank);
    }
  }
}

TEST_CASE("determinant and inverse properties on random square matrices") {
  std::mt19937_64 rng(23);
  for (const FieldSpec spec : {Q, F2, FieldSpec::prime_field(3), FieldSpec::prime_field(5)}) {
    for (int t = 0; t < 150; ++t) {
      std::uniform_int_distribution<std::size_t> dim(1, 4);
      const std::size_t n = dim(rng);
      const Matrix m = random_matrix(spec, n, n, rng);
      const Scalar det = determinant(m);
      CHECK(det == cofactor_det(m));
      CHECK(!det.is_zero() == (rank(m) == n));
      if (!det.is_zero()) {
        const Matrix inv = inverse(m);
        CHECK(m * inv == Matrix::identity(spec, n));
        CHECK(inv * m == Matrix::identity(spec, n));
      }
    }
  }
}

TEST_CASE("approx reals use pivoting and tolerance") {
  const FieldSpec R = FieldSpec::approx_reals(1e-9);
  Matrix m(R, 2, 2);
  m(0, 0) = Scalar::from_double(R, 1e-12);
  m(0, 1) = Scalar::from_double(R, 1.0);
  m(1, 0) = Scalar::from_double(R, 1.0);
  m(1, 1) = Scalar::from_double(R, 1.0);
  const RrefResult res = rref(m);
  CHECK(res.rank == 2);
  CHECK(res.rref == Matrix::identity(R, 2));
  CHECK(determinant(m).real() == doctest::Approx(-1.0));

  Matrix near_singular(R, 2, 2);
  near_singular(0, 0) = Scalar::from_double(R, 1.0);
  near_singular(0, 1) = Scalar::from_double(R, 2.0);
  near_singular(1, 0) = Scalar::from_double(R, 1.0);
  near_singular(1, 1) = Scalar::from_double(R, 2.0 + 1e-12);
  CHECK(rank(near_singular) == 1);
}
