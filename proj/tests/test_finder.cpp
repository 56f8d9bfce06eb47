#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace evoalg;
using namespace evoalg::testing;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec R9 = FieldSpec::approx_reals(1e-9);
const FieldSpec F2 = FieldSpec::prime_field(2);
const FieldSpec F3 = FieldSpec::prime_field(3);

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an evoalg::Error");
  return Errc::InvariantViolated;
}

Scalar s(const FieldSpec& spec, long v) { return Scalar::from_int(spec, v); }

std::vector<Subspace> subspaces_of(const std::vector<CodimOneFound>& found) {
  std::vector<Subspace> out;
  for (const auto& f : found) out.push_back(f.subspace);
  return out;
}

std::vector<Subspace> oracle_of_dim(const EvolutionAlgebra& a, std::size_t m) {
  std::vector<Subspace> out;
  for (auto& sub : enumerate_subalgebras(a))
    if (sub.dim() == m) out.push_back(sub);
  return out;
}

}  // namespace

TEST_CASE("onedim_residual") {
  const auto id = identity_algebra(Q, 3);
  CHECK(onedim_residual(id, vec(id, {1, 0, 0})).is_zero());
  CHECK(onedim_residual(id, vec(id, {1, 1, 0})).is_zero());
  CHECK(onedim_residual(id, vec(id, {2, 0, 0})) == vec(id, {2, 0, 0}));
  const auto nil = nilpotent();
  CHECK(code_of([&] { onedim_residual(nil, nil.basis_vector(0)); }) == Errc::NotRegular);
}

TEST_CASE("solve_onedim") {
  const auto lines = solve_onedim(identity_algebra(F2, 2));
  REQUIRE(lines.size() == 3);
  CHECK(keys_of(lines) == keys_of({span_of(identity_algebra(F2, 2), {{1, 0}}),
                                   span_of(identity_algebra(F2, 2), {{0, 1}}),
                                   span_of(identity_algebra(F2, 2), {{1, 1}})}));

  const auto swap = algebra_of(Q, {{0, 1}, {1, 0}});
  const auto swap_lines = solve_onedim(swap);
  REQUIRE(swap_lines.size() == 1);
  CHECK(swap_lines[0] == span_of(swap, {{1, 1}}));
  CHECK(square(vec(swap, {1, 1})) == vec(swap, {1, 1}));

  CHECK(code_of([] { solve_onedim(nilpotent()); }) == Errc::NotRegular);
  CHECK(code_of([] { solve_onedim(plastic()); }) == Errc::UnsupportedFieldDimension);
  CHECK(solve_onedim(algebra_of(Q, {{3}})).size() == 1);
}

TEST_CASE("pair_submatrix") {
  const auto ex8 = pair_submatrix(rank_two_pair(), 2, 3);
  CHECK(ex8.m == Matrix::from_ints(Q, {{1, 2}, {1, -1}}));
  CHECK(ex8.rank == 2);

  const auto a23 = pair_submatrix(plastic(), 1, 2);
  CHECK(a23.m == Matrix::from_ints(Q, {{0, 0}}));
  CHECK(a23.rank == 0);

  const auto a12 = pair_submatrix(plastic(), 0, 1);
  CHECK(a12.m == Matrix::from_ints(Q, {{2, 1}}));
  CHECK(a12.rank == 1);

  CHECK(pair_submatrix(plastic(), 1, 0).m == a12.m);
  CHECK(code_of([] { pair_submatrix(plastic(), 1, 1); }) == Errc::BadIndices);
  CHECK(code_of([] { pair_submatrix(plastic(), 0, 3); }) == Errc::BadIndices);
  CHECK(code_of([] { pair_submatrix(identity_algebra(Q, 2), 0, 1); }) == Errc::DimensionTooSmall);
}

TEST_CASE("eq3") {
  const auto pl = plastic();
  const auto first = eq3_sides(pl, 0, 1, s(Q, 2), s(Q, 1));
  CHECK(first.lhs.render() == "5");
  CHECK(first.rhs.render() == "-2");
  CHECK_FALSE(first.holds());

  const auto second = eq3_sides(pl, 0, 2, s(Q, 1), s(Q, 1));
  CHECK(second.lhs.render() == "3");
  CHECK(second.rhs.render() == "0");
  CHECK_FALSE(second.holds());

  // a_12 = 0 here, so (alpha, beta) = (1, 0) satisfies the identity.
  CHECK(eq3_holds(pl, 0, 1, s(Q, 1), s(Q, 0)));
  CHECK(eq3_holds(identity_algebra(Q, 3), 0, 2, s(Q, 1), s(Q, 0)));
  CHECK(code_of([&] { eq3_holds(pl, 0, 1, s(Q, 0), s(Q, 0)); }) == Errc::ZeroPair);
}

TEST_CASE("eq4_cubic") {
  CHECK(eq4_cubic(plastic(), 1, 2).render() == "x^3 - x - 1");
  CHECK(eq4_cubic(identity_algebra(Q, 3), 0, 2).render() == "-x^2 + x");
  CHECK(eq4_cubic(algebra_of(Q, {{0, 1}, {1, 0}}), 0, 1).render() == "x^3 - 1");
  CHECK(code_of([] { eq4_cubic(plastic(), 0, 0); }) == Errc::BadIndices);
}

TEST_CASE("codim1_for_pair") {
  CHECK(codim1_for_pair(plastic(), 1, 2).empty());

  const auto real = codim1_for_pair(plastic(R9), 1, 2);
  REQUIRE(real.size() == 1);
  const auto* root = std::get_if<RankZeroRoot>(&real[0].how);
  REQUIRE(root != nullptr);
  CHECK(root->lambda.real() > 1.3247);
  CHECK(root->lambda.real() < 1.3248);
  CHECK(root->provenance == RootProvenance::Irrational);
  CHECK(closure_residual(real[0].subspace) <= 1e-9);

  const auto id = identity_algebra(Q, 3);
  const auto three = codim1_for_pair(id, 0, 1);
  CHECK(keys_of(subspaces_of(three)) ==
        keys_of({span_of(id, {{0, 0, 1}, {1, 1, 0}}), span_of(id, {{1, 0, 0}, {0, 0, 1}}),
                 span_of(id, {{0, 1, 0}, {0, 0, 1}})}));
  for (const auto& f : three) CHECK(is_subalgebra(f.subspace));

  CHECK(code_of([] { codim1_for_pair(nilpotent(), 0, 1); }) == Errc::NotRegular);
  CHECK(code_of([] { codim1_for_pair(identity_algebra(Q, 2), 0, 1); }) == Errc::DimensionTooSmall);
}

TEST_CASE("enumerate_codim1") {
  CHECK(enumerate_codim1(plastic()).subalgebras.empty());

  for (const FieldSpec spec : {Q, F2, FieldSpec::prime_field(5)}) {
    const auto id = identity_algebra(spec, 3);
    const auto report = enumerate_codim1(id);
    CHECK(report.subalgebras.size() == 6);
    CHECK(report.pairs.size() == 3);
    if (spec.is_finite()) CHECK(keys_of(subspaces_of(report.subalgebras)) == keys_of(oracle_of_dim(id, 2)));
  }

  const auto report = enumerate_codim1(plastic());
  REQUIRE(report.pairs.size() == 3);
  CHECK(report.pairs[0].rank == 1);
  CHECK(report.pairs[1].rank == 1);
  CHECK(report.pairs[2].rank == 0);
  REQUIRE(report.pairs[2].cubic.has_value());
  CHECK(report.pairs[2].cubic->roots.empty());

  CHECK(code_of([] { enumerate_codim1(nilpotent()); }) == Errc::NotRegular);
  CHECK(code_of([] { enumerate_codim1(algebra_of(Q, {{1}})); }) == Errc::DimensionTooSmall);
}

TEST_CASE("dimension two uses the rank-zero closed form") {
  const auto swap = algebra_of(Q, {{0, 1}, {1, 0}});
  const auto report = enumerate_codim1(swap);
  REQUIRE(report.subalgebras.size() == 1);
  CHECK(report.subalgebras[0].subspace == span_of(swap, {{1, 1}}));

  const auto id = identity_algebra(Q, 2);
  CHECK(keys_of(solve_onedim(id)) == keys_of({span_of(id, {{1, 0}}), span_of(id, {{0, 1}}), span_of(id, {{1, 1}})}));

  // Closed form against the oracle for every regular 2x2 algebra over small fields.
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const FieldSpec F = FieldSpec::prime_field(p);
    for (const auto& a : all_algebras(F, 2)) {
      if (!is_regular(a)) continue;
      CHECK(keys_of(solve_onedim(a)) == keys_of(oracle_of_dim(a, 1)));
    }
  }
}

TEST_CASE("corollary6_necessary") {
  CHECK(corollary6_necessary(rank_two_pair(), 2, 3));
  CHECK(corollary6_necessary(plastic(), 1, 2));
  CHECK_FALSE(corollary6_necessary(plastic(), 0, 2));
  CHECK(code_of([] { corollary6_necessary(identity_algebra(Q, 2), 0, 1); }) == Errc::DimensionTooSmall);
}

TEST_CASE("necessary condition without a subalgebra") {
  const auto ex8 = rank_two_pair();
  CHECK_FALSE(determinant(ex8.structure()).is_zero());
  CHECK(corollary6_necessary(ex8, 2, 3));
  CHECK(pair_submatrix(ex8, 2, 3).rank == 2);
  CHECK(codim1_for_pair(ex8, 2, 3).empty());
}

TEST_CASE("soundness, completeness and the pairwise necessary condition over F_2 and F_3") {
  std::mt19937_64 rng(43);
  std::vector<EvolutionAlgebra> sample;
  for (const auto& a : all_algebras(F2, 3))
    if (is_regular(a)) sample.push_back(a);
  for (int t = 0; t < 100; ++t) sample.push_back(random_regular_algebra(F3, 3, rng));
  for (int t = 0; t < 50; ++t) sample.push_back(random_regular_algebra(F2, 4, rng));

  for (const auto& a : sample) {
    const auto report = enumerate_codim1(a);
    for (const auto& f : report.subalgebras) CHECK(is_subalgebra(f.subspace));
    CHECK(keys_of(subspaces_of(report.subalgebras)) == keys_of(oracle_of_dim(a, a.dim() - 1)));
    for (std::size_t p = 0; p < a.dim(); ++p)
      for (std::size_t q = p + 1; q < a.dim(); ++q)
        if (!codim1_for_pair(a, p, q).empty()) CHECK(corollary6_necessary(a, p, q));
  }
}

TEST_CASE("zero residuals match one-dimensional subalgebras over F_2 and F_3") {
  std::mt19937_64 rng(47);
  for (std::uint64_t p : {2u, 3u}) {
    const FieldSpec F = FieldSpec::prime_field(p);
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<EvolutionAlgebra> algebras;
      if (p == 3 && n == 3) {
        for (int t = 0; t < 60; ++t) algebras.push_back(random_regular_algebra(F, n, rng));
      } else {
        for (const auto& a : all_algebras(F, n))
          if (is_regular(a)) algebras.push_back(a);
      }
      for (const auto& a : algebras) {
        std::size_t solutions = 0;
        for_each_vector(p, n, [&](const std::vector<long>& v) {
          const Element x = vec(a, v);
          if (!x.is_zero() && onedim_residual(a, x).is_zero()) ++solutions;
        });
        const auto lines = solve_onedim(a);
        CHECK(solutions == lines.size());
        CHECK(keys_of(lines) == keys_of(oracle_of_dim(a, 1)));
      }
    }
  }
}

TEST_CASE("necessary condition is sufficient in dimension three over R") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> d(-3, 3), zero(0, 2);
  int checked = 0;
  for (int t = 0; t < 3000 && checked < 200; ++t) {
    std::vector<std::vector<long>> rows(3, std::vector<long>(3));
    for (auto& r : rows)
      for (auto& x : r) x = zero(rng) == 0 ? 0 : d(rng);
    const auto a = algebra_of(R9, rows);
    if (!is_regular(a)) continue;
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t q = p + 1; q < 3; ++q) {
        if (!corollary6_necessary(a, p, q)) continue;
        if ((a.constant(p, q) * a.constant(q, p)).is_zero()) continue;
        ++checked;
        CHECK_FALSE(codim1_for_pair(a, p, q).empty());
      }
  }
  CHECK(checked >= 50);
}
