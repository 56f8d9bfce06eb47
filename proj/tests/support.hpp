// Fixtures and independent brute-force oracles shared by the test suites.
// Nothing here calls the library routines it is used to check.
#ifndef EVOALG_TESTS_SUPPORT_HPP
#define EVOALG_TESTS_SUPPORT_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "evoalg/finder.hpp"
#include "evoalg/oracle.hpp"

namespace evoalg::testing {

inline EvolutionAlgebra algebra_of(const FieldSpec& spec, const std::vector<std::vector<long>>& rows) {
  return build_algebra(spec, Matrix::from_ints(spec, rows));
}

inline EvolutionAlgebra plastic(const FieldSpec& spec = FieldSpec::rationals()) {
  return algebra_of(spec, {{1, 0, 0}, {1, -1, 1}, {2, 1, 0}});
}

inline EvolutionAlgebra nilpotent(const FieldSpec& spec = FieldSpec::rationals()) {
  return algebra_of(spec, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
}

// Last two columns as given; first two columns from the 4x4 identity.
inline EvolutionAlgebra rank_two_pair(const FieldSpec& spec = FieldSpec::rationals()) {
  return algebra_of(spec, {{1, 0, 1, 2}, {0, 1, 1, -1}, {0, 0, -3, 2}, {0, 0, 1, 0}});
}

inline EvolutionAlgebra identity_algebra(const FieldSpec& spec, std::size_t n) {
  return build_algebra(spec, Matrix::identity(spec, n));
}

inline Element vec(const EvolutionAlgebra& a, const std::vector<long>& coords) {
  std::vector<Scalar> out;
  for (long c : coords) out.push_back(Scalar::from_int(a.spec(), c));
  return a.element(std::move(out));
}

inline Subspace span_of(const EvolutionAlgebra& a, const std::vector<std::vector<long>>& rows) {
  std::vector<Element> elems;
  for (const auto& r : rows) elems.push_back(vec(a, r));
  return canonicalize(a, elems);
}

// Laplace expansion along the first row.
inline Scalar cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Scalar::one(m.spec());
  if (n == 1) return m(0, 0);
  Scalar det = Scalar::zero(m.spec());
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor(m.spec(), n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    const Scalar term = m(0, c) * cofactor_det(minor);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

// [n choose m]_q by the product formula.
inline std::uint64_t gaussian_binomial(std::uint64_t q, unsigned n, unsigned m) {
  if (m > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (unsigned i = 0; i < m; ++i) {
    std::uint64_t qn = 1, qi = 1;
    for (unsigned k = 0; k < n - i; ++k) qn *= q;
    for (unsigned k = 0; k < i + 1; ++k) qi *= q;
    num *= qn - 1;
    den *= qi - 1;
  }
  return num / den;
}

// Calls fn on every vector of F_p^n as integer residues.
inline void for_each_vector(std::uint64_t p, std::size_t n, const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> v(n, 0);
  while (true) {
    fn(v);
    std::size_t k = 0;
    while (k < n && ++v[k] == static_cast<long>(p)) v[k++] = 0;
    if (k == n) return;
  }
}

// Every n x n matrix over F_p, row-major digit order.
inline std::vector<EvolutionAlgebra> all_algebras(const FieldSpec& spec, std::size_t n) {
  std::vector<EvolutionAlgebra> out;
  for_each_vector(spec.modulus(), n * n, [&](const std::vector<long>& flat) {
    std::vector<std::vector<long>> rows(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n * n; ++i) rows[i / n][i % n] = flat[i];
    out.push_back(algebra_of(spec, rows));
  });
  return out;
}

inline EvolutionAlgebra random_algebra(const FieldSpec& spec, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(0, static_cast<long>(spec.modulus()) - 1);
  std::vector<std::vector<long>> rows(n, std::vector<long>(n));
  for (auto& r : rows)
    for (auto& x : r) x = dist(rng);
  return algebra_of(spec, rows);
}

inline EvolutionAlgebra random_regular_algebra(const FieldSpec& spec, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    auto a = random_algebra(spec, n, rng);
    if (!cofactor_det(a.structure()).is_zero()) return a;
  }
}

// Subspaces as comparable keys (rendered RREF bases).
inline std::string key_of(const Subspace& s) {
  std::string k;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    for (std::size_t c = 0; c < s.basis().cols(); ++c) k += s.basis()(r, c).render() + ",";
    k += ";";
  }
  return k;
}

inline std::set<std::string> keys_of(const std::vector<Subspace>& v) {
  std::set<std::string> out;
  for (const auto& s : v) out.insert(key_of(s));
  return out;
}

}  // namespace evoalg::testing

#endif
