#include "evoalg/subspace.hpp"

#include <algorithm>

namespace evoalg {

Subspace::Subspace(EvolutionAlgebra algebra, const Matrix& spanning)
    : algebra_(std::move(algebra)), basis_(algebra_.spec(), 0, algebra_.dim()) {
  if (!(spanning.spec() == algebra_.spec())) raise(Errc::MixedFieldSpecs, "spanning set from another field");
  if (spanning.cols() != algebra_.dim()) raise(Errc::DimensionMismatch, "spanning vectors have wrong length");
  RrefResult red = rref(spanning);
  std::vector<std::size_t> rows(red.rank);
  std::vector<std::size_t> cols(algebra_.dim());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  basis_ = red.rref.submatrix(rows, cols);
  pivots_ = std::move(red.pivot_cols);
}

Element Subspace::basis_element(std::size_t r) const { return algebra_.element(basis_.row_vector(r)); }

std::vector<Element> Subspace::basis_elements() const {
  std::vector<Element> out;
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_element(r));
  return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.algebra_.same_as(b.algebra_) && a.basis_ == b.basis_;
}

bool canonical_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  const Matrix& x = a.basis();
  const Matrix& y = b.basis();
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) {
      if (x(r, c) == y(r, c)) continue;
      return canonical_less(x(r, c), y(r, c));
    }
  return false;
}

void sort_canonical(std::vector<Subspace>& subspaces) {
  std::sort(subspaces.begin(), subspaces.end(),
            [](const Subspace& a, const Subspace& b) { return canonical_less(a, b); });
}

Subspace canonicalize(const EvolutionAlgebra& algebra, std::span<const Element> spanning) {
  Matrix m(algebra.spec(), spanning.size(), algebra.dim());
  for (std::size_t r = 0; r < spanning.size(); ++r) {
    require_same_algebra(algebra, spanning[r].algebra());
    for (std::size_t c = 0; c < algebra.dim(); ++c) m(r, c) = spanning[r][c];
  }
  return Subspace(algebra, m);
}

Element reduce(const Subspace& s, const Element& u) {
  require_same_algebra(s.algebra(), u.algebra());
  std::vector<Scalar> rest = u.coords();
  const Matrix& b = s.basis();
  for (std::size_t r = 0; r < b.rows(); ++r) {
    const Scalar factor = rest[s.pivot_cols()[r]];
    for (std::size_t c = 0; c < b.cols(); ++c) rest[c] -= factor * b(r, c);
  }
  return s.algebra().element(std::move(rest));
}

bool contains(const Subspace& s, const Element& u) { return reduce(s, u).is_zero(); }

bool is_subalgebra(const Subspace& s) {
  const auto basis = s.basis_elements();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      if (!contains(s, multiply(basis[i], basis[j]))) return false;
  return true;
}

double closure_residual(const Subspace& s) {
  const auto basis = s.basis_elements();
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      const Element rest = reduce(s, multiply(basis[i], basis[j]));
      for (const auto& c : rest.coords()) worst = std::max(worst, c.magnitude());
    }
  return worst;
}

std::vector<Element> natural_basis(const Subspace& s) {
  if (!is_regular(s.algebra())) raise(Errc::NotRegular, "ambient algebra is not regular");
  if (!is_subalgebra(s)) raise(Errc::NotASubalgebra, "subspace is not closed under the product");
  auto basis = s.basis_elements();
  std::vector<Support> supports;
  for (const auto& u : basis) supports.push_back(support(u));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!multiply(basis[i], basis[j]).is_zero())
        raise(Errc::InvariantViolated, "RREF basis vectors with nonzero product");
      if (!supports[i].disjoint_from(supports[j]))
        raise(Errc::InvariantViolated, "RREF basis vectors with overlapping supports");
    }
  return basis;
}

}  // namespace evoalg
