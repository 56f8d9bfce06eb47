#ifndef EVOALG_SUBSPACE_HPP
#define EVOALG_SUBSPACE_HPP

#include <span>
#include <vector>

#include "evoalg/algebra.hpp"

namespace evoalg {

// A linear subspace of an evolution algebra, stored as its canonical RREF
// basis with no zero rows. Two subspaces are equal iff their bases are.
class Subspace {
 public:
  // Canonicalizes the rows of `spanning` (rows x dim).
  Subspace(EvolutionAlgebra algebra, const Matrix& spanning);

  const EvolutionAlgebra& algebra() const noexcept { return algebra_; }
  const Matrix& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const std::vector<std::size_t>& pivot_cols() const noexcept { return pivots_; }

  Element basis_element(std::size_t r) const;
  std::vector<Element> basis_elements() const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  EvolutionAlgebra algebra_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// Canonical ordering: by dimension, then entry-wise on the RREF basis.
bool canonical_less(const Subspace& a, const Subspace& b);
void sort_canonical(std::vector<Subspace>& subspaces);

Subspace canonicalize(const EvolutionAlgebra& algebra, std::span<const Element> spanning);
bool contains(const Subspace& s, const Element& u);
// Remainder of u after reduction against the RREF basis.
Element reduce(const Subspace& s, const Element& u);
bool is_subalgebra(const Subspace& s);
// Largest coordinate magnitude left after reducing each basis product
// u_i u_j against the subspace; zero exactly when the subspace is closed.
double closure_residual(const Subspace& s);

// For a subalgebra of a regular algebra the RREF basis is already a natural
// basis. Throws NotRegular / NotASubalgebra, and InvariantViolated if the
// returned basis fails the zero-product or disjoint-support checks.
std::vector<Element> natural_basis(const Subspace& s);

}  // namespace evoalg

#endif
