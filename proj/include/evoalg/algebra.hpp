#ifndef EVOALG_ALGEBRA_HPP
#define EVOALG_ALGEBRA_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "evoalg/matrix.hpp"

namespace evoalg {

class Element;

// Finite-dimensional evolution algebra given by its structure matrix relative
// to a natural basis e_0..e_{n-1}: row i holds the coordinates of e_i^2.
// Copies share the same immutable structure.
class EvolutionAlgebra {
 public:
  explicit EvolutionAlgebra(Matrix structure);

  const FieldSpec& spec() const noexcept { return structure_->spec(); }
  std::size_t dim() const noexcept { return structure_->rows(); }
  const Matrix& structure() const noexcept { return *structure_; }
  // Structure constant a_ij (0-based).
  const Scalar& constant(std::size_t i, std::size_t j) const { return (*structure_)(i, j); }

  Element element(std::vector<Scalar> coords) const;
  Element basis_vector(std::size_t i) const;
  Element zero() const;

  // Same instance, or equal field and structure matrix.
  bool same_as(const EvolutionAlgebra& other) const;

 private:
  std::shared_ptr<const Matrix> structure_;
};

EvolutionAlgebra build_algebra(const FieldSpec& spec, Matrix structure);

class Element {
 public:
  Element(EvolutionAlgebra algebra, std::vector<Scalar> coords);

  const EvolutionAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const noexcept { return coords_.size(); }

  bool is_zero() const;

  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  friend Element operator*(const Scalar& k, const Element& u);

  friend bool operator==(const Element& a, const Element& b);

 private:
  EvolutionAlgebra algebra_;
  std::vector<Scalar> coords_;
};

// Strictly increasing 0-based indices of the nonzero coordinates.
struct Support {
  std::vector<std::size_t> indices;

  bool disjoint_from(const Support& other) const;
  friend bool operator==(const Support&, const Support&) = default;
};

// uv = sum_i u_i v_i e_i^2.
Element multiply(const Element& u, const Element& v);
Element square(const Element& u);
bool is_regular(const EvolutionAlgebra& a);
Support support(const Element& u);

void require_same_algebra(const EvolutionAlgebra& a, const EvolutionAlgebra& b);

}  // namespace evoalg

#endif
