#include "evoalg/algebra.hpp"

#include <algorithm>

namespace evoalg {

EvolutionAlgebra::EvolutionAlgebra(Matrix structure) {
  if (!structure.is_square())
    raise(Errc::NonSquareStructure, "structure matrix is " + std::to_string(structure.rows()) + "x" +
                                        std::to_string(structure.cols()));
  structure_ = std::make_shared<const Matrix>(std::move(structure));
}

EvolutionAlgebra build_algebra(const FieldSpec& spec, Matrix structure) {
  if (!(structure.spec() == spec))
    raise(Errc::MixedFieldSpecs, "structure matrix over " + structure.spec().describe() +
                                     ", algebra over " + spec.describe());
  return EvolutionAlgebra(std::move(structure));
}

Element EvolutionAlgebra::element(std::vector<Scalar> coords) const { return Element(*this, std::move(coords)); }

Element EvolutionAlgebra::basis_vector(std::size_t i) const {
  if (i >= dim()) raise(Errc::BadIndices, "basis index out of range");
  std::vector<Scalar> coords(dim(), Scalar::zero(spec()));
  coords[i] = Scalar::one(spec());
  return Element(*this, std::move(coords));
}

Element EvolutionAlgebra::zero() const {
  return Element(*this, std::vector<Scalar>(dim(), Scalar::zero(spec())));
}

bool EvolutionAlgebra::same_as(const EvolutionAlgebra& other) const {
  return structure_ == other.structure_ || *structure_ == *other.structure_;
}

void require_same_algebra(const EvolutionAlgebra& a, const EvolutionAlgebra& b) {
  if (!a.same_as(b)) raise(Errc::MixedAlgebras, "operands belong to different algebras");
}

// ---------------------------------------------------------------------------

Element::Element(EvolutionAlgebra algebra, std::vector<Scalar> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != algebra_.dim())
    raise(Errc::DimensionMismatch, "element has " + std::to_string(coords_.size()) +
                                       " coordinates, algebra dimension is " + std::to_string(algebra_.dim()));
  for (const auto& c : coords_)
    if (!(c.spec() == algebra_.spec())) raise(Errc::MixedFieldSpecs, "coordinate from " + c.spec().describe());
}

bool Element::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Element Element::operator+(const Element& rhs) const {
  require_same_algebra(algebra_, rhs.algebra_);
  std::vector<Scalar> out = coords_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs.coords_[i];
  return Element(algebra_, std::move(out));
}

Element Element::operator-(const Element& rhs) const {
  require_same_algebra(algebra_, rhs.algebra_);
  std::vector<Scalar> out = coords_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= rhs.coords_[i];
  return Element(algebra_, std::move(out));
}

Element operator*(const Scalar& k, const Element& u) {
  std::vector<Scalar> out = u.coords_;
  for (auto& c : out) c = k * c;
  return Element(u.algebra_, std::move(out));
}

bool operator==(const Element& a, const Element& b) {
  return a.algebra_.same_as(b.algebra_) && a.coords_ == b.coords_;
}

bool Support::disjoint_from(const Support& other) const {
  auto a = indices.begin();
  auto b = other.indices.begin();
  while (a != indices.end() && b != other.indices.end()) {
    if (*a == *b) return false;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return true;
}

// ---------------------------------------------------------------------------

Element multiply(const Element& u, const Element& v) {
  require_same_algebra(u.algebra(), v.algebra());
  const EvolutionAlgebra& a = u.algebra();
  const bool exact = a.spec().is_exact();
  std::vector<Scalar> out(a.dim(), Scalar::zero(a.spec()));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Scalar w = u[i] * v[i];
    if (exact && w.is_zero()) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) out[j] += w * a.constant(i, j);
  }
  return Element(a, std::move(out));
}

Element square(const Element& u) { return multiply(u, u); }

bool is_regular(const EvolutionAlgebra& a) { return !determinant(a.structure()).is_zero(); }

Support support(const Element& u) {
  Support s;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero()) s.indices.push_back(i);
  return s;
}

}  // namespace evoalg
