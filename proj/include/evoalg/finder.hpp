#ifndef EVOALG_FINDER_HPP
#define EVOALG_FINDER_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "evoalg/subspace.hpp"

namespace evoalg {

// Indices in this header are 0-based; user-facing output adds one.

// Columns p, q of the structure matrix with rows p, q removed, (n-2) x 2.
struct PairSubmatrix {
  std::size_t p;
  std::size_t q;
  Matrix m;
  std::size_t rank;
};

PairSubmatrix pair_submatrix(const EvolutionAlgebra& a, std::size_t p, std::size_t q);

struct Eq3Sides {
  Scalar lhs;  // alpha^2 beta a_pp + beta^3 a_qp
  Scalar rhs;  // alpha^3 a_pq + alpha beta^2 a_qq
  bool holds() const { return lhs == rhs; }
};

Eq3Sides eq3_sides(const EvolutionAlgebra& a, std::size_t p, std::size_t q, const Scalar& alpha,
                   const Scalar& beta);
bool eq3_holds(const EvolutionAlgebra& a, std::size_t p, std::size_t q, const Scalar& alpha,
               const Scalar& beta);

// a_qp x^3 - a_qq x^2 + a_pp x - a_pq.
LowDegreePoly eq4_cubic(const EvolutionAlgebra& a, std::size_t p, std::size_t q);

// For every i outside {p, q}: the row (a_ip, a_iq) satisfies the rank-one
// closure identity.
bool corollary6_necessary(const EvolutionAlgebra& a, std::size_t p, std::size_t q);

// How a real root was classified against the exact rational roots of the
// same polynomial (its double coefficients read as exact rationals).
enum class RootProvenance { Exact, Rational, Irrational, Unknown };

struct RankOneRow {
  Scalar alpha;  // first nonzero row of the pair submatrix, as stored
  Scalar beta;
};
struct RankZeroRoot {
  Scalar lambda;
  RootProvenance provenance;
};
struct DropQ {};  // span{e_i : i != q}
struct DropP {};  // span{e_i : i != p}
using FoundCase = std::variant<RankOneRow, RankZeroRoot, DropQ, DropP>;

struct CodimOneFound {
  Subspace subspace;
  std::size_t p;
  std::size_t q;
  FoundCase how;
};

struct Eq3Check {
  Scalar alpha;
  Scalar beta;
  Eq3Sides sides;
};

struct RootInfo {
  Scalar lambda;
  RootProvenance provenance;
};

struct CubicCheck {
  LowDegreePoly cubic;
  std::vector<RootInfo> roots;
  std::vector<Scalar> near_misses;
  bool a_pq_zero;
  bool a_qp_zero;
};

struct PairDiagnostic {
  std::size_t p;
  std::size_t q;
  Matrix submatrix;
  std::size_t rank;
  bool corollary6;
  std::optional<Eq3Check> eq3;      // rank one
  std::optional<CubicCheck> cubic;  // rank zero
  std::size_t found = 0;
  // ApproxReals candidates that failed numerical closure re-verification.
  std::vector<std::string> rejected;
};

struct PairAnalysis {
  std::vector<CodimOneFound> found;
  PairDiagnostic diagnostic;
};

struct SubalgebraReport {
  // Distinct subspaces, canonically ordered; provenance is the first pair
  // (in lexicographic (p, q) order) that produced each one.
  std::vector<CodimOneFound> subalgebras;
  std::vector<PairDiagnostic> pairs;
};

// x_i^2 - ((M^t)^{-1} x)_i; zero exactly for solutions of the one-dimensional
// subalgebra system.
Element onedim_residual(const EvolutionAlgebra& a, const Element& x);

// All one-dimensional subalgebras. Prime fields: exhaustive scan of the
// projective points. Dimension two (any field): closed form through the
// rank-zero cubic. Anything else raises UnsupportedFieldDimension.
std::vector<Subspace> solve_onedim(const EvolutionAlgebra& a);

PairAnalysis analyze_pair(const EvolutionAlgebra& a, std::size_t p, std::size_t q);
std::vector<CodimOneFound> codim1_for_pair(const EvolutionAlgebra& a, std::size_t p, std::size_t q);
SubalgebraReport enumerate_codim1(const EvolutionAlgebra& a);

std::string_view provenance_name(RootProvenance p) noexcept;

}  // namespace evoalg

#endif
