#include "evoalg/finder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace evoalg {

namespace {

void require_regular(const EvolutionAlgebra& a) {
  if (!is_regular(a)) raise(Errc::NotRegular, "algebra is not regular (singular structure matrix)");
}

void require_pair(const EvolutionAlgebra& a, std::size_t p, std::size_t q) {
  if (p == q || p >= a.dim() || q >= a.dim())
    raise(Errc::BadIndices, "need two distinct basis indices below " + std::to_string(a.dim()));
}

void require_dim3(const EvolutionAlgebra& a) {
  if (a.dim() < 3) raise(Errc::DimensionTooSmall, "pair conditions need dimension at least 3");
}

PairSubmatrix pair_submatrix_any_dim(const EvolutionAlgebra& a, std::size_t p, std::size_t q) {
  if (p > q) std::swap(p, q);
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (i != p && i != q) rows.push_back(i);
  const std::size_t cols[2] = {p, q};
  Matrix m = a.structure().submatrix(rows, cols);
  const std::size_t r = rank(m);
  return {p, q, std::move(m), r};
}

// Best rational approximation of x with denominator at most max_den, by
// continued fractions; accepted only if it reproduces x to a few ulps.
std::optional<mpq_class> recover_rational(double x, long max_den = 1000000) {
  if (x == std::floor(x) && std::abs(x) < 1e15) return mpq_class(x);
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double rest = x;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(rest);
    if (std::abs(a) > 1e12) break;
    const long ai = static_cast<long>(a);
    const long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    const double approx = static_cast<double>(h1) / static_cast<double>(k1);
    if (std::abs(approx - x) <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) {
      mpq_class q(h1, k1);
      q.canonicalize();
      return q;
    }
    const double frac = rest - a;
    if (frac == 0.0) break;
    rest = 1.0 / frac;
  }
  return std::nullopt;
}

// Classifies real roots against the exact rational roots of the cubic whose
// coefficients are the rational reconstructions of the real ones.
std::vector<RootInfo> classify_real_roots(const LowDegreePoly& cubic, const std::vector<Scalar>& roots) {
  std::vector<RootInfo> out;
  std::optional<std::vector<Scalar>> exact;
  const auto c3 = recover_rational(cubic.c3.real()), c2 = recover_rational(cubic.c2.real()),
             c1 = recover_rational(cubic.c1.real()), c0 = recover_rational(cubic.c0.real());
  if (c3 && c2 && c1 && c0) {
    const FieldSpec q = FieldSpec::rationals();
    const LowDegreePoly exact_cubic(Scalar::from_rational(q, *c3), Scalar::from_rational(q, *c2),
                                    Scalar::from_rational(q, *c1), Scalar::from_rational(q, *c0));
    try {
      exact = nonzero_roots(exact_cubic);
    } catch (const Error&) {
      exact.reset();
    }
  }
  for (const auto& r : roots) {
    RootProvenance prov = RootProvenance::Unknown;
    if (exact) {
      prov = RootProvenance::Irrational;
      for (const auto& e : *exact)
        if (std::abs(e.to_double() - r.real()) <= cubic.spec().tol()) prov = RootProvenance::Rational;
    }
    out.push_back({r, prov});
  }
  return out;
}

// span{e_i : i not in {p, q}} plus the given extra vectors.
Subspace shape_two_subspace(const EvolutionAlgebra& a, std::size_t p, std::size_t q,
                            const std::vector<Element>& extra) {
  std::vector<Element> span;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (i != p && i != q) span.push_back(a.basis_vector(i));
  span.insert(span.end(), extra.begin(), extra.end());
  return canonicalize(a, span);
}

Element pair_vector(const EvolutionAlgebra& a, std::size_t p, std::size_t q, const Scalar& alpha,
                    const Scalar& beta) {
  std::vector<Scalar> coords(a.dim(), Scalar::zero(a.spec()));
  coords[p] = alpha;
  coords[q] = beta;
  return a.element(std::move(coords));
}

std::string describe_case(const FoundCase& how) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, RankOneRow>)
          return "row (" + c.alpha.render() + ", " + c.beta.render() + ")";
        else if constexpr (std::is_same_v<T, RankZeroRoot>)
          return "root " + c.lambda.render();
        else if constexpr (std::is_same_v<T, DropQ>)
          return "drop q";
        else
          return "drop p";
      },
      how);
}

// Shared by the public pair analysis (dim >= 3) and the dimension-two path,
// where the pair submatrix is empty and the rank-zero branch applies.
PairAnalysis analyze_pair_any_dim(const EvolutionAlgebra& a, std::size_t p, std::size_t q) {
  PairSubmatrix sub = pair_submatrix_any_dim(a, p, q);
  p = sub.p;
  q = sub.q;
  const FieldSpec& spec = a.spec();
  PairAnalysis out{{}, PairDiagnostic{p, q, sub.m, sub.rank, true, std::nullopt, std::nullopt, 0, {}}};
  out.diagnostic.corollary6 = a.dim() < 3 || corollary6_necessary(a, p, q);

  std::vector<std::pair<Subspace, FoundCase>> candidates;
  if (sub.rank == 1) {
    std::size_t r = 0;
    while (sub.m(r, 0).is_zero() && sub.m(r, 1).is_zero()) ++r;
    const Scalar alpha = sub.m(r, 0), beta = sub.m(r, 1);
    const Eq3Sides sides = eq3_sides(a, p, q, alpha, beta);
    out.diagnostic.eq3 = Eq3Check{alpha, beta, sides};
    if (sides.holds()) {
      const Scalar lead = alpha.is_zero() ? beta : alpha;
      const Scalar inv = lead.inverse();
      Subspace s = shape_two_subspace(a, p, q, {pair_vector(a, p, q, alpha * inv, beta * inv)});
      candidates.emplace_back(std::move(s), RankOneRow{alpha, beta});
    }
  } else if (sub.rank == 0) {
    const LowDegreePoly cubic = eq4_cubic(a, p, q);
    const RootScan scan = scan_nonzero_roots(cubic);
    CubicCheck check{cubic, {}, scan.near_misses, a.constant(p, q).is_zero(), a.constant(q, p).is_zero()};
    if (spec.is_exact()) {
      for (const auto& r : scan.roots) check.roots.push_back({r, RootProvenance::Exact});
    } else {
      check.roots = classify_real_roots(cubic, scan.roots);
    }
    for (const auto& root : check.roots) {
      Subspace s = shape_two_subspace(a, p, q, {pair_vector(a, p, q, Scalar::one(spec), root.lambda)});
      candidates.emplace_back(std::move(s), RankZeroRoot{root.lambda, root.provenance});
    }
    if (check.a_pq_zero) candidates.emplace_back(shape_two_subspace(a, p, q, {a.basis_vector(p)}), DropQ{});
    if (check.a_qp_zero) candidates.emplace_back(shape_two_subspace(a, p, q, {a.basis_vector(q)}), DropP{});
    out.diagnostic.cubic = std::move(check);
  }

  const double scale = std::max(1.0, a.structure().max_magnitude());
  for (auto& [s, how] : candidates) {
    if (spec.is_exact()) {
      if (!is_subalgebra(s))
        raise(Errc::InvariantViolated, "pair (" + std::to_string(p + 1) + "," + std::to_string(q + 1) +
                                           ") produced a non-closed subspace via " + describe_case(how));
    } else {
      const double residual = closure_residual(s);
      if (residual > spec.tol() * scale) {
        out.diagnostic.rejected.push_back(describe_case(how) + ": closure residual " + std::to_string(residual));
        continue;
      }
    }
    out.found.push_back(CodimOneFound{std::move(s), p, q, std::move(how)});
  }
  out.diagnostic.found = out.found.size();
  return out;
}

}  // namespace

std::string_view provenance_name(RootProvenance p) noexcept {
  switch (p) {
    case RootProvenance::Exact: return "exact";
    case RootProvenance::Rational: return "rational";
    case RootProvenance::Irrational: return "irrational";
    case RootProvenance::Unknown: return "unknown";
  }
  return "unknown";
}

PairSubmatrix pair_submatrix(const EvolutionAlgebra& a, std::size_t p, std::size_t q) {
  require_dim3(a);
  require_pair(a, p, q);
  return pair_submatrix_any_dim(a, p, q);
}

Eq3Sides eq3_sides(const EvolutionAlgebra& a, std::size_t p, std::size_t q, const Scalar& alpha,
                   const Scalar& beta) {
  require_pair(a, p, q);
  if (alpha.is_zero() && beta.is_zero()) raise(Errc::ZeroPair, "(alpha, beta) must not both vanish");
  const Scalar a2 = alpha * alpha, b2 = beta * beta;
  return {a2 * beta * a.constant(p, p) + b2 * beta * a.constant(q, p),
          a2 * alpha * a.constant(p, q) + alpha * b2 * a.constant(q, q)};
}

bool eq3_holds(const EvolutionAlgebra& a, std::size_t p, std::size_t q, const Scalar& alpha,
               const Scalar& beta) {
  return eq3_sides(a, p, q, alpha, beta).holds();
}

LowDegreePoly eq4_cubic(const EvolutionAlgebra& a, std::size_t p, std::size_t q) {
  require_pair(a, p, q);
  return LowDegreePoly(a.constant(q, p), -a.constant(q, q), a.constant(p, p), -a.constant(p, q));
}

bool corollary6_necessary(const EvolutionAlgebra& a, std::size_t p, std::size_t q) {
  require_dim3(a);
  require_pair(a, p, q);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i == p || i == q) continue;
    const Scalar& x = a.constant(i, p);
    const Scalar& y = a.constant(i, q);
    const Scalar lhs = x * x * y * a.constant(p, p) + y * y * y * a.constant(q, p);
    const Scalar rhs = x * x * x * a.constant(p, q) + x * y * y * a.constant(q, q);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

Element onedim_residual(const EvolutionAlgebra& a, const Element& x) {
  require_same_algebra(a, x.algebra());
  require_regular(a);
  const Matrix inv = inverse(a.structure().transpose());
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Scalar r = x[i] * x[i];
    for (std::size_t j = 0; j < a.dim(); ++j) r -= inv(i, j) * x[j];
    out.push_back(std::move(r));
  }
  return a.element(std::move(out));
}

std::vector<Subspace> solve_onedim(const EvolutionAlgebra& a) {
  require_regular(a);
  const FieldSpec& spec = a.spec();
  const std::size_t n = a.dim();
  std::vector<Subspace> lines;
  if (n == 1) {
    lines.push_back(canonicalize(a, std::vector<Element>{a.basis_vector(0)}));
  } else if (n == 2) {
    for (auto& f : analyze_pair_any_dim(a, 0, 1).found) lines.push_back(std::move(f.subspace));
  } else if (spec.is_finite()) {
    const std::uint64_t p = spec.modulus();
    // Projective points: leading nonzero coordinate normalised to 1.
    double points = 0.0;
    for (std::size_t k = 0; k < n; ++k) points += std::pow(static_cast<double>(p), static_cast<double>(k));
    if (points > 1e7) raise(Errc::TooLarge, "too many projective points to scan");
    for (std::size_t lead = 0; lead < n; ++lead) {
      const std::size_t tail = n - lead - 1;
      std::vector<std::uint64_t> digits(tail, 0);
      while (true) {
        std::vector<Scalar> coords(n, Scalar::zero(spec));
        coords[lead] = Scalar::one(spec);
        for (std::size_t k = 0; k < tail; ++k)
          coords[lead + 1 + k] = Scalar::from_int(spec, static_cast<long>(digits[k]));
        const Subspace line = canonicalize(a, std::vector<Element>{a.element(std::move(coords))});
        if (is_subalgebra(line)) lines.push_back(line);
        std::size_t k = 0;
        while (k < tail && ++digits[k] == p) digits[k++] = 0;
        if (k == tail) break;
      }
    }
  } else {
    raise(Errc::UnsupportedFieldDimension,
          "one-dimensional subalgebras over " + spec.describe() + " are only solved in dimension <= 2");
  }
  sort_canonical(lines);
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

PairAnalysis analyze_pair(const EvolutionAlgebra& a, std::size_t p, std::size_t q) {
  require_dim3(a);
  require_pair(a, p, q);
  require_regular(a);
  return analyze_pair_any_dim(a, p, q);
}

std::vector<CodimOneFound> codim1_for_pair(const EvolutionAlgebra& a, std::size_t p, std::size_t q) {
  return analyze_pair(a, p, q).found;
}

SubalgebraReport enumerate_codim1(const EvolutionAlgebra& a) {
  if (a.dim() < 2) raise(Errc::DimensionTooSmall, "codimension-one subalgebras need dimension at least 2");
  require_regular(a);
  SubalgebraReport report;
  for (std::size_t p = 0; p < a.dim(); ++p)
    for (std::size_t q = p + 1; q < a.dim(); ++q) {
      PairAnalysis analysis = analyze_pair_any_dim(a, p, q);
      for (auto& f : analysis.found) {
        const bool seen = std::any_of(report.subalgebras.begin(), report.subalgebras.end(),
                                      [&](const CodimOneFound& g) { return g.subspace == f.subspace; });
        if (!seen) report.subalgebras.push_back(std::move(f));
      }
      report.pairs.push_back(std::move(analysis.diagnostic));
    }
  std::stable_sort(report.subalgebras.begin(), report.subalgebras.end(),
                   [](const CodimOneFound& x, const CodimOneFound& y) {
                     return canonical_less(x.subspace, y.subspace);
                   });
  return report;
}

}  // namespace evoalg
