// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

using namespace evoalg;
using namespace evoalg::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

std::vector<Subspace> codim1_subspaces(const EvolutionAlgebra& a) {
  std::vector<Subspace> out;
  for (const auto& f : enumerate_codim1(a).subalgebras) out.push_back(f.subspace);
  return out;
}

std::vector<Subspace> oracle_of_dim(const EvolutionAlgebra& a, std::size_t m) {
  std::vector<Subspace> out;
  for (auto& s : enumerate_subalgebras(a))
    if (s.dim() == m) out.push_back(std::move(s));
  return out;
}

std::uint64_t gl_order(std::uint64_t q, unsigned n) {
  std::uint64_t qn = 1, order = 1, qi = 1;
  for (unsigned k = 0; k < n; ++k) qn *= q;
  for (unsigned i = 0; i < n; ++i, qi *= q) order *= qn - qi;
  return order;
}

Outcome crit_plastic_q() {
  Outcome o;
  const auto a = plastic();
  const auto report = enumerate_codim1(a);
  o.require(report.subalgebras.empty(), "expected 0 subalgebras");
  o.require(report.pairs.size() == 3, "expected 3 pair diagnostics");
  if (!o.ok) return o;
  const auto& d12 = report.pairs[0];
  const auto& d13 = report.pairs[1];
  const auto& d23 = report.pairs[2];
  o.require(d12.rank == 1 && d13.rank == 1 && d23.rank == 0, "pair ranks differ from {1, 1, 0}");
  o.require(d12.eq3 && d12.eq3->sides.lhs.render() == "5" && d12.eq3->sides.rhs.render() == "-2" &&
                !d12.eq3->sides.holds(),
            "pair (1,2) rank-one values are not 5 vs -2");
  o.require(d13.eq3 && d13.eq3->sides.lhs.render() == "3" && d13.eq3->sides.rhs.render() == "0" &&
                !d13.eq3->sides.holds(),
            "pair (1,3) rank-one values are not 3 vs 0");
  o.require(d23.cubic && d23.cubic->cubic.render("x") == "x^3 - x - 1", "pair (2,3) cubic is not x^3 - x - 1");
  o.require(d23.cubic && d23.cubic->roots.empty(), "pair (2,3) cubic has a rational nonzero root");
  std::ostringstream s;
  s << "0 subalgebras; ranks 1,1,0; 5 != -2, 3 != 0; x^3 - x - 1 without rational roots";
  if (o.ok) o.detail = s.str();
  return o;
}

Outcome crit_plastic_r() {
  Outcome o;
  const double tol = 1e-9;
  const auto a = plastic(FieldSpec::approx_reals(tol));
  const auto report = enumerate_codim1(a);
  o.require(report.subalgebras.size() == 1, "expected exactly one subalgebra");
  if (!o.ok) return o;
  const auto& f = report.subalgebras[0];
  o.require(f.p == 1 && f.q == 2, "found for a pair other than (2,3)");
  const auto* root = std::get_if<RankZeroRoot>(&f.how);
  o.require(root != nullptr, "not a rank-zero root case");
  if (!o.ok) return o;
  const double lambda = root->lambda.to_double();
  o.require(lambda >= 1.3247 && lambda <= 1.3248, "lambda outside [1.3247, 1.3248]");
  const double cubic = std::fabs(lambda * lambda * lambda - lambda - 1.0);
  o.require(cubic <= tol, "|lambda^3 - lambda - 1| > 1e-9");
  const Element v = vec(a, {0, 1, 0}) + root->lambda * vec(a, {0, 0, 1});
  o.require(contains(f.subspace, v) && contains(f.subspace, a.basis_vector(0)), "subspace is not span{e_1, e_2 + lambda e_3}");
  const double residual = closure_residual(f.subspace);
  o.require(residual <= tol, "closure residual above tol");
  if (o.ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "lambda = %.12f, |cubic| = %.1e, closure residual = %.1e", lambda, cubic, residual);
    o.detail = buf;
  }
  return o;
}

Outcome crit_rank_two_pair() {
  Outcome o;
  const auto a = rank_two_pair();
  o.require(!determinant(a.structure()).is_zero(), "completion is singular");
  o.require(cofactor_det(a.structure()) == determinant(a.structure()), "determinant disagrees with cofactor expansion");
  const auto ps = pair_submatrix(a, 2, 3);
  o.require(ps.rank == 2, "rank of the (3,4) submatrix is not 2");
  o.require(codim1_for_pair(a, 2, 3).empty(), "pair (3,4) produced a subalgebra");
  o.require(corollary6_necessary(a, 2, 3), "necessary condition fails for pair (3,4)");
  if (o.ok) o.detail = "det = " + determinant(a.structure()).render() + ", rank 2, no subalgebra, necessary condition holds";
  return o;
}

Outcome crit_nilpotent() {
  Outcome o;
  for (std::uint64_t p : {2u, 3u}) {
    const FieldSpec F = FieldSpec::prime_field(p);
    const auto a = testing::nilpotent(F);
    o.require(!is_regular(a), "nilpotent algebra reported regular");
    std::vector<Subspace> proper;
    for (auto& s : enumerate_subalgebras(a))
      if (s.dim() > 0 && s.dim() < 3) proper.push_back(std::move(s));
    o.require(keys_of(proper) == keys_of({span_of(a, {{0, 0, 1}}), span_of(a, {{0, 1, 0}, {0, 0, 1}})}),
              "proper nonzero subalgebras over F_" + std::to_string(p) + " differ");
  }
  if (o.ok) o.detail = "F_2 and F_3: {span{e_3}, span{e_2,e_3}}, not regular";
  return o;
}

Outcome crit_natural_bases() {
  Outcome o;
  const FieldSpec F2 = FieldSpec::prime_field(2);
  std::size_t regular = 0, checked = 0, failures = 0;
  for (const auto& a : all_algebras(F2, 3)) {
    if (cofactor_det(a.structure()).is_zero()) continue;
    ++regular;
    for (const auto& s : enumerate_subalgebras(a)) {
      ++checked;
      const auto rows = s.basis_elements();
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
          if (!multiply(rows[i], rows[j]).is_zero() || !support(rows[i]).disjoint_from(support(rows[j]))) ++failures;
    }
  }
  o.require(regular == 168 && gl_order(2, 3) == 168, "regular count is not |GL(3,2)| = 168");
  o.require(failures == 0, std::to_string(failures) + " basis pairs violate the natural-basis property");
  if (o.ok) o.detail = "168 algebras, " + std::to_string(checked) + " subalgebras, 0 failures";
  return o;
}

Outcome crit_completeness() {
  Outcome o;
  std::size_t algebras = 0, discrepancies = 0, found = 0;
  auto compare = [&](const EvolutionAlgebra& a) {
    ++algebras;
    const auto mine = keys_of(codim1_subspaces(a));
    found += mine.size();
    if (mine != keys_of(oracle_of_dim(a, a.dim() - 1))) ++discrepancies;
  };
  const FieldSpec F2 = FieldSpec::prime_field(2), F3 = FieldSpec::prime_field(3);
  for (const auto& a : all_algebras(F2, 3))
    if (!cofactor_det(a.structure()).is_zero()) compare(a);
  std::mt19937_64 rng(20260601);
  for (int t = 0; t < 500; ++t) compare(random_regular_algebra(F3, 3, rng));
  for (int t = 0; t < 500; ++t) compare(random_regular_algebra(F2, 4, rng));
  o.require(discrepancies == 0, std::to_string(discrepancies) + " algebras disagree with the oracle");
  if (o.ok)
    o.detail = std::to_string(algebras) + " algebras (168 + 500 + 500), " + std::to_string(found) +
               " subalgebras, 0 discrepancies";
  return o;
}

Outcome crit_onedim() {
  Outcome o;
  std::size_t algebras = 0, discrepancies = 0;
  auto check = [&](const EvolutionAlgebra& a) {
    ++algebras;
    const std::size_t n = a.dim();
    const std::uint64_t p = a.spec().modulus();
    std::size_t solutions = 0;
    for_each_vector(p, n, [&](const std::vector<long>& c) {
      const Element x = vec(a, c);
      if (!x.is_zero() && onedim_residual(a, x).is_zero()) ++solutions;
    });
    const auto lines = oracle_of_dim(a, 1);
    if (solutions != lines.size() || keys_of(solve_onedim(a)) != keys_of(lines)) ++discrepancies;
  };
  for (std::uint64_t p : {2u, 3u})
    for (std::size_t n = 1; n <= 3; ++n) {
      const FieldSpec F = FieldSpec::prime_field(p);
      if (p == 3 && n == 3) {
        std::mt19937_64 rng(7);
        for (int t = 0; t < 300; ++t) check(random_regular_algebra(F, n, rng));
        continue;
      }
      for (const auto& a : all_algebras(F, n))
        if (!cofactor_det(a.structure()).is_zero()) check(a);
    }
  o.require(discrepancies == 0, std::to_string(discrepancies) + " algebras disagree");
  if (o.ok) o.detail = std::to_string(algebras) + " regular algebras over F_2/F_3, dim <= 3, 0 discrepancies";
  return o;
}

Outcome crit_dimension2() {
  Outcome o;
  const FieldSpec Q = FieldSpec::rationals();
  const auto swap = algebra_of(Q, {{0, 1}, {1, 0}});
  const auto id = identity_algebra(Q, 2);
  const auto s = solve_onedim(swap);
  const auto t = solve_onedim(id);
  o.require(keys_of(s) == keys_of({span_of(swap, {{1, 1}})}), "swap algebra lines differ from {span{e_1+e_2}}");
  o.require(keys_of(t) == keys_of({span_of(id, {{1, 0}}), span_of(id, {{0, 1}}), span_of(id, {{1, 1}})}),
            "identity lines differ from {span{e_1}, span{e_2}, span{e_1+e_2}}");
  for (const auto& line : s) o.require(is_subalgebra(line), "returned line is not closed");
  for (const auto& line : t) o.require(is_subalgebra(line), "returned line is not closed");
  if (o.ok) o.detail = "swap: 1 line, identity: 3 lines, all closed";
  return o;
}

// Matrix over R whose entries are the rational matrix entries.
Matrix as_reals(const Matrix& m, const FieldSpec& R) {
  Matrix out(R, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Scalar::parse(m(r, c).render(), R);
  return out;
}

bool close_subspace(const Subspace& exact, const Subspace& approx) {
  if (exact.dim() != approx.dim()) return false;
  for (std::size_t r = 0; r < exact.dim(); ++r)
    for (std::size_t c = 0; c < exact.basis().cols(); ++c)
      if (std::fabs(exact.basis()(r, c).to_double() - approx.basis()(r, c).to_double()) > 1e-6) return false;
  return true;
}

Outcome crit_hygiene() {
  Outcome o;
  const FieldSpec Q = FieldSpec::rationals();
  const FieldSpec R = FieldSpec::approx_reals(1e-9);
  std::mt19937_64 rng(99);
  // Sparse entries so that rational subalgebras actually occur.
  std::discrete_distribution<int> pick({6, 1, 1, 1, 1, 1});
  const long values[] = {0, 1, -1, 2, -2, 3};
  std::size_t algebras = 0, rational = 0, extras = 0;
  while (algebras < 100) {
    std::vector<std::vector<long>> rows(3, std::vector<long>(3));
    for (auto& row : rows)
      for (auto& x : row) x = values[pick(rng)];
    const auto aq = algebra_of(Q, rows);
    if (!is_regular(aq)) continue;
    ++algebras;
    const auto ar = build_algebra(R, as_reals(aq.structure(), R));
    const auto q_found = enumerate_codim1(aq).subalgebras;
    const auto r_found = enumerate_codim1(ar).subalgebras;
    rational += q_found.size();
    for (const auto& fq : q_found) {
      bool present = false;
      for (const auto& fr : r_found) present = present || close_subspace(fq.subspace, fr.subspace);
      o.require(present, "a rational subalgebra is missing from the real results");
    }
    for (const auto& fr : r_found) {
      bool matched = false;
      for (const auto& fq : q_found) matched = matched || close_subspace(fq.subspace, fr.subspace);
      if (matched) continue;
      ++extras;
      const auto* root = std::get_if<RankZeroRoot>(&fr.how);
      o.require(root != nullptr && root->provenance == RootProvenance::Irrational,
                "a real-only subalgebra lacks irrational-root provenance");
    }
  }
  if (o.ok)
    o.detail = "100 algebras, " + std::to_string(rational) + " rational subalgebras all recovered, " +
               std::to_string(extras) + " real-only extras all irrational";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Plastic-number algebra over Q: no codimension-one subalgebras, exact diagnostics", 1.0, crit_plastic_q},
      {2, "Plastic-number algebra over R: one subalgebra from the real root of x^3 - x - 1", 1.0, crit_plastic_r},
      {3, "Rank-two pair: necessary condition without sufficiency", 1.0, crit_rank_two_pair},
      {4, "Nilpotent algebra: subalgebras span{e_3}, span{e_2,e_3}", 1.0, crit_nilpotent},
      {5, "Natural RREF bases over all 168 regular F_2 dim-3 algebras", 60.0, crit_natural_bases},
      {6, "Codimension-one enumeration matches the oracle", 300.0, crit_completeness},
      {7, "One-dimensional subalgebras match the residual system", 0.0, crit_onedim},
      {8, "Dimension two closed form", 1.0, crit_dimension2},
      {9, "Real results contain the rational ones; extras are irrational", 0.0, crit_hygiene},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.budget_s > 0 && secs > c.budget_s) {
      o.ok = false;
      o.detail = "over time budget of " + std::to_string(c.budget_s) + " s";
    }
    failed += !o.ok;
    std::printf("%s  [%d] %s (%.3f s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
