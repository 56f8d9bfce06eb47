#include "evoalg/evoalg.h"

#include <exception>
#include <memory>
#include <string>
#include <vector>

#include "evoalg/finder.hpp"
#include "evoalg/oracle.hpp"

using namespace evoalg;

struct evo_algebra {
  EvolutionAlgebra algebra;
  std::string field_name;
  std::vector<std::string> entries;
  std::string determinant;
  bool regular;
};

struct evo_subspace {
  Subspace subspace;
  std::vector<std::string> entries;
  std::vector<std::vector<std::size_t>> supports;

  explicit evo_subspace(Subspace s) : subspace(std::move(s)) {
    const Matrix& b = subspace.basis();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) entries.push_back(b(r, c).render());
      supports.push_back(support(subspace.basis_element(r)).indices);
    }
  }
};

struct evo_subspace_list {
  std::vector<evo_subspace> items;
};

struct evo_vector {
  std::vector<std::string> entries;
  bool zero;
};

namespace {

struct FoundRecord {
  std::size_t p, q;
  evo_case how;
  std::string first, second;
  bool has_first = false, has_second = false;
  evo_root_provenance provenance = EVO_ROOT_EXACT;
};

struct RootRecord {
  std::string lambda;
  evo_root_provenance provenance;
};

struct PairRecord {
  std::size_t p, q, rank, found;
  bool corollary6;
  std::size_t sub_rows;
  std::vector<std::string> submatrix;
  bool has_eq3 = false;
  std::string alpha, beta, lhs, rhs;
  bool holds = false;
  bool has_cubic = false;
  std::string cubic_text;
  std::string coeffs[4];
  bool a_pq_zero = false, a_qp_zero = false;
  std::vector<RootRecord> roots;
  std::vector<std::string> near_misses;
  std::vector<std::string> rejected;
};

}  // namespace

struct evo_codim1_report {
  std::vector<evo_subspace> subspaces;
  std::vector<FoundRecord> found;
  std::vector<PairRecord> pairs;
};

namespace {

thread_local std::string last_error;

evo_status status_of(Errc code) {
  switch (code) {
    case Errc::InvalidFieldSpec: return EVO_ERR_INVALID_FIELD_SPEC;
    case Errc::MalformedScalar: return EVO_ERR_MALFORMED_SCALAR;
    case Errc::ZeroDenominator: return EVO_ERR_ZERO_DENOMINATOR;
    case Errc::DecimalInExactField: return EVO_ERR_DECIMAL_IN_EXACT_FIELD;
    case Errc::InversionOfZero: return EVO_ERR_INVERSION_OF_ZERO;
    case Errc::MixedFieldSpecs: return EVO_ERR_MIXED_FIELD_SPECS;
    case Errc::NonFiniteValue: return EVO_ERR_NON_FINITE_VALUE;
    case Errc::IdenticallyZeroPolynomial: return EVO_ERR_IDENTICALLY_ZERO_POLYNOMIAL;
    case Errc::NonSquare: return EVO_ERR_NON_SQUARE;
    case Errc::SingularMatrix: return EVO_ERR_SINGULAR_MATRIX;
    case Errc::DimensionMismatch: return EVO_ERR_DIMENSION_MISMATCH;
    case Errc::NonSquareStructure: return EVO_ERR_NON_SQUARE_STRUCTURE;
    case Errc::MixedAlgebras: return EVO_ERR_MIXED_ALGEBRAS;
    case Errc::NotRegular: return EVO_ERR_NOT_REGULAR;
    case Errc::NotASubalgebra: return EVO_ERR_NOT_A_SUBALGEBRA;
    case Errc::UnsupportedFieldDimension: return EVO_ERR_UNSUPPORTED_FIELD_DIMENSION;
    case Errc::BadIndices: return EVO_ERR_BAD_INDICES;
    case Errc::DimensionTooSmall: return EVO_ERR_DIMENSION_TOO_SMALL;
    case Errc::ZeroPair: return EVO_ERR_ZERO_PAIR;
    case Errc::TooLarge: return EVO_ERR_TOO_LARGE;
    case Errc::NotFiniteField: return EVO_ERR_NOT_FINITE_FIELD;
    case Errc::InvariantViolated: return EVO_ERR_INVARIANT_VIOLATED;
  }
  return EVO_ERR_INTERNAL;
}

evo_status fail(evo_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
evo_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return EVO_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(EVO_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(EVO_ERR_INTERNAL, "unknown failure");
  }
}

evo_status null_argument(const char* fn) { return fail(EVO_ERR_INVALID_ARGUMENT, std::string(fn) + ": null argument"); }

std::vector<Scalar> parse_coords(const EvolutionAlgebra& a, const char* const* coords, std::size_t offset) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const char* text = coords[offset + i];
    if (text == nullptr) raise(Errc::MalformedScalar, "null coordinate");
    out.push_back(Scalar::parse(text, a.spec()));
  }
  return out;
}

evo_root_provenance c_provenance(RootProvenance p) {
  switch (p) {
    case RootProvenance::Exact: return EVO_ROOT_EXACT;
    case RootProvenance::Rational: return EVO_ROOT_RATIONAL;
    case RootProvenance::Irrational: return EVO_ROOT_IRRATIONAL;
    case RootProvenance::Unknown: return EVO_ROOT_UNKNOWN;
  }
  return EVO_ROOT_UNKNOWN;
}

FoundRecord record_of(const CodimOneFound& f) {
  FoundRecord rec{f.p, f.q, EVO_CASE_DROP_Q, {}, {}};
  if (const auto* row = std::get_if<RankOneRow>(&f.how)) {
    rec.how = EVO_CASE_RANK_ONE_ROW;
    rec.first = row->alpha.render();
    rec.second = row->beta.render();
    rec.has_first = rec.has_second = true;
  } else if (const auto* root = std::get_if<RankZeroRoot>(&f.how)) {
    rec.how = EVO_CASE_RANK_ZERO_ROOT;
    rec.first = root->lambda.render();
    rec.has_first = true;
    rec.provenance = c_provenance(root->provenance);
  } else if (std::holds_alternative<DropP>(f.how)) {
    rec.how = EVO_CASE_DROP_P;
  }
  return rec;
}

PairRecord record_of(const PairDiagnostic& d) {
  PairRecord rec{};
  rec.p = d.p;
  rec.q = d.q;
  rec.rank = d.rank;
  rec.found = d.found;
  rec.corollary6 = d.corollary6;
  rec.sub_rows = d.submatrix.rows();
  for (std::size_t r = 0; r < d.submatrix.rows(); ++r)
    for (std::size_t c = 0; c < 2; ++c) rec.submatrix.push_back(d.submatrix(r, c).render());
  if (d.eq3) {
    rec.has_eq3 = true;
    rec.alpha = d.eq3->alpha.render();
    rec.beta = d.eq3->beta.render();
    rec.lhs = d.eq3->sides.lhs.render();
    rec.rhs = d.eq3->sides.rhs.render();
    rec.holds = d.eq3->sides.holds();
  }
  if (d.cubic) {
    rec.has_cubic = true;
    rec.cubic_text = d.cubic->cubic.render();
    rec.coeffs[0] = d.cubic->cubic.c3.render();
    rec.coeffs[1] = d.cubic->cubic.c2.render();
    rec.coeffs[2] = d.cubic->cubic.c1.render();
    rec.coeffs[3] = d.cubic->cubic.c0.render();
    rec.a_pq_zero = d.cubic->a_pq_zero;
    rec.a_qp_zero = d.cubic->a_qp_zero;
    for (const auto& r : d.cubic->roots) rec.roots.push_back({r.lambda.render(), c_provenance(r.provenance)});
    for (const auto& m : d.cubic->near_misses) rec.near_misses.push_back(m.render());
  }
  rec.rejected = d.rejected;
  return rec;
}

const PairRecord* pair_at(const evo_codim1_report* report, std::size_t k) {
  if (report == nullptr || k >= report->pairs.size()) return nullptr;
  return &report->pairs[k];
}

}  // namespace

extern "C" {

const char* evo_last_error(void) { return last_error.c_str(); }

const char* evo_status_name(evo_status status) {
  switch (status) {
    case EVO_OK: return "Ok";
    case EVO_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case EVO_ERR_INTERNAL: return "Internal";
    default: break;
  }
  static const Errc all[] = {
      Errc::InvalidFieldSpec,  Errc::MalformedScalar,    Errc::ZeroDenominator,
      Errc::DecimalInExactField, Errc::InversionOfZero,  Errc::MixedFieldSpecs,
      Errc::NonFiniteValue,    Errc::IdenticallyZeroPolynomial, Errc::NonSquare,
      Errc::SingularMatrix,    Errc::DimensionMismatch,  Errc::NonSquareStructure,
      Errc::MixedAlgebras,     Errc::NotRegular,         Errc::NotASubalgebra,
      Errc::UnsupportedFieldDimension, Errc::BadIndices, Errc::DimensionTooSmall,
      Errc::ZeroPair,          Errc::TooLarge,           Errc::NotFiniteField,
      Errc::InvariantViolated};
  for (Errc e : all)
    if (status_of(e) == status) return errc_name(e).data();
  return "Unknown";
}

// ---- algebras --------------------------------------------------------------

evo_status evo_algebra_create(evo_field_kind kind, uint64_t p, double tol, size_t dim, const char* const* entries,
                              evo_algebra** out) {
  if (out == nullptr || (entries == nullptr && dim > 0)) return null_argument("evo_algebra_create");
  *out = nullptr;
  return guarded([&] {
    FieldSpec spec = FieldSpec::rationals();
    switch (kind) {
      case EVO_FIELD_RATIONALS: break;
      case EVO_FIELD_PRIME: spec = FieldSpec::prime_field(p); break;
      case EVO_FIELD_REALS: spec = FieldSpec::approx_reals(tol); break;
      default: raise(Errc::InvalidFieldSpec, "unknown field kind");
    }
    Matrix m(spec, dim, dim);
    for (std::size_t i = 0; i < dim * dim; ++i) {
      if (entries[i] == nullptr) raise(Errc::MalformedScalar, "null matrix entry");
      m(i / dim, i % dim) = Scalar::parse(entries[i], spec);
    }
    EvolutionAlgebra a = build_algebra(spec, std::move(m));
    const Scalar det = determinant(a.structure());
    auto handle = std::make_unique<evo_algebra>(evo_algebra{a, spec.describe(), {}, det.render(), !det.is_zero()});
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) handle->entries.push_back(a.constant(i, j).render());
    *out = handle.release();
  });
}

void evo_algebra_free(evo_algebra* algebra) { delete algebra; }

size_t evo_algebra_dim(const evo_algebra* algebra) { return algebra ? algebra->algebra.dim() : 0; }

evo_field_kind evo_algebra_field_kind(const evo_algebra* algebra) {
  if (!algebra) return EVO_FIELD_RATIONALS;
  switch (algebra->algebra.spec().kind()) {
    case FieldKind::Rationals: return EVO_FIELD_RATIONALS;
    case FieldKind::PrimeField: return EVO_FIELD_PRIME;
    case FieldKind::ApproxReals: return EVO_FIELD_REALS;
  }
  return EVO_FIELD_RATIONALS;
}

uint64_t evo_algebra_modulus(const evo_algebra* algebra) { return algebra ? algebra->algebra.spec().modulus() : 0; }
double evo_algebra_tol(const evo_algebra* algebra) { return algebra ? algebra->algebra.spec().tol() : 0.0; }
const char* evo_algebra_field_name(const evo_algebra* algebra) { return algebra ? algebra->field_name.c_str() : nullptr; }

const char* evo_algebra_entry(const evo_algebra* algebra, size_t i, size_t j) {
  if (!algebra) return nullptr;
  const std::size_t n = algebra->algebra.dim();
  if (i >= n || j >= n) return nullptr;
  return algebra->entries[i * n + j].c_str();
}

evo_status evo_algebra_determinant(const evo_algebra* algebra, const char** out) {
  if (!algebra || !out) return null_argument("evo_algebra_determinant");
  *out = algebra->determinant.c_str();
  last_error.clear();
  return EVO_OK;
}

evo_status evo_algebra_is_regular(const evo_algebra* algebra, int* out) {
  if (!algebra || !out) return null_argument("evo_algebra_is_regular");
  *out = algebra->regular ? 1 : 0;
  last_error.clear();
  return EVO_OK;
}

// ---- vectors ---------------------------------------------------------------

void evo_vector_free(evo_vector* vector) { delete vector; }
size_t evo_vector_size(const evo_vector* vector) { return vector ? vector->entries.size() : 0; }

const char* evo_vector_entry(const evo_vector* vector, size_t i) {
  if (!vector || i >= vector->entries.size()) return nullptr;
  return vector->entries[i].c_str();
}

int evo_vector_is_zero(const evo_vector* vector) { return vector && vector->zero ? 1 : 0; }

evo_status evo_onedim_residual(const evo_algebra* algebra, const char* const* coords, evo_vector** out) {
  if (!algebra || !coords || !out) return null_argument("evo_onedim_residual");
  *out = nullptr;
  return guarded([&] {
    const EvolutionAlgebra& a = algebra->algebra;
    const Element r = onedim_residual(a, a.element(parse_coords(a, coords, 0)));
    auto handle = std::make_unique<evo_vector>(evo_vector{{}, r.is_zero()});
    for (const auto& c : r.coords()) handle->entries.push_back(c.render());
    *out = handle.release();
  });
}

// ---- subspaces -------------------------------------------------------------

evo_status evo_subspace_create(const evo_algebra* algebra, const char* const* coords, size_t count,
                               evo_subspace** out) {
  if (!algebra || !out || (!coords && count > 0)) return null_argument("evo_subspace_create");
  *out = nullptr;
  return guarded([&] {
    const EvolutionAlgebra& a = algebra->algebra;
    std::vector<Element> span;
    for (std::size_t k = 0; k < count; ++k) span.push_back(a.element(parse_coords(a, coords, k * a.dim())));
    *out = new evo_subspace(canonicalize(a, span));
  });
}

void evo_subspace_free(evo_subspace* subspace) { delete subspace; }
size_t evo_subspace_dim(const evo_subspace* subspace) { return subspace ? subspace->subspace.dim() : 0; }

size_t evo_subspace_ambient_dim(const evo_subspace* subspace) {
  return subspace ? subspace->subspace.algebra().dim() : 0;
}

const char* evo_subspace_entry(const evo_subspace* subspace, size_t row, size_t col) {
  if (!subspace) return nullptr;
  const std::size_t n = subspace->subspace.algebra().dim();
  if (row >= subspace->subspace.dim() || col >= n) return nullptr;
  return subspace->entries[row * n + col].c_str();
}

evo_status evo_subspace_support(const evo_subspace* subspace, size_t row, const size_t** indices, size_t* count) {
  if (!subspace || !indices || !count) return null_argument("evo_subspace_support");
  if (row >= subspace->supports.size()) return fail(EVO_ERR_BAD_INDICES, "row out of range");
  *indices = subspace->supports[row].data();
  *count = subspace->supports[row].size();
  last_error.clear();
  return EVO_OK;
}

evo_status evo_subspace_is_subalgebra(const evo_subspace* subspace, int* out) {
  if (!subspace || !out) return null_argument("evo_subspace_is_subalgebra");
  return guarded([&] { *out = is_subalgebra(subspace->subspace) ? 1 : 0; });
}

evo_status evo_subspace_natural_basis(const evo_subspace* subspace) {
  if (!subspace) return null_argument("evo_subspace_natural_basis");
  return guarded([&] { natural_basis(subspace->subspace); });
}

void evo_subspace_list_free(evo_subspace_list* list) { delete list; }
size_t evo_subspace_list_size(const evo_subspace_list* list) { return list ? list->items.size() : 0; }

const evo_subspace* evo_subspace_list_get(const evo_subspace_list* list, size_t k) {
  if (!list || k >= list->items.size()) return nullptr;
  return &list->items[k];
}

evo_status evo_solve_onedim(const evo_algebra* algebra, evo_subspace_list** out) {
  if (!algebra || !out) return null_argument("evo_solve_onedim");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<evo_subspace_list>(evo_subspace_list{});
    for (auto& s : solve_onedim(algebra->algebra)) handle->items.emplace_back(std::move(s));
    *out = handle.release();
  });
}

evo_status evo_enumerate_subalgebras(const evo_algebra* algebra, uint64_t max_count, evo_subspace_list** out) {
  if (!algebra || !out) return null_argument("evo_enumerate_subalgebras");
  *out = nullptr;
  return guarded([&] {
    const std::uint64_t limit = max_count == 0 ? kDefaultMaxSubspaces : max_count;
    auto subs = enumerate_subalgebras(algebra->algebra, limit);
    auto handle = std::make_unique<evo_subspace_list>(evo_subspace_list{});
    for (auto& s : subs) handle->items.emplace_back(std::move(s));
    *out = handle.release();
  });
}

// ---- codimension-one report -------------------------------------------------

evo_status evo_enumerate_codim1(const evo_algebra* algebra, evo_codim1_report** out) {
  if (!algebra || !out) return null_argument("evo_enumerate_codim1");
  *out = nullptr;
  return guarded([&] {
    const SubalgebraReport report = enumerate_codim1(algebra->algebra);
    auto handle = std::make_unique<evo_codim1_report>();
    for (const auto& f : report.subalgebras) {
      handle->subspaces.emplace_back(f.subspace);
      handle->found.push_back(record_of(f));
    }
    for (const auto& d : report.pairs) handle->pairs.push_back(record_of(d));
    *out = handle.release();
  });
}

void evo_codim1_report_free(evo_codim1_report* report) { delete report; }
size_t evo_codim1_count(const evo_codim1_report* report) { return report ? report->found.size() : 0; }

const evo_subspace* evo_codim1_subspace(const evo_codim1_report* report, size_t k) {
  if (!report || k >= report->subspaces.size()) return nullptr;
  return &report->subspaces[k];
}

evo_status evo_codim1_provenance(const evo_codim1_report* report, size_t k, size_t* p, size_t* q, evo_case* how) {
  if (!report || !p || !q || !how) return null_argument("evo_codim1_provenance");
  if (k >= report->found.size()) return fail(EVO_ERR_BAD_INDICES, "entry out of range");
  *p = report->found[k].p;
  *q = report->found[k].q;
  *how = report->found[k].how;
  last_error.clear();
  return EVO_OK;
}

evo_status evo_codim1_case_values(const evo_codim1_report* report, size_t k, const char** first,
                                  const char** second) {
  if (!report || !first || !second) return null_argument("evo_codim1_case_values");
  if (k >= report->found.size()) return fail(EVO_ERR_BAD_INDICES, "entry out of range");
  const FoundRecord& f = report->found[k];
  *first = f.has_first ? f.first.c_str() : nullptr;
  *second = f.has_second ? f.second.c_str() : nullptr;
  last_error.clear();
  return EVO_OK;
}

evo_root_provenance evo_codim1_root_provenance(const evo_codim1_report* report, size_t k) {
  if (!report || k >= report->found.size()) return EVO_ROOT_UNKNOWN;
  return report->found[k].provenance;
}

size_t evo_codim1_pair_count(const evo_codim1_report* report) { return report ? report->pairs.size() : 0; }

evo_status evo_codim1_pair_info(const evo_codim1_report* report, size_t k, size_t* p, size_t* q, size_t* rank,
                                int* corollary6, size_t* found) {
  const PairRecord* rec = pair_at(report, k);
  if (!rec) return fail(EVO_ERR_BAD_INDICES, "pair out of range");
  if (p) *p = rec->p;
  if (q) *q = rec->q;
  if (rank) *rank = rec->rank;
  if (corollary6) *corollary6 = rec->corollary6 ? 1 : 0;
  if (found) *found = rec->found;
  last_error.clear();
  return EVO_OK;
}

const char* evo_codim1_pair_submatrix_entry(const evo_codim1_report* report, size_t k, size_t row, size_t col) {
  const PairRecord* rec = pair_at(report, k);
  if (!rec || row >= rec->sub_rows || col >= 2) return nullptr;
  return rec->submatrix[row * 2 + col].c_str();
}

evo_status evo_codim1_pair_eq3(const evo_codim1_report* report, size_t k, int* present, const char** alpha,
                               const char** beta, const char** lhs, const char** rhs, int* holds) {
  const PairRecord* rec = pair_at(report, k);
  if (!rec) return fail(EVO_ERR_BAD_INDICES, "pair out of range");
  if (!present) return null_argument("evo_codim1_pair_eq3");
  *present = rec->has_eq3 ? 1 : 0;
  if (alpha) *alpha = rec->has_eq3 ? rec->alpha.c_str() : nullptr;
  if (beta) *beta = rec->has_eq3 ? rec->beta.c_str() : nullptr;
  if (lhs) *lhs = rec->has_eq3 ? rec->lhs.c_str() : nullptr;
  if (rhs) *rhs = rec->has_eq3 ? rec->rhs.c_str() : nullptr;
  if (holds) *holds = rec->holds ? 1 : 0;
  last_error.clear();
  return EVO_OK;
}

evo_status evo_codim1_pair_cubic(const evo_codim1_report* report, size_t k, int* present, const char** text,
                                 const char* coeffs[4], int* a_pq_zero, int* a_qp_zero) {
  const PairRecord* rec = pair_at(report, k);
  if (!rec) return fail(EVO_ERR_BAD_INDICES, "pair out of range");
  if (!present) return null_argument("evo_codim1_pair_cubic");
  *present = rec->has_cubic ? 1 : 0;
  if (text) *text = rec->has_cubic ? rec->cubic_text.c_str() : nullptr;
  if (coeffs)
    for (int i = 0; i < 4; ++i) coeffs[i] = rec->has_cubic ? rec->coeffs[i].c_str() : nullptr;
  if (a_pq_zero) *a_pq_zero = rec->a_pq_zero ? 1 : 0;
  if (a_qp_zero) *a_qp_zero = rec->a_qp_zero ? 1 : 0;
  last_error.clear();
  return EVO_OK;
}

size_t evo_codim1_pair_root_count(const evo_codim1_report* report, size_t k) {
  const PairRecord* rec = pair_at(report, k);
  return rec ? rec->roots.size() : 0;
}

evo_status evo_codim1_pair_root(const evo_codim1_report* report, size_t k, size_t r, const char** lambda,
                                evo_root_provenance* provenance) {
  const PairRecord* rec = pair_at(report, k);
  if (!rec || r >= rec->roots.size()) return fail(EVO_ERR_BAD_INDICES, "root out of range");
  if (lambda) *lambda = rec->roots[r].lambda.c_str();
  if (provenance) *provenance = rec->roots[r].provenance;
  last_error.clear();
  return EVO_OK;
}

size_t evo_codim1_pair_near_miss_count(const evo_codim1_report* report, size_t k) {
  const PairRecord* rec = pair_at(report, k);
  return rec ? rec->near_misses.size() : 0;
}

const char* evo_codim1_pair_near_miss(const evo_codim1_report* report, size_t k, size_t r) {
  const PairRecord* rec = pair_at(report, k);
  if (!rec || r >= rec->near_misses.size()) return nullptr;
  return rec->near_misses[r].c_str();
}

size_t evo_codim1_pair_rejected_count(const evo_codim1_report* report, size_t k) {
  const PairRecord* rec = pair_at(report, k);
  return rec ? rec->rejected.size() : 0;
}

const char* evo_codim1_pair_rejected(const evo_codim1_report* report, size_t k, size_t r) {
  const PairRecord* rec = pair_at(report, k);
  if (!rec || r >= rec->rejected.size()) return nullptr;
  return rec->rejected[r].c_str();
}

}  // extern "C"
