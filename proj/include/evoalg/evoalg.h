/*
 * C interface to the evoalg library.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Functions return an evo_status; on failure a
 * one-line message is available from evo_last_error() on the calling thread.
 * Strings returned by accessors are owned by the handle they came from and
 * stay valid until that handle is freed.
 *
 * Basis indices are 0-based throughout this interface.
 */
#ifndef EVOALG_EVOALG_H
#define EVOALG_EVOALG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EVOALG_BUILDING_LIBRARY)
#    define EVO_API __declspec(dllexport)
#  else
#    define EVO_API __declspec(dllimport)
#  endif
#else
#  define EVO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum evo_status {
  EVO_OK = 0,
  EVO_ERR_INVALID_ARGUMENT,
  EVO_ERR_INVALID_FIELD_SPEC,
  EVO_ERR_MALFORMED_SCALAR,
  EVO_ERR_ZERO_DENOMINATOR,
  EVO_ERR_DECIMAL_IN_EXACT_FIELD,
  EVO_ERR_INVERSION_OF_ZERO,
  EVO_ERR_MIXED_FIELD_SPECS,
  EVO_ERR_NON_FINITE_VALUE,
  EVO_ERR_IDENTICALLY_ZERO_POLYNOMIAL,
  EVO_ERR_NON_SQUARE,
  EVO_ERR_SINGULAR_MATRIX,
  EVO_ERR_DIMENSION_MISMATCH,
  EVO_ERR_NON_SQUARE_STRUCTURE,
  EVO_ERR_MIXED_ALGEBRAS,
  EVO_ERR_NOT_REGULAR,
  EVO_ERR_NOT_A_SUBALGEBRA,
  EVO_ERR_UNSUPPORTED_FIELD_DIMENSION,
  EVO_ERR_BAD_INDICES,
  EVO_ERR_DIMENSION_TOO_SMALL,
  EVO_ERR_ZERO_PAIR,
  EVO_ERR_TOO_LARGE,
  EVO_ERR_NOT_FINITE_FIELD,
  EVO_ERR_INVARIANT_VIOLATED,
  EVO_ERR_INTERNAL
} evo_status;

typedef enum evo_field_kind {
  EVO_FIELD_RATIONALS = 0,
  EVO_FIELD_PRIME = 1,
  EVO_FIELD_REALS = 2
} evo_field_kind;

typedef enum evo_case {
  EVO_CASE_RANK_ONE_ROW = 0,
  EVO_CASE_RANK_ZERO_ROOT = 1,
  EVO_CASE_DROP_Q = 2,
  EVO_CASE_DROP_P = 3
} evo_case;

typedef enum evo_root_provenance {
  EVO_ROOT_EXACT = 0,
  EVO_ROOT_RATIONAL = 1,
  EVO_ROOT_IRRATIONAL = 2,
  EVO_ROOT_UNKNOWN = 3
} evo_root_provenance;

typedef struct evo_algebra evo_algebra;
typedef struct evo_subspace evo_subspace;
typedef struct evo_subspace_list evo_subspace_list;
typedef struct evo_vector evo_vector;
typedef struct evo_codim1_report evo_codim1_report;

/* Message for the last failure on this thread ("" if none). */
EVO_API const char* evo_last_error(void);
/* Stable identifier such as "NotRegular". */
EVO_API const char* evo_status_name(evo_status status);

/* ---- algebras ---------------------------------------------------------- */

/* entries: dim*dim scalar strings, row-major; row i = coordinates of e_i^2.
 * p is read for EVO_FIELD_PRIME only, tol for EVO_FIELD_REALS only. */
EVO_API evo_status evo_algebra_create(evo_field_kind kind, uint64_t p, double tol, size_t dim,
                                      const char* const* entries, evo_algebra** out);
EVO_API void evo_algebra_free(evo_algebra* algebra);

EVO_API size_t evo_algebra_dim(const evo_algebra* algebra);
EVO_API evo_field_kind evo_algebra_field_kind(const evo_algebra* algebra);
EVO_API uint64_t evo_algebra_modulus(const evo_algebra* algebra);
EVO_API double evo_algebra_tol(const evo_algebra* algebra);
/* "Q", "F_5", "R(tol=...)". */
EVO_API const char* evo_algebra_field_name(const evo_algebra* algebra);
/* Canonical rendering of the structure constant a_ij, or NULL if out of range. */
EVO_API const char* evo_algebra_entry(const evo_algebra* algebra, size_t i, size_t j);

EVO_API evo_status evo_algebra_determinant(const evo_algebra* algebra, const char** out);
EVO_API evo_status evo_algebra_is_regular(const evo_algebra* algebra, int* out);

/* ---- vectors ------------------------------------------------------------ */

EVO_API void evo_vector_free(evo_vector* vector);
EVO_API size_t evo_vector_size(const evo_vector* vector);
EVO_API const char* evo_vector_entry(const evo_vector* vector, size_t i);
EVO_API int evo_vector_is_zero(const evo_vector* vector);

/* x_i^2 - ((M^t)^{-1} x)_i for the dim coordinates in `coords`. */
EVO_API evo_status evo_onedim_residual(const evo_algebra* algebra, const char* const* coords, evo_vector** out);

/* ---- subspaces ---------------------------------------------------------- */

/* Span of `count` vectors of dim coordinates each, row-major. */
EVO_API evo_status evo_subspace_create(const evo_algebra* algebra, const char* const* coords, size_t count,
                                       evo_subspace** out);
EVO_API void evo_subspace_free(evo_subspace* subspace);

EVO_API size_t evo_subspace_dim(const evo_subspace* subspace);
EVO_API size_t evo_subspace_ambient_dim(const evo_subspace* subspace);
/* Entry (row, col) of the canonical RREF basis. */
EVO_API const char* evo_subspace_entry(const evo_subspace* subspace, size_t row, size_t col);
/* Support of basis row `row`: indices written to *indices, count to *count. */
EVO_API evo_status evo_subspace_support(const evo_subspace* subspace, size_t row, const size_t** indices,
                                        size_t* count);
EVO_API evo_status evo_subspace_is_subalgebra(const evo_subspace* subspace, int* out);
/* EVO_OK when the RREF basis is a natural basis of the subalgebra; otherwise
 * EVO_ERR_NOT_REGULAR or EVO_ERR_NOT_A_SUBALGEBRA. */
EVO_API evo_status evo_subspace_natural_basis(const evo_subspace* subspace);

EVO_API void evo_subspace_list_free(evo_subspace_list* list);
EVO_API size_t evo_subspace_list_size(const evo_subspace_list* list);
/* Borrowed; valid while the list lives. */
EVO_API const evo_subspace* evo_subspace_list_get(const evo_subspace_list* list, size_t k);

EVO_API evo_status evo_solve_onedim(const evo_algebra* algebra, evo_subspace_list** out);
/* max_count = 0 selects the default limit. */
EVO_API evo_status evo_enumerate_subalgebras(const evo_algebra* algebra, uint64_t max_count,
                                             evo_subspace_list** out);

/* ---- codimension-one report --------------------------------------------- */

EVO_API evo_status evo_enumerate_codim1(const evo_algebra* algebra, evo_codim1_report** out);
EVO_API void evo_codim1_report_free(evo_codim1_report* report);

EVO_API size_t evo_codim1_count(const evo_codim1_report* report);
EVO_API const evo_subspace* evo_codim1_subspace(const evo_codim1_report* report, size_t k);
EVO_API evo_status evo_codim1_provenance(const evo_codim1_report* report, size_t k, size_t* p, size_t* q,
                                         evo_case* how);
/* RankOneRow: alpha, beta. RankZeroRoot: lambda in *first, *second = NULL.
 * Drop cases: both NULL. */
EVO_API evo_status evo_codim1_case_values(const evo_codim1_report* report, size_t k, const char** first,
                                          const char** second);
EVO_API evo_root_provenance evo_codim1_root_provenance(const evo_codim1_report* report, size_t k);

EVO_API size_t evo_codim1_pair_count(const evo_codim1_report* report);
EVO_API evo_status evo_codim1_pair_info(const evo_codim1_report* report, size_t k, size_t* p, size_t* q,
                                        size_t* rank, int* corollary6, size_t* found);
/* Entry (row, col) of the pair submatrix; rows = dim - 2, cols = 2. */
EVO_API const char* evo_codim1_pair_submatrix_entry(const evo_codim1_report* report, size_t k, size_t row,
                                                    size_t col);
/* Rank-one pairs: *present = 1 and the row, both sides and the verdict. */
EVO_API evo_status evo_codim1_pair_eq3(const evo_codim1_report* report, size_t k, int* present,
                                       const char** alpha, const char** beta, const char** lhs,
                                       const char** rhs, int* holds);
/* Rank-zero pairs: *present = 1, the cubic as text and its four coefficients
 * c3, c2, c1, c0, and whether a_pq / a_qp vanish. */
EVO_API evo_status evo_codim1_pair_cubic(const evo_codim1_report* report, size_t k, int* present,
                                         const char** text, const char* coeffs[4], int* a_pq_zero,
                                         int* a_qp_zero);
EVO_API size_t evo_codim1_pair_root_count(const evo_codim1_report* report, size_t k);
EVO_API evo_status evo_codim1_pair_root(const evo_codim1_report* report, size_t k, size_t r, const char** lambda,
                                        evo_root_provenance* provenance);
EVO_API size_t evo_codim1_pair_near_miss_count(const evo_codim1_report* report, size_t k);
EVO_API const char* evo_codim1_pair_near_miss(const evo_codim1_report* report, size_t k, size_t r);
EVO_API size_t evo_codim1_pair_rejected_count(const evo_codim1_report* report, size_t k);
EVO_API const char* evo_codim1_pair_rejected(const evo_codim1_report* report, size_t k, size_t r);

#ifdef __cplusplus
}
#endif

#endif
