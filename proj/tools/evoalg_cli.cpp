// evoalg: command-line front end over the C interface.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "evoalg/evoalg.h"

using nlohmann::ordered_json;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int exit_code;
  std::string message;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using AlgebraPtr = std::unique_ptr<evo_algebra, Deleter<evo_algebra, evo_algebra_free>>;
using SubspacePtr = std::unique_ptr<evo_subspace, Deleter<evo_subspace, evo_subspace_free>>;
using ListPtr = std::unique_ptr<evo_subspace_list, Deleter<evo_subspace_list, evo_subspace_list_free>>;
using VectorPtr = std::unique_ptr<evo_vector, Deleter<evo_vector, evo_vector_free>>;
using ReportPtr = std::unique_ptr<evo_codim1_report, Deleter<evo_codim1_report, evo_codim1_report_free>>;

bool is_input_error(evo_status s) {
  switch (s) {
    case EVO_ERR_INVALID_ARGUMENT:
    case EVO_ERR_INVALID_FIELD_SPEC:
    case EVO_ERR_MALFORMED_SCALAR:
    case EVO_ERR_ZERO_DENOMINATOR:
    case EVO_ERR_DECIMAL_IN_EXACT_FIELD:
    case EVO_ERR_NON_FINITE_VALUE:
    case EVO_ERR_DIMENSION_MISMATCH:
    case EVO_ERR_NON_SQUARE_STRUCTURE:
      return true;
    default:
      return false;
  }
}

// Library failures from parsing user input are usage errors; the rest are domain errors.
void check(evo_status s, bool from_input = false) {
  if (s == EVO_OK) return;
  const int code = from_input && is_input_error(s) ? kExitUsage : kExitDomain;
  throw Failure{code, std::string(evo_status_name(s)) + ": " + evo_last_error()};
}

[[noreturn]] void usage(const std::string& message) { throw Failure{kExitUsage, message}; }

// ---- input ----------------------------------------------------------------

struct AlgebraFile {
  evo_field_kind kind = EVO_FIELD_RATIONALS;
  std::uint64_t p = 0;
  double tol = 0.0;
  std::size_t dim = 0;
  std::vector<std::string> entries;
};

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  usage("matrix entries must be strings or integers");
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) usage("cannot read " + path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const ordered_json::parse_error& e) {
    usage(path + ": " + e.what());
  }
  AlgebraFile f;
  try {
    const auto& field = doc.at("field");
    const std::string kind = field.at("kind").get<std::string>();
    if (kind == "Q") {
      f.kind = EVO_FIELD_RATIONALS;
    } else if (kind == "Fp") {
      f.kind = EVO_FIELD_PRIME;
      f.p = field.at("p").get<std::uint64_t>();
    } else if (kind == "R") {
      f.kind = EVO_FIELD_REALS;
      f.tol = field.at("tol").get<double>();
    } else {
      usage(path + ": unknown field kind '" + kind + "'");
    }
    f.dim = doc.at("dim").get<std::size_t>();
    const auto& rows = doc.at("matrix");
    if (!rows.is_array() || rows.size() != f.dim) usage(path + ": matrix must have dim rows");
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != f.dim) usage(path + ": every matrix row must have dim entries");
      for (const auto& v : row) f.entries.push_back(scalar_text(v));
    }
  } catch (const ordered_json::exception& e) {
    usage(path + ": " + e.what());
  }
  return f;
}

AlgebraPtr load_algebra(const std::string& path) {
  const AlgebraFile f = read_algebra_file(path);
  std::vector<const char*> ptrs;
  for (const auto& s : f.entries) ptrs.push_back(s.c_str());
  evo_algebra* raw = nullptr;
  check(evo_algebra_create(f.kind, f.p, f.tol, f.dim, ptrs.data(), &raw), true);
  return AlgebraPtr(raw);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

std::vector<std::string> parse_vector(const std::string& text, std::size_t dim) {
  auto coords = split(text, ',');
  if (coords.size() != dim)
    usage("vector '" + text + "' has " + std::to_string(coords.size()) + " coordinates, expected " +
          std::to_string(dim));
  return coords;
}

SubspacePtr parse_span(const evo_algebra* alg, const std::string& text) {
  const std::size_t n = evo_algebra_dim(alg);
  std::vector<std::string> coords;
  std::size_t count = 0;
  for (const auto& v : split(text, ';')) {
    if (v.empty()) continue;
    for (auto& c : parse_vector(v, n)) coords.push_back(std::move(c));
    ++count;
  }
  std::vector<const char*> ptrs;
  for (const auto& s : coords) ptrs.push_back(s.c_str());
  evo_subspace* raw = nullptr;
  check(evo_subspace_create(alg, ptrs.data(), count, &raw), true);
  return SubspacePtr(raw);
}

// ---- rendering ------------------------------------------------------------

bool is_zero_text(const std::string& s) { return s == "0" || s == "-0"; }

std::string render_combination(const std::vector<std::string>& coords) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    std::string c = coords[i];
    if (is_zero_text(c)) continue;
    const bool negative = c[0] == '-';
    if (negative) c.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (c != "1") out += c + "*";
    out += "e_" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> subspace_row(const evo_subspace* s, std::size_t r) {
  std::vector<std::string> row;
  for (std::size_t c = 0; c < evo_subspace_ambient_dim(s); ++c) row.emplace_back(evo_subspace_entry(s, r, c));
  return row;
}

std::vector<std::size_t> subspace_support(const evo_subspace* s, std::size_t r) {
  const std::size_t* idx = nullptr;
  std::size_t count = 0;
  check(evo_subspace_support(s, r, &idx, &count));
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(idx[k] + 1);
  return out;
}

std::string render_subspace(const evo_subspace* s) {
  if (evo_subspace_dim(s) == 0) return "{0}";
  std::string out = "span{";
  for (std::size_t r = 0; r < evo_subspace_dim(s); ++r) {
    if (r > 0) out += ", ";
    out += render_combination(subspace_row(s, r));
  }
  return out + "}";
}

std::string render_set(const std::vector<std::size_t>& xs) {
  std::string out = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? ", " : "") + std::to_string(xs[k]);
  return out + "}";
}

ordered_json subspace_json(const evo_subspace* s) {
  ordered_json basis = ordered_json::array(), supports = ordered_json::array();
  for (std::size_t r = 0; r < evo_subspace_dim(s); ++r) {
    basis.push_back(subspace_row(s, r));
    supports.push_back(subspace_support(s, r));
  }
  return {{"dim", evo_subspace_dim(s)}, {"basis", basis}, {"supports", supports}};
}

std::string plural(std::size_t n, const std::string& noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

const char* case_name(evo_case c) {
  switch (c) {
    case EVO_CASE_RANK_ONE_ROW: return "RankOneRow";
    case EVO_CASE_RANK_ZERO_ROOT: return "RankZeroRoot";
    case EVO_CASE_DROP_Q: return "DropQ";
    case EVO_CASE_DROP_P: return "DropP";
  }
  return "?";
}

const char* provenance_name(evo_root_provenance p) {
  switch (p) {
    case EVO_ROOT_EXACT: return "exact";
    case EVO_ROOT_RATIONAL: return "rational";
    case EVO_ROOT_IRRATIONAL: return "irrational";
    case EVO_ROOT_UNKNOWN: return "unknown";
  }
  return "?";
}

std::string pair_label(std::size_t p, std::size_t q) {
  return "(" + std::to_string(p + 1) + "," + std::to_string(q + 1) + ")";
}

// ---- commands ---------------------------------------------------------------

struct Options {
  std::string file;
  bool json = false;
  bool verbose = false;
  std::string vector;
  std::string span;
  std::uint64_t max_size = 0;
};

std::string field_kind_name(evo_field_kind k) {
  switch (k) {
    case EVO_FIELD_RATIONALS: return "Q";
    case EVO_FIELD_PRIME: return "Fp";
    case EVO_FIELD_REALS: return "R";
  }
  return "?";
}

std::string cmd_info(const evo_algebra* alg, const Options& o) {
  const std::size_t n = evo_algebra_dim(alg);
  if (o.json) {
    ordered_json field = {{"kind", field_kind_name(evo_algebra_field_kind(alg))}};
    if (evo_algebra_field_kind(alg) == EVO_FIELD_PRIME) field["p"] = evo_algebra_modulus(alg);
    if (evo_algebra_field_kind(alg) == EVO_FIELD_REALS) field["tol"] = evo_algebra_tol(alg);
    ordered_json matrix = ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(evo_algebra_entry(alg, i, j));
      matrix.push_back(row);
    }
    return ordered_json{{"field", field}, {"dim", n}, {"matrix", matrix}}.dump(2) + "\n";
  }
  std::string out = "field: " + std::string(evo_algebra_field_name(alg)) + "\n";
  out += "dimension: " + std::to_string(n) + "\n";
  out += "structure matrix (row i = e_i^2):\n";
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < n; ++j) row.emplace_back(evo_algebra_entry(alg, i, j));
    out += "  e_" + std::to_string(i + 1) + "^2 = " + render_combination(row) + "\n";
  }
  return out;
}

std::string cmd_regular(const evo_algebra* alg, const Options& o) {
  int regular = 0;
  const char* det = nullptr;
  check(evo_algebra_is_regular(alg, &regular));
  check(evo_algebra_determinant(alg, &det));
  if (o.json) return ordered_json{{"regular", regular != 0}, {"determinant", det}}.dump(2) + "\n";
  return std::string(regular ? "regular" : "not regular") + " (det = " + det + ")\n";
}

ordered_json pair_json(const evo_codim1_report* rep, std::size_t k) {
  std::size_t p = 0, q = 0, rank = 0, found = 0;
  int cor6 = 0;
  check(evo_codim1_pair_info(rep, k, &p, &q, &rank, &cor6, &found));
  ordered_json sub = ordered_json::array();
  for (std::size_t r = 0; evo_codim1_pair_submatrix_entry(rep, k, r, 0) != nullptr; ++r)
    sub.push_back({evo_codim1_pair_submatrix_entry(rep, k, r, 0), evo_codim1_pair_submatrix_entry(rep, k, r, 1)});
  ordered_json j = {{"pair", {p + 1, q + 1}}, {"rank", rank}, {"submatrix", sub}, {"necessary_condition", cor6 != 0},
                    {"found", found}};
  int present = 0, holds = 0;
  const char *alpha, *beta, *lhs, *rhs;
  check(evo_codim1_pair_eq3(rep, k, &present, &alpha, &beta, &lhs, &rhs, &holds));
  if (present) j["rank_one_check"] = {{"row", {alpha, beta}}, {"lhs", lhs}, {"rhs", rhs}, {"holds", holds != 0}};
  const char* text = nullptr;
  const char* coeffs[4];
  int pq0 = 0, qp0 = 0;
  check(evo_codim1_pair_cubic(rep, k, &present, &text, coeffs, &pq0, &qp0));
  if (present) {
    ordered_json roots = ordered_json::array(), misses = ordered_json::array();
    for (std::size_t r = 0; r < evo_codim1_pair_root_count(rep, k); ++r) {
      const char* lambda = nullptr;
      evo_root_provenance prov;
      check(evo_codim1_pair_root(rep, k, r, &lambda, &prov));
      roots.push_back({{"lambda", lambda}, {"provenance", provenance_name(prov)}});
    }
    for (std::size_t r = 0; r < evo_codim1_pair_near_miss_count(rep, k); ++r)
      misses.push_back(evo_codim1_pair_near_miss(rep, k, r));
    j["cubic"] = {{"text", text},
                  {"coefficients", {coeffs[0], coeffs[1], coeffs[2], coeffs[3]}},
                  {"a_pq_zero", pq0 != 0},
                  {"a_qp_zero", qp0 != 0},
                  {"nonzero_roots", roots},
                  {"near_misses", misses}};
  }
  ordered_json rejected = ordered_json::array();
  for (std::size_t r = 0; r < evo_codim1_pair_rejected_count(rep, k); ++r)
    rejected.push_back(evo_codim1_pair_rejected(rep, k, r));
  j["rejected"] = rejected;
  return j;
}

std::string pair_text(const evo_codim1_report* rep, std::size_t k) {
  std::size_t p = 0, q = 0, rank = 0, found = 0;
  int cor6 = 0;
  check(evo_codim1_pair_info(rep, k, &p, &q, &rank, &cor6, &found));
  std::string out = "pair " + pair_label(p, q) + ": rank " + std::to_string(rank) + ", " +
                    plural(found, "subalgebra") + "\n";
  std::string rows;
  for (std::size_t r = 0; evo_codim1_pair_submatrix_entry(rep, k, r, 0) != nullptr; ++r)
    rows += std::string(r ? ", " : "") + "[" + evo_codim1_pair_submatrix_entry(rep, k, r, 0) + ", " +
            evo_codim1_pair_submatrix_entry(rep, k, r, 1) + "]";
  out += "  submatrix: [" + rows + "]\n";
  out += "  necessary condition on other rows: " + std::string(cor6 ? "holds" : "fails") + "\n";
  int present = 0, holds = 0;
  const char *alpha, *beta, *lhs, *rhs;
  check(evo_codim1_pair_eq3(rep, k, &present, &alpha, &beta, &lhs, &rhs, &holds));
  if (present)
    out += "  rank-one condition on row (" + std::string(alpha) + ", " + beta + "): lhs = " + lhs + ", rhs = " + rhs +
           " (" + (holds ? "holds" : "fails") + ")\n";
  const char* text = nullptr;
  const char* coeffs[4];
  int pq0 = 0, qp0 = 0;
  check(evo_codim1_pair_cubic(rep, k, &present, &text, coeffs, &pq0, &qp0));
  if (present) {
    out += "  cubic: " + std::string(text) + "\n";
    std::string roots;
    for (std::size_t r = 0; r < evo_codim1_pair_root_count(rep, k); ++r) {
      const char* lambda = nullptr;
      evo_root_provenance prov;
      check(evo_codim1_pair_root(rep, k, r, &lambda, &prov));
      roots += std::string(r ? ", " : "") + lambda;
      if (prov != EVO_ROOT_EXACT) roots += std::string(" (") + provenance_name(prov) + ")";
    }
    out += "  nonzero roots: " + (roots.empty() ? std::string("none") : roots) + "\n";
    for (std::size_t r = 0; r < evo_codim1_pair_near_miss_count(rep, k); ++r)
      out += std::string("  near miss: ") + evo_codim1_pair_near_miss(rep, k, r) + "\n";
    out += std::string("  a_pq = 0: ") + yes_no(pq0) + "; a_qp = 0: " + yes_no(qp0) + "\n";
  }
  for (std::size_t r = 0; r < evo_codim1_pair_rejected_count(rep, k); ++r)
    out += std::string("  rejected: ") + evo_codim1_pair_rejected(rep, k, r) + "\n";
  return out;
}

std::string cmd_codim1(const evo_algebra* alg, const Options& o) {
  evo_codim1_report* raw = nullptr;
  check(evo_enumerate_codim1(alg, &raw));
  const ReportPtr rep(raw);
  const std::size_t n = evo_codim1_count(rep.get());

  struct Found {
    std::size_t p, q;
    evo_case how;
    const char *first, *second;
    evo_root_provenance prov;
  };
  std::vector<Found> found;
  for (std::size_t k = 0; k < n; ++k) {
    Found f{};
    check(evo_codim1_provenance(rep.get(), k, &f.p, &f.q, &f.how));
    check(evo_codim1_case_values(rep.get(), k, &f.first, &f.second));
    f.prov = evo_codim1_root_provenance(rep.get(), k);
    found.push_back(f);
  }

  if (o.json) {
    ordered_json subs = ordered_json::array();
    for (std::size_t k = 0; k < n; ++k) {
      const Found& f = found[k];
      ordered_json j = subspace_json(evo_codim1_subspace(rep.get(), k));
      j["pair"] = {f.p + 1, f.q + 1};
      j["case"] = case_name(f.how);
      if (f.how == EVO_CASE_RANK_ONE_ROW) j["row"] = {f.first, f.second};
      if (f.how == EVO_CASE_RANK_ZERO_ROOT) {
        j["lambda"] = f.first;
        j["root_provenance"] = provenance_name(f.prov);
      }
      subs.push_back(j);
    }
    ordered_json doc = {{"count", n}, {"subalgebras", subs}};
    if (o.verbose) {
      ordered_json pairs = ordered_json::array();
      for (std::size_t k = 0; k < evo_codim1_pair_count(rep.get()); ++k) pairs.push_back(pair_json(rep.get(), k));
      doc["pairs"] = pairs;
    }
    return doc.dump(2) + "\n";
  }

  std::string out = plural(n, "codimension-one subalgebra") + "\n";
  for (std::size_t k = 0; k < n; ++k) {
    const Found& f = found[k];
    out += "  " + render_subspace(evo_codim1_subspace(rep.get(), k)) + "  [pair " + pair_label(f.p, f.q) + ", ";
    switch (f.how) {
      case EVO_CASE_RANK_ONE_ROW:
        out += "rank one, row (" + std::string(f.first) + ", " + f.second + ")";
        break;
      case EVO_CASE_RANK_ZERO_ROOT:
        out += "rank zero, root " + std::string(f.first);
        if (f.prov != EVO_ROOT_EXACT) out += std::string(" (") + provenance_name(f.prov) + ")";
        break;
      case EVO_CASE_DROP_Q:
        out += "rank zero, drop e_" + std::to_string(f.q + 1);
        break;
      case EVO_CASE_DROP_P:
        out += "rank zero, drop e_" + std::to_string(f.p + 1);
        break;
    }
    out += "]\n";
  }
  if (o.verbose)
    for (std::size_t k = 0; k < evo_codim1_pair_count(rep.get()); ++k) out += pair_text(rep.get(), k);
  return out;
}

std::string list_text(const evo_subspace_list* list) {
  std::string out;
  for (std::size_t k = 0; k < evo_subspace_list_size(list); ++k)
    out += "  " + render_subspace(evo_subspace_list_get(list, k)) + "\n";
  return out;
}

ordered_json list_json(const evo_subspace_list* list) {
  ordered_json arr = ordered_json::array();
  for (std::size_t k = 0; k < evo_subspace_list_size(list); ++k)
    arr.push_back(subspace_json(evo_subspace_list_get(list, k)));
  return arr;
}

std::string cmd_onedim(const evo_algebra* alg, const Options& o) {
  if (!o.vector.empty()) {
    const auto coords = parse_vector(o.vector, evo_algebra_dim(alg));
    std::vector<const char*> ptrs;
    for (const auto& c : coords) ptrs.push_back(c.c_str());
    evo_vector* raw = nullptr;
    check(evo_onedim_residual(alg, ptrs.data(), &raw), true);
    const VectorPtr res(raw);
    std::vector<std::string> entries;
    for (std::size_t i = 0; i < evo_vector_size(res.get()); ++i) entries.emplace_back(evo_vector_entry(res.get(), i));
    const bool zero = evo_vector_is_zero(res.get()) != 0;
    if (o.json) return ordered_json{{"residual", entries}, {"zero", zero}}.dump(2) + "\n";
    std::string out = "residual: (";
    for (std::size_t i = 0; i < entries.size(); ++i) out += (i ? ", " : "") + entries[i];
    return out + ")\nsolution: " + yes_no(zero) + "\n";
  }
  evo_subspace_list* raw = nullptr;
  check(evo_solve_onedim(alg, &raw));
  const ListPtr list(raw);
  if (o.json)
    return ordered_json{{"count", evo_subspace_list_size(list.get())}, {"subalgebras", list_json(list.get())}}.dump(2) +
           "\n";
  return plural(evo_subspace_list_size(list.get()), "one-dimensional subalgebra") + "\n" + list_text(list.get());
}

std::string basis_text(const evo_subspace* s) {
  std::string out;
  for (std::size_t r = 0; r < evo_subspace_dim(s); ++r)
    out += "  " + render_combination(subspace_row(s, r)) + "  support " + render_set(subspace_support(s, r)) + "\n";
  return out;
}

std::string cmd_verify(const evo_algebra* alg, const Options& o) {
  if (o.span.empty()) usage("verify requires --span");
  const SubspacePtr s = parse_span(alg, o.span);
  int closed = 0, regular = 0;
  check(evo_subspace_is_subalgebra(s.get(), &closed));
  check(evo_algebra_is_regular(alg, &regular));
  if (o.json) {
    ordered_json j = {{"subspace", subspace_json(s.get())}, {"subalgebra", closed != 0}};
    j["natural_basis"] = closed && regular ? subspace_json(s.get()) : ordered_json(nullptr);
    if (closed && regular) check(evo_subspace_natural_basis(s.get()));
    return j.dump(2) + "\n";
  }
  if (!closed) return "subalgebra: no\n";
  if (!regular) return "subalgebra: yes; natural basis: unavailable (ambient algebra not regular)\n";
  check(evo_subspace_natural_basis(s.get()));
  return "subalgebra: yes; natural basis:\n" + basis_text(s.get());
}

std::string cmd_natural_basis(const evo_algebra* alg, const Options& o) {
  if (o.span.empty()) usage("natural-basis requires --span");
  const SubspacePtr s = parse_span(alg, o.span);
  check(evo_subspace_natural_basis(s.get()));
  if (o.json) return subspace_json(s.get()).dump(2) + "\n";
  return "natural basis:\n" + basis_text(s.get());
}

std::string cmd_enumerate(const evo_algebra* alg, const Options& o) {
  evo_subspace_list* raw = nullptr;
  check(evo_enumerate_subalgebras(alg, o.max_size, &raw));
  const ListPtr list(raw);
  const std::size_t total = evo_subspace_list_size(list.get());
  const std::size_t n = evo_algebra_dim(alg);
  std::size_t proper = 0;
  for (std::size_t k = 0; k < total; ++k) {
    const std::size_t d = evo_subspace_dim(evo_subspace_list_get(list.get(), k));
    proper += d > 0 && d < n;
  }
  if (o.json)
    return ordered_json{{"count", total}, {"proper_nonzero", proper}, {"subalgebras", list_json(list.get())}}.dump(2) +
           "\n";
  return plural(total, "subalgebra") + " (" + std::to_string(proper) + " proper nonzero)\n" + list_text(list.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subalgebras of finite-dimensional evolution algebras"};
  app.require_subcommand(1);
  Options o;

  using Handler = std::string (*)(const evo_algebra*, const Options&);
  struct Command {
    const char* name;
    const char* help;
    Handler run;
  };
  const Command commands[] = {
      {"info", "dimension, field and structure matrix", cmd_info},
      {"regular", "regularity verdict and determinant", cmd_regular},
      {"codim1", "codimension-one subalgebras", cmd_codim1},
      {"onedim", "one-dimensional subalgebras, or the residual of --vector", cmd_onedim},
      {"verify", "check that --span is a subalgebra and show its natural basis", cmd_verify},
      {"natural-basis", "natural basis of the subalgebra --span", cmd_natural_basis},
      {"enumerate", "all subalgebras by exhaustive search (finite fields)", cmd_enumerate},
  };
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", o.file, "algebra file")->required();
    sub->add_flag("--json", o.json, "machine-readable output");
    const std::string name = c.name;
    if (name == "codim1") sub->add_flag("--verbose,-v", o.verbose, "per-pair diagnostics");
    if (name == "onedim") sub->add_option("--vector", o.vector, "coordinates \"c1,c2,...\"");
    if (name == "verify" || name == "natural-basis")
      sub->add_option("--span", o.span, "spanning vectors \"v1;v2;...\"")->required();
    if (name == "enumerate") sub->add_option("--max-size", o.max_size, "limit on subspaces examined");
    subs.emplace_back(sub, c.run);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    for (const auto& [sub, run] : subs) {
      if (!sub->parsed()) continue;
      const AlgebraPtr alg = load_algebra(o.file);
      std::fputs(run(alg.get(), o).c_str(), stdout);
    }
  } catch (const Failure& f) {
    std::fprintf(stderr, "evoalg: %s\n", f.message.c_str());
    return f.exit_code;
  }
  return 0;
}
