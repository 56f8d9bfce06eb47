#include "evoalg/oracle.hpp"

#include <limits>

namespace evoalg {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) r = sat_mul(r, base);
  return r;
}

void require_prime_field(const FieldSpec& spec) {
  if (!spec.is_finite()) raise(Errc::NotFiniteField, "subspace enumeration needs a prime field, got " + spec.describe());
}

std::size_t free_entries(const std::vector<std::size_t>& pivots, std::size_t n) {
  std::size_t total = 0;
  const std::size_t m = pivots.size();
  for (std::size_t r = 0; r < m; ++r) total += (n - pivots[r] - 1) - (m - r - 1);
  return total;
}

// Next m-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t m = c.size();
  std::size_t i = m;
  while (i > 0) {
    --i;
    if (c[i] < n - m + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::uint64_t subspace_count(const FieldSpec& spec, std::size_t n, std::size_t m) {
  require_prime_field(spec);
  if (m > n) return 0;
  std::vector<std::size_t> pivots(m);
  for (std::size_t i = 0; i < m; ++i) pivots[i] = i;
  std::uint64_t total = 0;
  do {
    total = sat_add(total, sat_pow(spec.modulus(), free_entries(pivots, n)));
  } while (next_combination(pivots, n));
  return total;
}

SubspaceEnumeration::SubspaceEnumeration(const FieldSpec& spec, std::size_t n, std::size_t m,
                                         std::uint64_t max_count)
    : spec_(spec), n_(n), m_(m), count_(0) {
  require_prime_field(spec);
  if (m > n) raise(Errc::DimensionMismatch, "subspace dimension exceeds ambient dimension");
  count_ = subspace_count(spec, n, m);
  if (count_ > max_count)
    raise(Errc::TooLarge, std::to_string(m) + "-dimensional subspaces of " + spec.describe() + "^" +
                              std::to_string(n) + " exceed the limit of " + std::to_string(max_count));
  pivots_.resize(m);
  for (std::size_t i = 0; i < m; ++i) pivots_[i] = i;
  load_profile();
}

void SubspaceEnumeration::load_profile() {
  free_.clear();
  std::vector<bool> is_pivot(n_, false);
  for (auto c : pivots_) is_pivot[c] = true;
  for (std::size_t r = 0; r < m_; ++r)
    for (std::size_t c = pivots_[r] + 1; c < n_; ++c)
      if (!is_pivot[c]) free_.emplace_back(r, c);
  digits_.assign(free_.size(), 0);
}

bool SubspaceEnumeration::advance_pivots() {
  if (!next_combination(pivots_, n_)) return false;
  load_profile();
  return true;
}

std::optional<Matrix> SubspaceEnumeration::next() {
  if (done_) return std::nullopt;
  Matrix m(spec_, m_, n_);
  for (std::size_t r = 0; r < m_; ++r) m(r, pivots_[r]) = Scalar::one(spec_);
  for (std::size_t k = 0; k < free_.size(); ++k)
    m(free_[k].first, free_[k].second) = Scalar::from_int(spec_, static_cast<long>(digits_[k]));

  std::size_t k = 0;
  while (k < digits_.size() && ++digits_[k] == spec_.modulus()) digits_[k++] = 0;
  if (k == digits_.size() && !advance_pivots()) done_ = true;
  return m;
}

std::vector<Matrix> enumerate_subspaces(const FieldSpec& spec, std::size_t n, std::size_t m,
                                        std::uint64_t max_count) {
  SubspaceEnumeration e(spec, n, m, max_count);
  std::vector<Matrix> out;
  out.reserve(e.count());
  while (auto s = e.next()) out.push_back(std::move(*s));
  return out;
}

std::vector<Subspace> enumerate_subalgebras(const EvolutionAlgebra& a, std::uint64_t max_count) {
  require_prime_field(a.spec());
  std::uint64_t total = 0;
  for (std::size_t m = 0; m <= a.dim(); ++m) total = sat_add(total, subspace_count(a.spec(), a.dim(), m));
  if (total > max_count)
    raise(Errc::TooLarge, std::to_string(total) + " subspaces exceed the limit of " + std::to_string(max_count));
  std::vector<Subspace> out;
  for (std::size_t m = 0; m <= a.dim(); ++m) {
    SubspaceEnumeration e(a.spec(), a.dim(), m, max_count);
    while (auto basis = e.next()) {
      Subspace s(a, *basis);
      if (is_subalgebra(s)) out.push_back(std::move(s));
    }
  }
  sort_canonical(out);
  return out;
}

}  // namespace evoalg
