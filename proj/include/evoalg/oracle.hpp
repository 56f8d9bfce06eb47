#ifndef EVOALG_ORACLE_HPP
#define EVOALG_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "evoalg/subspace.hpp"

namespace evoalg {

inline constexpr std::uint64_t kDefaultMaxSubspaces = 10'000'000;

// Number of m-dimensional subspaces of F_p^n, summed over RREF pivot
// profiles. Saturates at UINT64_MAX.
std::uint64_t subspace_count(const FieldSpec& spec, std::size_t n, std::size_t m);

// Streams every m-dimensional subspace of F_p^n exactly once, as its RREF
// basis matrix (m x n). Profiles are visited in lexicographic pivot order and
// free entries odometer-style.
class SubspaceEnumeration {
 public:
  SubspaceEnumeration(const FieldSpec& spec, std::size_t n, std::size_t m,
                      std::uint64_t max_count = kDefaultMaxSubspaces);

  std::uint64_t count() const noexcept { return count_; }
  std::optional<Matrix> next();

 private:
  void load_profile();
  bool advance_pivots();

  FieldSpec spec_;
  std::size_t n_;
  std::size_t m_;
  std::uint64_t count_;
  bool done_ = false;
  std::vector<std::size_t> pivots_;
  // (row, col) positions of the free entries of the current profile.
  std::vector<std::pair<std::size_t, std::size_t>> free_;
  std::vector<std::uint64_t> digits_;
};

std::vector<Matrix> enumerate_subspaces(const FieldSpec& spec, std::size_t n, std::size_t m,
                                        std::uint64_t max_count = kDefaultMaxSubspaces);

// Every subspace (dimensions 0..n, including 0 and the whole algebra) closed
// under the product, canonically ordered.
std::vector<Subspace> enumerate_subalgebras(const EvolutionAlgebra& a,
                                            std::uint64_t max_count = kDefaultMaxSubspaces);

}  // namespace evoalg

#endif
