#ifndef EVOALG_ERROR_HPP
#define EVOALG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace evoalg {

enum class Errc {
  InvalidFieldSpec,
  MalformedScalar,
  ZeroDenominator,
  DecimalInExactField,
  InversionOfZero,
  MixedFieldSpecs,
  NonFiniteValue,
  IdenticallyZeroPolynomial,
  NonSquare,
  SingularMatrix,
  DimensionMismatch,
  NonSquareStructure,
  MixedAlgebras,
  NotRegular,
  NotASubalgebra,
  UnsupportedFieldDimension,
  BadIndices,
  DimensionTooSmall,
  ZeroPair,
  TooLarge,
  NotFiniteField,
  InvariantViolated,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

}  // namespace evoalg

#endif
