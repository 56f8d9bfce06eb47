#include "evoalg/error.hpp"

namespace evoalg {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidFieldSpec: return "InvalidFieldSpec";
    case Errc::MalformedScalar: return "MalformedScalar";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::DecimalInExactField: return "DecimalInExactField";
    case Errc::InversionOfZero: return "InversionOfZero";
    case Errc::MixedFieldSpecs: return "MixedFieldSpecs";
    case Errc::NonFiniteValue: return "NonFiniteValue";
    case Errc::IdenticallyZeroPolynomial: return "IdenticallyZeroPolynomial";
    case Errc::NonSquare: return "NonSquare";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NonSquareStructure: return "NonSquareStructure";
    case Errc::MixedAlgebras: return "MixedAlgebras";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NotASubalgebra: return "NotASubalgebra";
    case Errc::UnsupportedFieldDimension: return "UnsupportedFieldDimension";
    case Errc::BadIndices: return "BadIndices";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::ZeroPair: return "ZeroPair";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotFiniteField: return "NotFiniteField";
    case Errc::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace evoalg
