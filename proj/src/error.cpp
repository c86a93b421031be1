#include "gcmforge/error.hpp"

namespace gcmforge {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotSquare: return "NotSquare";
    case Errc::DiagonalNotTwo: return "DiagonalNotTwo";
    case Errc::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case Errc::ZeroAsymmetry: return "ZeroAsymmetry";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::Decomposable: return "Decomposable";
    case Errc::WitnessSearchExhausted: return "WitnessSearchExhausted";
    case Errc::NotSymmetrizable: return "NotSymmetrizable";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::InfeasibleBounds: return "InfeasibleBounds";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
  }
  return "UnknownError";
}

}  // namespace gcmforge
