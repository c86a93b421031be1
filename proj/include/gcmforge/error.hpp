#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gcmforge {

enum class Errc {
  NotSquare,
  DiagonalNotTwo,
  PositiveOffDiagonal,
  ZeroAsymmetry,
  IndexOutOfRange,
  Decomposable,
  WitnessSearchExhausted,
  NotSymmetrizable,
  TypeMismatch,
  InfeasibleBounds,
  BudgetExceeded,
  ParseError,
  ValidationError,
};

std::string_view errc_name(Errc code) noexcept;

/// Domain error raised by every module. `what()` starts with the variant
/// name so that command-line output always names the failing check.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace gcmforge
