#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace biwave {

/// Failure categories raised across the library. Every throw site uses
/// biwave::Error with one of these codes.
enum class Errc {
  NonFinite,
  NotOnSurface,
  EvanescentRegime,
  PropagatingRegime,
  DegenerateXi,
  ZeroH,
  ZeroE,
  NotOrthogonal,
  DegenerateSurface,
  BadParams,
  NotStatic,
  GridTooSmall,
  NonpositiveTau,
  UnboundedSupport,
  OriginEvaluation,
  OnShellSource,
  UnknownClaim,
  BadSpec,
  Io,
  FormatVersionMismatch,
  HeaderPayloadMismatch,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace biwave
