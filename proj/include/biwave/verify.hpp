#pragma once

// Registry of checkable identities with seeded, deterministic runners.
//
// A claim whose printed form is known to be inconsistent is a variant: it
// measures the printed form and a corrected form, and reports
// FailsAsPrintedPassesCorrected when only the corrected one holds.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biwave/biquaternion.hpp"

namespace biwave {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

enum class ClaimStatus { Pass, Fail, FailsAsPrintedPassesCorrected };

std::string_view to_string(ClaimStatus s) noexcept;

struct Claim {
  std::string id;
  std::string description;
  std::string statement;  ///< the identity being checked
  double tolerance = 0.0;
  std::size_t draws = 0;
  bool convention_sensitive = false;
  bool variant = false;
};

struct ClaimResult {
  std::string id;
  XiConvention convention = XiConvention::HermitianLeft;
  ClaimStatus status = ClaimStatus::Fail;
  double max_error = 0.0;                 ///< printed form for variants
  std::optional<double> corrected_error;  ///< variants only
  double tolerance = 0.0;
  std::size_t draws = 0;
  std::uint64_t seed = 0;
  double runtime_s = 0.0;
  std::string detail;
};

struct ClaimReport {
  std::vector<ClaimResult> entries;

  /// True when no entry under `convention` has status Fail.
  bool passed(XiConvention convention = XiConvention::HermitianLeft) const;
};

const std::vector<Claim>& claim_registry();
/// Throws Errc::UnknownClaim.
const Claim& find_claim(std::string_view id);

/// Deterministic in (id, flags, seed). Throws Errc::UnknownClaim.
ClaimResult run_claim(std::string_view id, const ConventionFlags& flags = {},
                      std::uint64_t seed = kDefaultSeed);

/// Every claim under every listed convention, registry order then
/// convention order. An empty list means the default convention only.
/// Convention-insensitive claims are computed once and reported per
/// convention.
ClaimReport run_all(std::vector<XiConvention> conventions, std::uint64_t seed = kDefaultSeed);

/// Machine-readable report; excludes runtimes so equal seeds give equal bytes.
std::string to_json(const ClaimReport& report);
void write_table(const ClaimReport& report, std::ostream& out);

}  // namespace biwave
