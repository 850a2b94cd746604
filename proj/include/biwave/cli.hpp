#pragma once

// Command-line surface. Exit codes: 0 success, 1 a claim fails under the
// default convention, 2 usage or parameter error.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "biwave/biquaternion.hpp"

namespace biwave {

/// args excludes the program name.
int cli_execute(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// "a+bi" literals: "2", "-1i", "i", "0.5-2e-3i". Throws Errc::BadParams.
Complex parse_complex(std::string_view text);
Vec3 parse_vec(std::string_view text);
CVec3 parse_cvec(std::string_view text);
/// Same syntax as parse_complex; the imaginary part is omitted when zero.
std::string format_complex(Complex c);

}  // namespace biwave
