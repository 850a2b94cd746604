#include "biwave/biquaternion.hpp"

#include <ostream>
#include <string>

#include "biwave/error.hpp"

namespace biwave {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonFinite: return "NonFinite";
    case Errc::NotOnSurface: return "NotOnSurface";
    case Errc::EvanescentRegime: return "EvanescentRegime";
    case Errc::PropagatingRegime: return "PropagatingRegime";
    case Errc::DegenerateXi: return "DegenerateXi";
    case Errc::ZeroH: return "ZeroH";
    case Errc::ZeroE: return "ZeroE";
    case Errc::NotOrthogonal: return "NotOrthogonal";
    case Errc::DegenerateSurface: return "DegenerateSurface";
    case Errc::BadParams: return "BadParams";
    case Errc::NotStatic: return "NotStatic";
    case Errc::GridTooSmall: return "GridTooSmall";
    case Errc::NonpositiveTau: return "NonpositiveTau";
    case Errc::UnboundedSupport: return "UnboundedSupport";
    case Errc::OriginEvaluation: return "OriginEvaluation";
    case Errc::OnShellSource: return "OnShellSource";
    case Errc::UnknownClaim: return "UnknownClaim";
    case Errc::BadSpec: return "BadSpec";
    case Errc::Io: return "Io";
    case Errc::FormatVersionMismatch: return "FormatVersionMismatch";
    case Errc::HeaderPayloadMismatch: return "HeaderPayloadMismatch";
  }
  return "Unknown";
}

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

}  // namespace

bool is_finite(const Vec3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

bool is_finite(const CVec3& a) { return finite(a.x) && finite(a.y) && finite(a.z); }

bool is_finite(const Biquaternion& a) { return finite(a.s) && is_finite(a.v); }

void require_finite(const Biquaternion& a, const char* what) {
  if (!is_finite(a)) throw Error(Errc::NonFinite, what);
}
void require_finite(const CVec3& a, const char* what) {
  if (!is_finite(a)) throw Error(Errc::NonFinite, what);
}
void require_finite(const Vec3& a, const char* what) {
  if (!is_finite(a)) throw Error(Errc::NonFinite, what);
}

Biquaternion mul(const Biquaternion& a, const Biquaternion& b) {
  return {a.s * b.s - dot(a.v, b.v), a.s * b.v + b.s * a.v + cross(a.v, b.v)};
}

Biquaternion linear(const Biquaternion& a, const Biquaternion& b, Complex alpha,
                    Complex beta) {
  return {alpha * a.s + beta * b.s, alpha * a.v + beta * b.v};
}

Biquaternion conjugate(const Biquaternion& a, Conjugation kind) {
  switch (kind) {
    case Conjugation::ComplexOnly: return {std::conj(a.s), conj(a.v)};
    case Conjugation::QuaternionOnly: return {a.s, -a.v};
    case Conjugation::Hermitian: return {std::conj(a.s), -conj(a.v)};
  }
  return a;
}

double norm(const Biquaternion& a) {
  return std::sqrt(std::norm(a.s) + std::norm(a.v.x) + std::norm(a.v.y) +
                   std::norm(a.v.z));
}

double pseudonorm_squared(const Biquaternion& a) {
  return std::norm(a.s) - (std::norm(a.v.x) + std::norm(a.v.y) + std::norm(a.v.z));
}

Complex pseudonorm(const Biquaternion& a) {
  const double r = pseudonorm_squared(a);
  return r >= 0.0 ? Complex{std::sqrt(r), 0.0} : Complex{0.0, std::sqrt(-r)};
}

Complex bilinear_form(const Biquaternion& a) { return a.s * a.s + dot(a.v, a.v); }

Biquaternion energy_momentum(const Biquaternion& a, const ConventionFlags& flags) {
  switch (flags.xi) {
    case XiConvention::HermitianLeft:
      return mul(conjugate(a, Conjugation::Hermitian), a);
    case XiConvention::HermitianRight:
      return mul(a, conjugate(a, Conjugation::Hermitian));
    case XiConvention::QuaternionOnly:
      return mul(a, conjugate(a, Conjugation::QuaternionOnly));
  }
  return {};
}

std::string_view to_string(XiConvention c) noexcept {
  switch (c) {
    case XiConvention::HermitianLeft: return "HermitianLeft";
    case XiConvention::HermitianRight: return "HermitianRight";
    case XiConvention::QuaternionOnly: return "QuaternionOnly";
  }
  return "?";
}

XiConvention parse_xi_convention(std::string_view name) {
  for (auto c : {XiConvention::HermitianLeft, XiConvention::HermitianRight,
                 XiConvention::QuaternionOnly}) {
    if (name == to_string(c)) return c;
  }
  throw Error(Errc::BadParams, "unknown convention '" + std::string(name) + "'");
}

namespace {

void put(std::ostream& os, Complex c) {
  os << c.real() << (std::signbit(c.imag()) ? "-" : "+")
     << std::abs(c.imag()) << "i";
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const CVec3& a) {
  os << "(";
  put(os, a.x);
  os << ", ";
  put(os, a.y);
  os << ", ";
  put(os, a.z);
  return os << ")";
}

std::ostream& operator<<(std::ostream& os, const Vec3& a) {
  return os << "(" << a.x << ", " << a.y << ", " << a.z << ")";
}

std::ostream& operator<<(std::ostream& os, const Biquaternion& a) {
  put(os, a.s);
  return os << " + " << a.v;
}

}  // namespace biwave
