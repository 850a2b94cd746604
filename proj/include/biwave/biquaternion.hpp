#pragma once

// Complex biquaternions b + B: a complex scalar together with a complex
// 3-vector. Dot and cross products are complex-bilinear throughout; no
// operation conjugates implicitly.

#include <cmath>
#include <complex>
#include <iosfwd>
#include <string_view>

namespace biwave {

using Complex = std::complex<double>;

template <class T>
struct Vector3 {
  T x{}, y{}, z{};

  constexpr T& operator[](int k) { return k == 0 ? x : (k == 1 ? y : z); }
  constexpr const T& operator[](int k) const {
    return k == 0 ? x : (k == 1 ? y : z);
  }

  Vector3& operator+=(const Vector3& o) {
    x += o.x; y += o.y; z += o.z;
    return *this;
  }
  Vector3& operator-=(const Vector3& o) {
    x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }

  friend bool operator==(const Vector3&, const Vector3&) = default;
};

using Vec3 = Vector3<double>;
using CVec3 = Vector3<Complex>;

template <class T>
Vector3<T> operator+(Vector3<T> a, const Vector3<T>& b) { return a += b; }
template <class T>
Vector3<T> operator-(Vector3<T> a, const Vector3<T>& b) { return a -= b; }
template <class T>
Vector3<T> operator-(const Vector3<T>& a) { return {-a.x, -a.y, -a.z}; }

template <class T, class S>
auto operator*(const S& c, const Vector3<T>& a)
    -> Vector3<decltype(c * a.x)> {
  return {c * a.x, c * a.y, c * a.z};
}
template <class T, class S>
auto operator*(const Vector3<T>& a, const S& c)
    -> Vector3<decltype(a.x * c)> {
  return {a.x * c, a.y * c, a.z * c};
}
template <class T, class S>
auto operator/(const Vector3<T>& a, const S& c)
    -> Vector3<decltype(a.x / c)> {
  return {a.x / c, a.y / c, a.z / c};
}

/// Bilinear dot product (no conjugation).
template <class T, class U>
auto dot(const Vector3<T>& a, const Vector3<U>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Bilinear cross product.
template <class T, class U>
auto cross(const Vector3<T>& a, const Vector3<U>& b)
    -> Vector3<decltype(a.x * b.x)> {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

inline double length(const Vec3& a) { return std::sqrt(dot(a, a)); }
/// sqrt(sum |v_k|^2); the Hermitian length of a complex vector.
inline double length(const CVec3& a) {
  return std::sqrt(std::norm(a.x) + std::norm(a.y) + std::norm(a.z));
}

inline CVec3 complexify(const Vec3& a) { return {a.x, a.y, a.z}; }
inline Vec3 real(const CVec3& a) { return {a.x.real(), a.y.real(), a.z.real()}; }
inline Vec3 imag(const CVec3& a) { return {a.x.imag(), a.y.imag(), a.z.imag()}; }
inline CVec3 conj(const CVec3& a) {
  return {std::conj(a.x), std::conj(a.y), std::conj(a.z)};
}
inline CVec3 make_cvec(const Vec3& re, const Vec3& im) {
  return {{re.x, im.x}, {re.y, im.y}, {re.z, im.z}};
}

bool is_finite(const Vec3& a);
bool is_finite(const CVec3& a);

struct Biquaternion {
  Complex s{};
  CVec3 v{};

  Biquaternion() = default;
  Biquaternion(Complex scalar) : s(scalar) {}  // NOLINT: implicit by design of b + 0
  Biquaternion(Complex scalar, const CVec3& vec) : s(scalar), v(vec) {}

  static Biquaternion vector(const CVec3& vec) { return {Complex{}, vec}; }
  static Biquaternion vector(const Vec3& vec) { return {Complex{}, complexify(vec)}; }

  Biquaternion& operator+=(const Biquaternion& o) {
    s += o.s; v += o.v;
    return *this;
  }
  Biquaternion& operator-=(const Biquaternion& o) {
    s -= o.s; v -= o.v;
    return *this;
  }
  Biquaternion& operator*=(Complex c) {
    s *= c; v = c * v;
    return *this;
  }

  friend bool operator==(const Biquaternion&, const Biquaternion&) = default;
};

inline Biquaternion operator+(Biquaternion a, const Biquaternion& b) { return a += b; }
inline Biquaternion operator-(Biquaternion a, const Biquaternion& b) { return a -= b; }
inline Biquaternion operator-(const Biquaternion& a) { return {-a.s, -a.v}; }
inline Biquaternion operator*(Complex c, Biquaternion a) { return a *= c; }
inline Biquaternion operator*(Biquaternion a, Complex c) { return a *= c; }
inline Biquaternion operator/(Biquaternion a, Complex c) { return a *= (1.0 / c); }

/// Biquaternion product: s = a.s b.s - (a.v, b.v),
/// v = a.s b.v + b.s a.v + [a.v, b.v].
Biquaternion mul(const Biquaternion& a, const Biquaternion& b);
inline Biquaternion operator*(const Biquaternion& a, const Biquaternion& b) {
  return mul(a, b);
}

/// alpha a + beta b, componentwise.
Biquaternion linear(const Biquaternion& a, const Biquaternion& b, Complex alpha,
                    Complex beta);

enum class Conjugation {
  ComplexOnly,     ///< conj(s) + conj(v)
  QuaternionOnly,  ///< s - v
  Hermitian,       ///< conj(s) - conj(v)
};

Biquaternion conjugate(const Biquaternion& a, Conjugation kind);

/// Euclidean length of the eight real components.
double norm(const Biquaternion& a);

/// |s|^2 - sum_k |v_k|^2, the radicand of the pseudonorm.
double pseudonorm_squared(const Biquaternion& a);

/// Principal square root of pseudonorm_squared: nonnegative real for a
/// nonnegative radicand, +i sqrt(-radicand) otherwise.
Complex pseudonorm(const Biquaternion& a);

/// Multiplicative norm form s^2 + (v, v).
Complex bilinear_form(const Biquaternion& a);

/// Which conjugated product defines the energy-momentum biquaternion.
enum class XiConvention {
  HermitianLeft,   ///< Hermitian(a) * a
  HermitianRight,  ///< a * Hermitian(a)
  QuaternionOnly,  ///< a * QuaternionOnly(a)
};

enum class PseudonormBranch { PrincipalRoot };

struct ConventionFlags {
  XiConvention xi = XiConvention::HermitianLeft;
  PseudonormBranch pseudonorm_branch = PseudonormBranch::PrincipalRoot;
};

/// Energy-momentum biquaternion W + iP of a twistor amplitude.
Biquaternion energy_momentum(const Biquaternion& a, const ConventionFlags& flags = {});

/// Constant complex vector coefficient F of the biwave operator.
///
/// The nonstationary families read it as F = -E - iH; the harmonic and static
/// families read it as F = E + iH. Both views reconstruct F exactly.
struct StructuralCoefficient {
  CVec3 F{};

  Vec3 wave_E() const { return -real(F); }
  Vec3 wave_H() const { return -imag(F); }
  Vec3 harmonic_E() const { return real(F); }
  Vec3 harmonic_H() const { return imag(F); }

  static StructuralCoefficient from_wave(const Vec3& E, const Vec3& H) {
    return {make_cvec(-E, -H)};
  }
  static StructuralCoefficient from_harmonic(const Vec3& E, const Vec3& H) {
    return {make_cvec(E, H)};
  }

  Biquaternion as_biquaternion() const { return Biquaternion::vector(F); }
};

bool is_finite(const Biquaternion& a);

/// Throws Errc::NonFinite when any component is NaN or infinite.
void require_finite(const Biquaternion& a, const char* what);
void require_finite(const CVec3& a, const char* what);
void require_finite(const Vec3& a, const char* what);

std::string_view to_string(XiConvention c) noexcept;
XiConvention parse_xi_convention(std::string_view name);

std::ostream& operator<<(std::ostream& os, const Biquaternion& a);
std::ostream& operator<<(std::ostream& os, const CVec3& a);
std::ostream& operator<<(std::ostream& os, const Vec3& a);

}  // namespace biwave
