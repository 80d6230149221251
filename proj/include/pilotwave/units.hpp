#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pilotwave/catalog.hpp"

namespace pilotwave {

// Exact rational number for dimension exponents. Always stored normalized
// (gcd-reduced, positive denominator) so equality is field-wise.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num(n) {}  // NOLINT(google-explicit-constructor)
  constexpr Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend constexpr bool operator==(Rational a, Rational b) = default;
  friend constexpr Rational operator+(Rational a, Rational b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend constexpr Rational operator-(Rational a, Rational b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend constexpr Rational operator-(Rational a) { return {-a.num, a.den}; }
};

std::string to_string(Rational q);

// Exponents of (mass, length, time). The zero dimension is the
// multiplicative identity.
struct Dimension {
  Rational mass;
  Rational length;
  Rational time;

  friend constexpr bool operator==(const Dimension&, const Dimension&) = default;
};

constexpr Dimension operator*(const Dimension& a, const Dimension& b) {
  return {a.mass + b.mass, a.length + b.length, a.time + b.time};
}
constexpr Dimension operator/(const Dimension& a, const Dimension& b) {
  return {a.mass - b.mass, a.length - b.length, a.time - b.time};
}

namespace dims {
inline constexpr Dimension dimensionless{};
inline constexpr Dimension mass{1, 0, 0};
inline constexpr Dimension length{0, 1, 0};
inline constexpr Dimension time{0, 0, 1};
inline constexpr Dimension velocity{0, 1, -1};
inline constexpr Dimension scalar_field{0, 2, -1};  // generator of an azimuthal current
inline constexpr Dimension action{1, 2, -1};        // hbar
inline constexpr Dimension angular_frequency{0, 0, -1};
}  // namespace dims

// "M L^2 T^-1" style; the zero dimension prints as "1".
std::string to_string(const Dimension& d);

// Structural dimension of a catalog closed form. Follows the convention that
// the normalization prefactor lambda^2 and the Gaussian exponential are
// dimensionless; only the r, t, m, omega, hbar factors count.
Dimension dim_of_catalog(CatalogId id);

}  // namespace pilotwave
