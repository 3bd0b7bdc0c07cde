// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace intmult {

using Rational = boost::multiprecision::cpp_rational;

/// Coefficient field: either GF(p) for a prime p, or the rationals.
class Field {
public:
  /// The default field is GF(2).
  Field() = default;

  static Field prime(std::uint32_t p);
  static Field rationals();

  /// Accepts "GF(2)", "GF(p)" for a concrete prime, "Q", "2", "5", ...
  static Field parse(const std::string& text);

  bool is_prime() const { return p_ != 0; }
  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 2;
};

/// A single exact field element. Residues are kept reduced in [0, p).
class Scalar {
public:
  Scalar() = default;
  Scalar(Field field, long long value);
  Scalar(Field field, const Rational& value);

  /// Parses an integer or a "num/den" string.
  static Scalar parse(Field field, const std::string& text);

  Field field() const { return field_; }
  bool is_zero() const;
  std::uint32_t residue() const { return residue_; }
  const Rational& rational() const { return value_; }
  std::string to_string() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  bool operator==(const Scalar& o) const;

private:
  void require_same(const Scalar& o) const;

  Field field_;
  std::uint32_t residue_ = 0;
  Rational value_;
};

namespace modp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t(a) + p - b);
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
}
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce(long long v, std::uint32_t p);
/// Maps a rational to GF(p); throws FieldError if p divides the denominator.
std::uint32_t reduce(const Rational& v, std::uint32_t p);

} // namespace modp

} // namespace intmult
