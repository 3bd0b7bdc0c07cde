// SPDX-License-Identifier: Apache-2.0
#include "intmult/field.hpp"
#include "intmult/errors.hpp"

#include <cctype>

namespace intmult {

namespace {

bool is_prime_number(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

Rational parse_rational(const std::string& raw) {
  std::string text = trim(raw);
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& part) {
    std::string t = trim(part);
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) throw ParseError("malformed scalar '" + raw + "'");
    for (std::size_t k = i; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k])))
        throw ParseError("malformed scalar '" + raw + "'");
    return boost::multiprecision::cpp_int(t[0] == '+' ? t.substr(1) : t);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  auto num = parse_int(text.substr(0, slash));
  auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + raw + "'");
  return Rational(num, den);
}

} // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime_number(p) || p > (1u << 31))
    throw FieldError("GF(p) requires a prime p below 2^31, got " + std::to_string(p));
  return Field(p);
}

Field Field::rationals() { return Field(0u); }

Field Field::parse(const std::string& raw) {
  std::string text = trim(raw);
  if (text == "Q" || text == "QQ" || text == "rationals") return rationals();
  std::string digits = text;
  if (text.rfind("GF(", 0) == 0 && text.back() == ')') digits = text.substr(3, text.size() - 4);
  if (digits.empty()) throw FieldError("unrecognised field '" + raw + "'");
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw FieldError("unrecognised field '" + raw + "'");
  if (digits.size() > 10) throw FieldError("characteristic too large in '" + raw + "'");
  return prime(static_cast<std::uint32_t>(std::stoull(digits)));
}

std::string Field::name() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

namespace modp {

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw FieldError("division by zero in " + Field::prime(p).name());
  long long t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const Rational& v, std::uint32_t p) {
  using boost::multiprecision::cpp_int;
  cpp_int num = boost::multiprecision::numerator(v) % p;
  cpp_int den = boost::multiprecision::denominator(v) % p;
  if (num < 0) num += p;
  if (den < 0) den += p;
  if (den == 0)
    throw FieldError("denominator of " + v.str() + " vanishes in GF(" + std::to_string(p) + ")");
  return mul(num.convert_to<std::uint32_t>(), inv(den.convert_to<std::uint32_t>(), p), p);
}

} // namespace modp

Scalar::Scalar(Field field, long long value) : field_(field) {
  if (field_.is_prime())
    residue_ = modp::reduce(value, field_.characteristic());
  else
    value_ = value;
}

Scalar::Scalar(Field field, const Rational& value) : field_(field) {
  if (field_.is_prime())
    residue_ = modp::reduce(value, field_.characteristic());
  else
    value_ = value;
}

Scalar Scalar::parse(Field field, const std::string& text) {
  return Scalar(field, parse_rational(text));
}

bool Scalar::is_zero() const {
  return field_.is_prime() ? residue_ == 0 : value_ == 0;
}

std::string Scalar::to_string() const {
  return field_.is_prime() ? std::to_string(residue_) : value_.str();
}

void Scalar::require_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldError("mixing scalars of " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(o);
  Scalar r = *this;
  if (field_.is_prime())
    r.residue_ = modp::add(residue_, o.residue_, field_.characteristic());
  else
    r.value_ += o.value_;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(o);
  Scalar r = *this;
  if (field_.is_prime())
    r.residue_ = modp::mul(residue_, o.residue_, field_.characteristic());
  else
    r.value_ *= o.value_;
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_prime())
    r.residue_ = modp::sub(0, residue_, field_.characteristic());
  else
    r.value_ = -value_;
  return r;
}

Scalar Scalar::inverse() const {
  Scalar r = *this;
  if (field_.is_prime()) {
    r.residue_ = modp::inv(residue_, field_.characteristic());
  } else {
    if (value_ == 0) throw FieldError("division by zero in Q");
    r.value_ = 1 / value_;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  return field_ == o.field_ && residue_ == o.residue_ && value_ == o.value_;
}

} // namespace intmult
