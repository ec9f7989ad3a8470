#include "rbd/symbolic.hpp"

#include <algorithm>
#include <ostream>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include "rbd/error.hpp"

namespace rbd {

namespace {

using Decimal = boost::multiprecision::cpp_dec_float_100;

constexpr int kMaxDigits = 60;

// Splits r = s^2 * t with t square-free; returns {s, t}.
std::pair<BigInt, BigInt> extract_square(BigInt r) {
  BigInt outside = 1;
  for (BigInt p = 2; p * p <= r; ++p) {
    BigInt sq = p * p;
    while (r % sq == 0) {
      r /= sq;
      outside *= p;
    }
  }
  return {outside, r};
}

}  // namespace

SymbolicValue canonicalize(const SymbolicValue& v) {
  if (v.radicand.sign() < 0) throw Error(ErrorKind::InvalidParameters, "negative radicand");
  if (v.sign == 0 || v.coefficient.is_zero() || v.radicand.is_zero()) return SymbolicValue{};

  SymbolicValue out;
  out.sign = (v.sign > 0) == (v.coefficient.sign() > 0) ? 1 : -1;
  out.coefficient = v.coefficient.sign() < 0 ? -v.coefficient : v.coefficient;
  out.pi_power = v.pi_power;
  auto [outside, rest] = extract_square(v.radicand);
  out.coefficient *= Rat(outside);
  out.radicand = rest;
  return out;
}

bool SymbolicValue::is_zero() const { return canonicalize(*this).sign == 0; }

bool operator==(const SymbolicValue& a, const SymbolicValue& b) {
  SymbolicValue ca = canonicalize(a);
  SymbolicValue cb = canonicalize(b);
  return ca.sign == cb.sign && ca.coefficient == cb.coefficient && ca.pi_power == cb.pi_power &&
         ca.radicand == cb.radicand;
}

SymbolicValue SymbolicValue::squared() const {
  SymbolicValue c = canonicalize(*this);
  if (c.sign == 0) return c;
  return canonicalize(SymbolicValue{1, c.coefficient * c.coefficient * Rat(c.radicand), 2 * c.pi_power, 1});
}

std::string SymbolicValue::to_string() const {
  SymbolicValue c = canonicalize(*this);
  if (c.sign == 0) return "0";
  std::string out = c.sign < 0 ? "-" : "";
  std::string coeff = c.coefficient.to_string();
  bool has_factor = c.pi_power > 0 || c.radicand != 1;
  if (!(c.coefficient == Rat(1) && has_factor)) out += coeff;
  auto join = [&out](const std::string& s) {
    if (!out.empty() && out != "-") out += "*";
    out += s;
  };
  if (c.pi_power == 1) join("pi");
  if (c.pi_power > 1) join("pi^" + std::to_string(c.pi_power));
  if (c.radicand != 1) join("sqrt(" + c.radicand.str() + ")");
  return out;
}

std::string to_decimal(const SymbolicValue& v, int significant_digits) {
  if (significant_digits < 1 || significant_digits > kMaxDigits)
    throw Error(ErrorKind::InvalidParameters, "precision must be between 1 and 60 digits");
  SymbolicValue c = canonicalize(v);
  if (c.sign == 0) return "0";

  const Decimal pi = boost::math::constants::pi<Decimal>();
  Decimal x = Decimal(c.coefficient.num()) / Decimal(c.coefficient.den());
  for (unsigned i = 0; i < c.pi_power; ++i) x *= pi;
  if (c.radicand != 1) x *= boost::multiprecision::sqrt(Decimal(c.radicand));

  // x = d.ddd... * 10^exponent with 1 <= d < 10
  long exponent = boost::multiprecision::floor(boost::multiprecision::log10(x)).convert_to<long>();
  Decimal ten = 10;
  while (x >= boost::multiprecision::pow(ten, exponent + 1)) ++exponent;
  while (x < boost::multiprecision::pow(ten, exponent)) --exponent;

  Decimal scaled = x * boost::multiprecision::pow(ten, significant_digits - 1 - exponent);
  std::string digits = boost::multiprecision::floor(scaled).convert_to<BigInt>().str();
  // Guard against the scaled value landing a hair under a power of ten.
  digits.resize(static_cast<std::size_t>(significant_digits), '0');

  std::string out = c.sign < 0 ? "-" : "";
  if (exponent >= 0) {
    auto int_len = static_cast<std::size_t>(exponent + 1);
    if (int_len >= digits.size()) {
      out += digits + std::string(int_len - digits.size(), '0');
    } else {
      out += digits.substr(0, int_len) + "." + digits.substr(int_len);
    }
  } else {
    out += "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SymbolicValue& v) { return os << v.to_string(); }

}  // namespace rbd
