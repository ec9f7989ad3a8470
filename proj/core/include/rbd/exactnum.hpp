#pragma once

// Exact scalars and small dense symmetric matrices.
//
// Everything here is exact: integers are arbitrary precision, rationals are
// kept in lowest terms with a positive denominator, and the linear algebra
// uses fraction-free (Bareiss) elimination over integer-scaled rows.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rbd {

using BigInt = boost::multiprecision::cpp_int;

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

// Parses an optionally signed decimal integer. Throws ParseError.
BigInt parse_bigint(std::string_view text);

class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(int v) : num_(v), den_(1) {}            // NOLINT(implicit)
  Rat(long v) : num_(v), den_(1) {}           // NOLINT(implicit)
  Rat(long long v) : num_(v), den_(1) {}      // NOLINT(implicit)
  Rat(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT(implicit)
  // Throws DivisionByZero when den == 0.
  Rat(BigInt num, BigInt den);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  // Accepts "p" or "p/q".
  static Rat parse(std::string_view text);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Square symmetric matrix of rationals. dim() >= 1.
class QMatrix {
 public:
  explicit QMatrix(std::size_t dim);
  // Rows must form a square symmetric matrix; throws InvalidParameters.
  QMatrix(std::initializer_list<std::initializer_list<Rat>> rows);
  static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  const Rat& at(std::size_t i, std::size_t j) const;
  // Writes both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, const Rat& v);

  QMatrix principal_submatrix(std::span<const std::size_t> indices) const;
  QMatrix leading_submatrix(std::size_t k) const;
  std::vector<Rat> apply(std::span<const Rat> x) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Rat> entries_;
};

// Unique x with gram * x = rhs. Throws SingularMatrix if det(gram) == 0.
std::vector<Rat> solve_symmetric(const QMatrix& gram, std::span<const Rat> rhs);

Rat determinant(const QMatrix& m);

// minors[k] is the determinant of the leading (k+1) x (k+1) block.
std::vector<Rat> leading_principal_minors(const QMatrix& m);

// Sylvester: leading minors alternate in sign, starting negative.
bool is_negative_definite(const QMatrix& m);

}  // namespace rbd
