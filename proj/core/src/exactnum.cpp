#include "rbd/exactnum.hpp"

#include <optional>
#include <ostream>
#include <utility>

#include "rbd/error.hpp"

namespace rbd {

BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  BigInt r = a / gcd(a, b) * b;
  return r.sign() < 0 ? BigInt(-r) : r;
}

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw Error(ErrorKind::ParseError, "expected an integer, got '" + std::string(text) + "'");
  }
  BigInt v = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::ParseError, "expected an integer, got '" + std::string(text) + "'");
    }
    v = v * 10 + (c - '0');
  }
  return negative ? BigInt(-v) : v;
}

// ---------------------------------------------------------------------------
// Rat

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  normalize();
}

void Rat::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat Rat::operator-() const {
  Rat r = *this;
  r.num_ = -r.num_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero rational");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rat::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_bigint(text));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den.is_zero()) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rat(parse_bigint(text.substr(0, slash)), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

// ---------------------------------------------------------------------------
// QMatrix

QMatrix::QMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw Error(ErrorKind::InvalidParameters, "matrix dimension must be positive");
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rat>> rows) : QMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(ErrorKind::InvalidParameters, "matrix is not square");
    std::size_t j = 0;
    for (const auto& v : row) entries_[i * dim_ + j++] = v;
    ++i;
  }
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r + 1; c < dim_; ++c)
      if (at(r, c) != at(c, r)) throw Error(ErrorKind::InvalidParameters, "matrix is not symmetric");
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  QMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error(ErrorKind::InvalidParameters, "matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j < i && rows[i][j] != rows[j][i])
        throw Error(ErrorKind::InvalidParameters, "matrix is not symmetric");
      m.entries_[i * m.dim_ + j] = rows[i][j];
    }
  }
  return m;
}

const Rat& QMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("QMatrix index out of range");
  return entries_[i * dim_ + j];
}

void QMatrix::set(std::size_t i, std::size_t j, const Rat& v) {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("QMatrix index out of range");
  entries_[i * dim_ + j] = v;
  entries_[j * dim_ + i] = v;
}

QMatrix QMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
  QMatrix sub(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j)
      sub.entries_[i * sub.dim_ + j] = at(indices[i], indices[j]);
  return sub;
}

QMatrix QMatrix::leading_submatrix(std::size_t k) const {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return principal_submatrix(idx);
}

std::vector<Rat> QMatrix::apply(std::span<const Rat> x) const {
  if (x.size() != dim_) throw Error(ErrorKind::InvalidParameters, "vector length does not match matrix");
  std::vector<Rat> y(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (!entries_[i * dim_ + j].is_zero() && !x[j].is_zero()) y[i] += entries_[i * dim_ + j] * x[j];
  return y;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

namespace {

using IntRows = std::vector<std::vector<BigInt>>;

struct BareissResult {
  bool complete = true;  // false if a zero pivot stopped elimination
  std::size_t stopped_at = 0;
  int swap_sign = 1;
};

// Eliminates the first `rows` columns of `a` in place. a[k][k] after the
// k-th step equals the (k+1)-th leading minor when no pivoting occurs.
BareissResult bareiss(IntRows& a, bool allow_pivoting) {
  BareissResult res;
  const std::size_t n = a.size();
  const std::size_t cols = n == 0 ? 0 : a[0].size();
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) {
      std::optional<std::size_t> swap;
      if (allow_pivoting) {
        for (std::size_t r = k + 1; r < n; ++r) {
          if (!a[r][k].is_zero()) {
            swap = r;
            break;
          }
        }
      }
      if (!swap) {
        res.complete = false;
        res.stopped_at = k;
        return res;
      }
      std::swap(a[k], a[*swap]);
      res.swap_sign = -res.swap_sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return res;
}

BigInt common_denominator(const QMatrix& m) {
  BigInt d = 1;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j) d = lcm(d, m.at(i, j).den());
  return d;
}

IntRows scaled_integer_rows(const QMatrix& m, const BigInt& scale) {
  IntRows a(m.dim(), std::vector<BigInt>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const Rat& v = m.at(i, j);
      a[i][j] = v.num() * (scale / v.den());
    }
  return a;
}

}  // namespace

std::vector<Rat> solve_symmetric(const QMatrix& gram, std::span<const Rat> rhs) {
  const std::size_t n = gram.dim();
  if (rhs.size() != n) throw Error(ErrorKind::InvalidParameters, "right-hand side length does not match matrix");

  // Each equation is scaled by the lcm of its denominators; this leaves the
  // solution unchanged.
  IntRows a(n, std::vector<BigInt>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    BigInt scale = rhs[i].den();
    for (std::size_t j = 0; j < n; ++j) scale = lcm(scale, gram.at(i, j).den());
    for (std::size_t j = 0; j < n; ++j) a[i][j] = gram.at(i, j).num() * (scale / gram.at(i, j).den());
    a[i][n] = rhs[i].num() * (scale / rhs[i].den());
  }

  if (!bareiss(a, true).complete || a[n - 1][n - 1].is_zero())
    throw Error(ErrorKind::SingularMatrix, "matrix is singular");

  std::vector<Rat> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rat acc(a[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j)
      if (!a[ii][j].is_zero()) acc -= Rat(a[ii][j]) * x[j];
    x[ii] = acc / Rat(a[ii][ii]);
  }
  return x;
}

Rat determinant(const QMatrix& m) {
  const std::size_t n = m.dim();
  BigInt scale = common_denominator(m);
  IntRows a = scaled_integer_rows(m, scale);
  BareissResult r = bareiss(a, true);
  if (!r.complete) return Rat(0);
  BigInt det = a[n - 1][n - 1] * r.swap_sign;
  return Rat(det, boost::multiprecision::pow(scale, static_cast<unsigned>(n)));
}

std::vector<Rat> leading_principal_minors(const QMatrix& m) {
  const std::size_t n = m.dim();
  BigInt scale = common_denominator(m);
  IntRows a = scaled_integer_rows(m, scale);
  BareissResult r = bareiss(a, false);

  std::vector<Rat> minors;
  minors.reserve(n);
  BigInt scale_pow = 1;
  const std::size_t clean = r.complete ? n : r.stopped_at;
  for (std::size_t k = 0; k < clean; ++k) {
    scale_pow *= scale;
    minors.emplace_back(a[k][k], scale_pow);
  }
  // A vanishing leading minor breaks the no-pivot recurrence; the remaining
  // minors are computed one by one.
  for (std::size_t k = clean; k < n; ++k) minors.push_back(determinant(m.leading_submatrix(k + 1)));
  return minors;
}

bool is_negative_definite(const QMatrix& m) {
  const std::size_t n = m.dim();
  BigInt scale = common_denominator(m);
  IntRows a = scaled_integer_rows(m, scale);
  BareissResult r = bareiss(a, false);
  if (!r.complete) return false;
  for (std::size_t k = 0; k < n; ++k) {
    int expected = (k % 2 == 0) ? -1 : 1;
    if (a[k][k].sign() != expected) return false;
  }
  return true;
}

}  // namespace rbd
