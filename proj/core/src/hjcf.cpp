#include "rbd/hjcf.hpp"

#include <algorithm>
#include <sstream>

#include "rbd/error.hpp"

namespace rbd {

CyclicSingularity::CyclicSingularity(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ <= 1 || q_ <= 0 || q_ >= p_) {
    throw Error(ErrorKind::InvalidSingularity,
                "need 0 < q < p, got p = " + p_.str() + ", q = " + q_.str());
  }
  if (gcd(p_, q_) != 1) {
    throw Error(ErrorKind::InvalidSingularity, "p, q not coprime (p = " + p_.str() + ", q = " + q_.str() + ")");
  }
}

HjChain::HjChain(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidChain, "empty chain");
  for (const auto& e : coeffs_) {
    if (e < 2) throw Error(ErrorKind::InvalidChain, "chain entry " + e.str() + " is below 2");
  }
}

HjChain HjChain::reversed() const {
  std::vector<BigInt> r(coeffs_.rbegin(), coeffs_.rend());
  return HjChain(std::move(r));
}

std::string HjChain::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i];
  }
  os << ']';
  return os.str();
}

HjChain hj_expand(const CyclicSingularity& s) {
  std::vector<BigInt> coeffs;
  BigInt p = s.p();
  BigInt q = s.q();
  while (q > 0) {
    BigInt e = (p + q - 1) / q;  // ceil(p / q)
    BigInt next = e * q - p;
    coeffs.push_back(e);
    p = std::move(q);
    q = std::move(next);
  }
  return HjChain(std::move(coeffs));
}

CyclicSingularity hj_evaluate(const HjChain& chain) {
  const auto& e = chain.coeffs();
  BigInt num = e.back();
  BigInt den = 1;
  for (std::size_t i = e.size() - 1; i-- > 0;) {
    BigInt next = e[i] * num - den;
    den = std::move(num);
    num = std::move(next);
  }
  return CyclicSingularity(std::move(num), std::move(den));
}

BlowdownChain blowdown_chain(const BigInt& n, const BigInt& m) {
  if (n <= 1 || m <= 0 || m >= n || gcd(n, m) != 1) {
    throw Error(ErrorKind::InvalidParameters,
                "blowdown type needs 0 < m < n coprime, got (" + n.str() + ", " + m.str() + ")");
  }
  return BlowdownChain{n, m, hj_expand(CyclicSingularity(n * n, n * m - 1))};
}

namespace {

std::optional<BlowdownMatch> match_one(const HjChain& chain, Orientation o) {
  CyclicSingularity s = hj_evaluate(chain);
  BigInt n = boost::multiprecision::sqrt(s.p());
  if (n * n != s.p()) return std::nullopt;
  BigInt q1 = s.q() + 1;
  if (q1 % n != 0) return std::nullopt;
  BigInt m = q1 / n;
  if (m <= 0 || m >= n || gcd(n, m) != 1) return std::nullopt;
  return BlowdownMatch{n, m, o};
}

}  // namespace

Recognition recognize_blowdown(const HjChain& chain) {
  Recognition r;
  auto fwd = match_one(chain, Orientation::Forward);
  HjChain rev = chain.reversed();
  std::optional<BlowdownMatch> bwd;
  if (!(rev == chain)) bwd = match_one(rev, Orientation::Reversed);
  if (fwd) {
    r.best = fwd;
    r.alternate = bwd;
  } else {
    r.best = bwd;
  }
  return r;
}

Rat eta_invariant(const BigInt& n) {
  if (n < 2) throw Error(ErrorKind::InvalidParameters, "eta invariant needs n >= 2, got " + n.str());
  return Rat(2, 3) * (Rat(1) - Rat(BigInt(1), n * n));
}

QMatrix chain_gram(const HjChain& chain) {
  const auto& e = chain.coeffs();
  QMatrix g(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    g.set(i, i, Rat(BigInt(-e[i])));
    if (i + 1 < e.size()) g.set(i, i + 1, Rat(1));
  }
  return g;
}

std::vector<BigInt> chain_gram_minors(const HjChain& chain) {
  std::vector<BigInt> minors;
  minors.reserve(chain.length());
  BigInt before = 0;  // D_{k-2}, with D_{-1} = 0
  BigInt last = 1;    // D_{k-1}, with D_0 = 1
  for (const auto& e : chain.coeffs()) {
    BigInt d = -e * last - before;
    before = std::move(last);
    last = d;
    minors.push_back(std::move(d));
  }
  return minors;
}

const char* orientation_name(Orientation o) noexcept {
  return o == Orientation::Forward ? "forward" : "reversed";
}

}  // namespace rbd
