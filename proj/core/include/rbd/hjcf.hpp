#pragma once

// Hirzebruch-Jung continued fractions
//
//   p/q = e1 - 1/(e2 - 1/(... - 1/ek)),   ei >= 2,
//
// and the chains of rational curves with self-intersections -e1, ..., -ek
// that resolve the cyclic quotient singularity 1/p(1, q). The rational
// blowdown family 1/n^2(1, nm - 1) is recognized here.

#include <optional>
#include <string>
#include <vector>

#include "rbd/exactnum.hpp"

namespace rbd {

// 1/p(1, q) with 0 < q < p and gcd(p, q) = 1.
class CyclicSingularity {
 public:
  // Throws InvalidSingularity.
  CyclicSingularity(BigInt p, BigInt q);

  const BigInt& p() const noexcept { return p_; }
  const BigInt& q() const noexcept { return q_; }

  friend bool operator==(const CyclicSingularity&, const CyclicSingularity&) = default;

 private:
  BigInt p_;
  BigInt q_;
};

// Nonempty list of integers, each >= 2, in expansion order.
class HjChain {
 public:
  // Throws InvalidChain.
  explicit HjChain(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  std::size_t length() const noexcept { return coeffs_.size(); }
  HjChain reversed() const;
  std::string to_string() const;  // "[5, 2]"

  friend bool operator==(const HjChain&, const HjChain&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

// Chain resolving 1/n^2(1, nm - 1); 0 < m < n, gcd(n, m) = 1.
struct BlowdownChain {
  BigInt n;
  BigInt m;
  HjChain chain;

  friend bool operator==(const BlowdownChain&, const BlowdownChain&) = default;
};

enum class Orientation { Forward, Reversed };

struct BlowdownMatch {
  BigInt n;
  BigInt m;
  Orientation orientation;

  friend bool operator==(const BlowdownMatch&, const BlowdownMatch&) = default;
};

// `best` prefers the chain as given. `alternate` carries the match on the
// reversed chain when both orientations are blowdown-type and the chain is
// not a palindrome; (n, m) and (n, n - m) chains are reversals of each other.
struct Recognition {
  std::optional<BlowdownMatch> best;
  std::optional<BlowdownMatch> alternate;

  explicit operator bool() const noexcept { return best.has_value(); }
};

HjChain hj_expand(const CyclicSingularity& s);
CyclicSingularity hj_evaluate(const HjChain& chain);

// Throws InvalidParameters unless 0 < m < n and gcd(n, m) = 1.
BlowdownChain blowdown_chain(const BigInt& n, const BigInt& m);
Recognition recognize_blowdown(const HjChain& chain);

// Eta invariant of the link of 1/n^2(1, nm - 1): (2/3)(1 - 1/n^2).
Rat eta_invariant(const BigInt& n);

// Tridiagonal intersection matrix: -ei on the diagonal, 1 between neighbours.
QMatrix chain_gram(const HjChain& chain);

// Leading principal minors of chain_gram by the three-term continuant
// recurrence D_k = -e_k D_{k-1} - D_{k-2}. Linear in the chain length, so
// usable on chains far too long for dense elimination.
std::vector<BigInt> chain_gram_minors(const HjChain& chain);

const char* orientation_name(Orientation o) noexcept;

}  // namespace rbd
