#pragma once

// Characteristic numbers of closed oriented 4-manifolds and the
// quantities derived from them: c1^2 = 2 chi + 3 tau, c2 = chi, the Todd
// genus, orbifold corrections at blowdown-type singular points, the
// Noether lines, and the closed-form Yamabe and curvature values.

#include <cstdint>
#include <vector>

#include "rbd/exactnum.hpp"
#include "rbd/symbolic.hpp"

namespace rbd {

// (chi, tau, b1). The derived b+ = (chi - 2 + 2 b1 + tau)/2 and
// b- = b+ - tau must be non-negative integers; the constructor throws
// ParityViolation otherwise.
class CharNumbers {
 public:
  // The 4-sphere.
  CharNumbers() : euler_(2), signature_(0), b1_(0) {}
  CharNumbers(BigInt euler, BigInt signature, BigInt b1 = 0);

  const BigInt& euler() const noexcept { return euler_; }
  const BigInt& signature() const noexcept { return signature_; }
  const BigInt& b1() const noexcept { return b1_; }

  BigInt c2() const { return euler_; }
  BigInt b2() const { return euler_ - 2 + 2 * b1_; }
  BigInt b_plus() const { return (b2() + signature_) / 2; }
  BigInt b_minus() const { return b_plus() - signature_; }

  friend bool operator==(const CharNumbers&, const CharNumbers&) = default;

 private:
  BigInt euler_;
  BigInt signature_;
  BigInt b1_;
};

struct OrbifoldCharNumbers {
  Rat chi_orb;
  Rat tau_orb;

  Rat c1_squared() const { return Rat(2) * chi_orb + Rat(3) * tau_orb; }
  friend bool operator==(const OrbifoldCharNumbers&, const OrbifoldCharNumbers&) = default;
};

// A singular point of type 1/n^2(1, nm - 1).
struct SingularityType {
  BigInt n;
  BigInt m;
};

struct NoetherReport {
  BigInt c1_squared;
  BigInt chi_h;
  bool satisfies_noether = false;      // 5 c1^2 - c2 + 36 >= 0
  bool on_noether_line = false;        // c1^2 = 2 chi_h - 6
  bool on_half_noether_line = false;   // c1^2 = chi_h - 3, c1^2 > 0
  bool satisfies_bmy = false;          // conventional c1^2 <= 9 chi_h
  bool provably_non_complex = false;
  // The Noether test is meaningful for minimal surfaces with c1^2 > 0.
  bool applicable = false;
  bool minimality_asserted = false;
  // The inequality is quoted for even c1^2; odd values are flagged only.
  bool c1_squared_even = false;

  friend bool operator==(const NoetherReport&, const NoetherReport&) = default;
};

BigInt c1_squared(const CharNumbers& c);

// (c2 + c1^2)/12. Throws NonIntegralToddGenus when not an integer.
BigInt todd_genus(const CharNumbers& c);

OrbifoldCharNumbers orbifold_correction(const CharNumbers& c, const std::vector<SingularityType>& sings);

// `minimal` is the caller's assertion that the manifold is minimal; without
// it provably_non_complex stays false.
NoetherReport noether_classify(const CharNumbers& c, bool minimal);

// -4 pi sqrt(2 c1^2) of the minimal model. Throws NotGeneralType if c1sq <= 0.
SymbolicValue yamabe_general_type(const BigInt& c1sq_min);

// 8 pi sqrt(6) / n. Throws InvalidParameters if n < 2.
SymbolicValue orbifold_ball_yamabe(const BigInt& n);

// 32 pi^2 c1^2, the lower bound on the L2 norm of scalar curvature.
SymbolicValue curvature_lower_bound(const BigInt& c1sq_min);

// Connected sum with l copies of the reversed projective plane.
CharNumbers blow_up(const CharNumbers& c, std::uint64_t l);

}  // namespace rbd
