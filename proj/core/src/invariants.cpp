#include "rbd/invariants.hpp"

#include "rbd/error.hpp"
#include "rbd/hjcf.hpp"

namespace rbd {

CharNumbers::CharNumbers(BigInt euler, BigInt signature, BigInt b1)
    : euler_(std::move(euler)), signature_(std::move(signature)), b1_(std::move(b1)) {
  if (b1_ < 0) throw Error(ErrorKind::ParityViolation, "b1 must be non-negative");
  BigInt twice_bplus = b2() + signature_;
  auto describe = [this] {
    return "(chi = " + euler_.str() + ", tau = " + signature_.str() + ", b1 = " + b1_.str() + ")";
  };
  if (twice_bplus % 2 != 0) {
    throw Error(ErrorKind::ParityViolation, "b+ is not an integer for " + describe());
  }
  if (b_plus() < 0 || b_minus() < 0) {
    throw Error(ErrorKind::ParityViolation, "negative b+ or b- for " + describe());
  }
}

BigInt c1_squared(const CharNumbers& c) { return 2 * c.euler() + 3 * c.signature(); }

BigInt todd_genus(const CharNumbers& c) {
  BigInt sum = c.c2() + c1_squared(c);
  if (sum % 12 != 0) {
    throw Error(ErrorKind::NonIntegralToddGenus, "c2 + c1^2 = " + sum.str() + " is not divisible by 12");
  }
  return sum / 12;
}

OrbifoldCharNumbers orbifold_correction(const CharNumbers& c, const std::vector<SingularityType>& sings) {
  OrbifoldCharNumbers out{Rat(c.euler()), Rat(c.signature())};
  for (const auto& s : sings) {
    if (s.n <= 1 || s.m <= 0 || s.m >= s.n || gcd(s.n, s.m) != 1) {
      throw Error(ErrorKind::InvalidParameters,
                  "singularity type needs 0 < m < n coprime, got (" + s.n.str() + ", " + s.m.str() + ")");
    }
    BigInt order = s.n * s.n;  // |Gamma|
    out.chi_orb -= Rat(order - 1, order);
    out.tau_orb += eta_invariant(s.n);
  }
  return out;
}

NoetherReport noether_classify(const CharNumbers& c, bool minimal) {
  NoetherReport r;
  r.c1_squared = c1_squared(c);
  r.chi_h = todd_genus(c);
  const BigInt& k2 = r.c1_squared;
  r.satisfies_noether = 5 * k2 - c.c2() + 36 >= 0;
  r.on_noether_line = k2 == 2 * r.chi_h - 6;
  r.on_half_noether_line = k2 > 0 && k2 == r.chi_h - 3;
  r.satisfies_bmy = k2 <= 9 * r.chi_h;
  r.minimality_asserted = minimal;
  r.applicable = minimal && k2 > 0;
  r.provably_non_complex = r.applicable && !r.satisfies_noether;
  r.c1_squared_even = k2 % 2 == 0;
  return r;
}

SymbolicValue yamabe_general_type(const BigInt& c1sq_min) {
  if (c1sq_min <= 0) {
    throw Error(ErrorKind::NotGeneralType, "minimal-model c1^2 = " + c1sq_min.str() + " is not positive");
  }
  return canonicalize(SymbolicValue{-1, Rat(4), 1, 2 * c1sq_min});
}

SymbolicValue orbifold_ball_yamabe(const BigInt& n) {
  if (n < 2) throw Error(ErrorKind::InvalidParameters, "orbifold ball needs n >= 2, got " + n.str());
  return canonicalize(SymbolicValue{1, Rat(BigInt(8), n), 1, 6});
}

SymbolicValue curvature_lower_bound(const BigInt& c1sq_min) {
  if (c1sq_min < 0) {
    throw Error(ErrorKind::InvalidParameters, "curvature bound needs c1^2 >= 0, got " + c1sq_min.str());
  }
  return canonicalize(SymbolicValue{1, Rat(32 * c1sq_min), 2, 1});
}

CharNumbers blow_up(const CharNumbers& c, std::uint64_t l) {
  return CharNumbers(c.euler() + l, c.signature() - l, c.b1());
}

}  // namespace rbd
