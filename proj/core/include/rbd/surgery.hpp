#pragma once

// Rational blowdown of blowdown-type chains in a 4-manifold, with the
// built-in E(n) examples.
//
// Conclusions that depend on analytic input (ampleness of the orbifold
// canonical sheaf, the sign of c1.[omega]) are never computed; the caller
// asserts them and the report records which assertion licensed which
// conclusion.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbd/exactnum.hpp"
#include "rbd/hjcf.hpp"
#include "rbd/invariants.hpp"
#include "rbd/lattice.hpp"
#include "rbd/symbolic.hpp"

namespace rbd {

struct AssertedHypotheses {
  bool kaehler = false;
  bool orbifold_canonical_ample = false;  // K of the collapsed orbifold M-hat' is ample
  bool c1_dot_omega_negative = false;     // c1(M-hat).[omega] < 0

  friend bool operator==(const AssertedHypotheses&, const AssertedHypotheses&) = default;
};

struct ManifoldSpec {
  std::string name;
  CharNumbers char_numbers;
  std::vector<BlowdownChain> chains;
  std::uint64_t extra_blowups = 0;
  AssertedHypotheses asserted;
};

enum class TriState { YesDerived, Unknown, NotApplicable };

const char* tri_state_name(TriState t) noexcept;

struct Conclusion {
  TriState state = TriState::Unknown;
  std::string basis;  // which hypothesis licensed the conclusion, or why not

  friend bool operator==(const Conclusion&, const Conclusion&) = default;
};

struct ChainSummary {
  BigInt n;
  BigInt m;
  std::vector<BigInt> coeffs;
  // Match of the opposite orientation, when the chain reads as a blowdown
  // chain both ways.
  std::optional<BlowdownMatch> alternate;

  friend bool operator==(const ChainSummary&, const ChainSummary&) = default;
};

// Result of blowing down every chain of `spec` and then adding
// `extra_blowups` reversed projective planes.
//
// minimal_char is the blowdown N itself; result_char is N # l CP2-bar.
// result_c1sq and orbifold_route_c1sq both describe result_char and are
// computed independently (Mayer-Vietoris bookkeeping vs. the orbifold
// Euler characteristic and eta-invariant correction).
struct BlowdownReport {
  std::string name;
  CharNumbers input_char;
  std::vector<ChainSummary> chains;
  std::uint64_t total_chain_length = 0;
  std::uint64_t extra_blowups = 0;
  CharNumbers minimal_char;
  CharNumbers result_char;
  BigInt minimal_c1sq;
  BigInt result_c1sq;
  Rat orbifold_route_c1sq;
  BigInt chi_h;
  Conclusion minimal;
  Conclusion general_type;
  std::optional<SymbolicValue> yamabe;
  SymbolicValue curvature_bound;
  NoetherReport noether;
  std::vector<std::string> notes;

  friend bool operator==(const BlowdownReport&, const BlowdownReport&) = default;
};

// Throws UnrecognizedChain, ParityViolation, NonIntegralToddGenus.
BlowdownReport rational_blowdown(const ManifoldSpec& spec);

enum class EnMode { OneChain, BothChains };

// E(n), n >= 4: chi = 12n, tau = -8n, with one or both (-n, -2, ..., -2)
// chains of type (n - 2, 1) blown down.
std::pair<ManifoldSpec, BlowdownReport> en_family(int n, EnMode mode);

struct CheckLine {
  std::string quantity;
  Rat expected;
  Rat actual;
  bool pass() const { return expected == actual; }
};

// Divisor computation on the orbifold obtained from E(n) by collapsing one
// chain: pullback coefficients of the image fiber, its square, K^2 and the
// Nakai pairings, each checked against the closed form.
struct Prop41Report {
  int n = 0;
  std::vector<std::string> chain;
  std::vector<Rat> coefficients;
  Rat fiber_image_sq;
  Rat canonical_sq;
  NakaiReport nakai;
  std::vector<CheckLine> checks;

  bool passed() const;
};

// n >= 5. Throws InvalidParameters.
Prop41Report verify_prop41(int n);

// The n = 4 case: a single (-4) curve collapsed to 1/4(1,1).
Prop41Report gompf_x4();

}  // namespace rbd
