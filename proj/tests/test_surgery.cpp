#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "rbd/error.hpp"
#include "rbd/surgery.hpp"

using rbd::BigInt;
using rbd::BlowdownChain;
using rbd::CharNumbers;
using rbd::ManifoldSpec;
using rbd::Rat;
using rbd::SymbolicValue;
using rbd::TriState;

namespace {

rbd::ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const rbd::Error& e) {
    return e.kind();
  }
  FAIL("expected an rbd::Error");
  return rbd::ErrorKind::ParseError;
}

bool has_note(const rbd::BlowdownReport& r, const std::string& prefix) {
  return std::any_of(r.notes.begin(), r.notes.end(), [&](const std::string& s) { return s.rfind(prefix, 0) == 0; });
}

ManifoldSpec elliptic(int n, std::vector<BlowdownChain> chains, rbd::AssertedHypotheses a = {}) {
  return ManifoldSpec{"E(" + std::to_string(n) + ")", CharNumbers(BigInt(12) * n, BigInt(-8) * n), std::move(chains),
                      0, a};
}

}  // namespace

TEST_CASE("rational_blowdown: E(4) with one (-4) curve") {
  rbd::AssertedHypotheses a;
  a.orbifold_canonical_ample = true;
  auto r = rbd::rational_blowdown(elliptic(4, {rbd::blowdown_chain(2, 1)}, a));
  CHECK(r.minimal_char == CharNumbers(47, -31));
  CHECK(r.result_char == CharNumbers(47, -31));
  CHECK(r.minimal_c1sq == 1);
  CHECK(r.result_c1sq == 1);
  CHECK(r.orbifold_route_c1sq == Rat(1));
  CHECK(r.chi_h == 4);
  CHECK(r.total_chain_length == 1);
  CHECK(r.minimal.state == TriState::YesDerived);
  CHECK(r.general_type.state == TriState::YesDerived);
  REQUIRE(r.yamabe);
  CHECK(*r.yamabe == SymbolicValue{-1, Rat(4), 1, 2});
  CHECK(r.curvature_bound == SymbolicValue{1, Rat(32), 2, 1});
  CHECK(r.noether.on_half_noether_line);
  CHECK(r.noether.provably_non_complex);
  CHECK(has_note(r, "the Noether inequality is quoted for even"));
  CHECK(has_note(r, "BMY check uses the conventional form"));
}

TEST_CASE("rational_blowdown: E(8) with one chain of type (6, 1)") {
  auto r = rbd::rational_blowdown(elliptic(8, {rbd::blowdown_chain(6, 1)}));
  CHECK(r.total_chain_length == 5);
  CHECK(r.result_c1sq == 5);
  CHECK(r.result_char.c2() == 91);
  CHECK(r.chi_h == 8);
  // Nothing asserted: no conclusions and no Yamabe value.
  CHECK(r.minimal.state == TriState::Unknown);
  CHECK(r.general_type.state == TriState::Unknown);
  CHECK_FALSE(r.yamabe);
  CHECK(has_note(r, "NotGeneralType"));
  CHECK_FALSE(r.noether.provably_non_complex);
}

TEST_CASE("rational_blowdown: no chains echoes the input") {
  auto r = rbd::rational_blowdown(ManifoldSpec{"K3", CharNumbers(24, -16), {}, 0, {}});
  CHECK(r.result_char == CharNumbers(24, -16));
  CHECK(r.minimal_char == r.input_char);
  CHECK(r.total_chain_length == 0);
  CHECK(r.chains.empty());
  CHECK(r.result_c1sq == 0);
  CHECK(r.general_type.state == TriState::NotApplicable);
  CHECK(r.curvature_bound.is_zero());
}

TEST_CASE("rational_blowdown: c1.omega assertion gives general type only") {
  rbd::AssertedHypotheses a;
  a.c1_dot_omega_negative = true;
  auto r = rbd::rational_blowdown(elliptic(6, {rbd::blowdown_chain(4, 1)}, a));
  CHECK(r.general_type.state == TriState::YesDerived);
  CHECK(r.minimal.state == TriState::Unknown);
  REQUIRE(r.yamabe);
  CHECK(*r.yamabe == rbd::yamabe_general_type(3));
  CHECK(has_note(r, "Yamabe value uses c1^2(N)"));
  CHECK_FALSE(r.noether.provably_non_complex);
}

TEST_CASE("rational_blowdown: asserted ampleness with c1^2 <= 0 is not applicable") {
  rbd::AssertedHypotheses a;
  a.orbifold_canonical_ample = true;
  auto r = rbd::rational_blowdown(ManifoldSpec{"K3", CharNumbers(24, -16), {}, 0, a});
  CHECK(r.minimal.state == TriState::NotApplicable);
  CHECK(r.general_type.state == TriState::NotApplicable);
  CHECK_FALSE(r.yamabe);
}

TEST_CASE("rational_blowdown: b+ = 1 note") {
  // Elliptic surface E(1): chi 12, tau -8, b+ 1.
  auto r = rbd::rational_blowdown(elliptic(1, {rbd::blowdown_chain(2, 1)}));
  CHECK(r.minimal_char.b_plus() == 1);
  CHECK(has_note(r, "b+ = 1"));
}

TEST_CASE("rational_blowdown: the reversed orientation is recorded") {
  auto chain = rbd::blowdown_chain(3, 1);
  auto r = rbd::rational_blowdown(elliptic(4, {chain}));
  REQUIRE(r.chains.size() == 1);
  CHECK(r.chains[0].n == 3);
  CHECK(r.chains[0].m == 1);
  REQUIRE(r.chains[0].alternate);
  CHECK(*r.chains[0].alternate == rbd::BlowdownMatch{3, 2, rbd::Orientation::Reversed});
}

TEST_CASE("rational_blowdown errors") {
  BlowdownChain wrong{3, 1, rbd::HjChain({BigInt(3), BigInt(3)})};
  CHECK(kind_of([&] { rbd::rational_blowdown(elliptic(4, {wrong})); }) == rbd::ErrorKind::UnrecognizedChain);
  BlowdownChain bad_type{4, 2, rbd::HjChain({BigInt(4)})};
  CHECK(kind_of([&] { rbd::rational_blowdown(elliptic(4, {bad_type})); }) == rbd::ErrorKind::UnrecognizedChain);
  // Removing a length-5 chain from a manifold with b- = 3 leaves b- negative.
  ManifoldSpec small{"small", CharNumbers(6, -2), {rbd::blowdown_chain(6, 1)}, 0, {}};
  CHECK(kind_of([&] { rbd::rational_blowdown(small); }) == rbd::ErrorKind::ParityViolation);
}

TEST_CASE("en_family examples") {
  auto [s4, r4] = rbd::en_family(4, rbd::EnMode::OneChain);
  CHECK(s4.char_numbers == CharNumbers(48, -32));
  CHECK(s4.asserted.orbifold_canonical_ample);
  CHECK(r4.result_c1sq == 1);
  CHECK(r4.result_char.c2() == 47);
  CHECK(r4.chi_h == 4);
  CHECK(r4.noether.on_half_noether_line);
  CHECK(r4.noether.provably_non_complex);
  REQUIRE(r4.yamabe);
  CHECK(*r4.yamabe == SymbolicValue{-1, Rat(4), 1, 2});

  auto [b4s, b4] = rbd::en_family(4, rbd::EnMode::BothChains);
  CHECK(b4s.chains.size() == 2);
  CHECK_FALSE(b4s.asserted.orbifold_canonical_ample);
  CHECK(b4.result_c1sq == 2);
  CHECK(b4.result_char.c2() == 46);
  CHECK(b4.chi_h == 4);
  CHECK(b4.noether.on_noether_line);

  auto [s10, r10] = rbd::en_family(10, rbd::EnMode::OneChain);
  CHECK(s10.chains[0].chain.length() == 7);
  CHECK(r10.result_c1sq == 7);
  CHECK(r10.result_char.c2() == 113);
  CHECK(r10.chi_h == 10);

  CHECK(kind_of([] { rbd::en_family(3, rbd::EnMode::OneChain); }) == rbd::ErrorKind::InvalidParameters);
}

TEST_CASE("property: E(n) families lie on the half-Noether and Noether lines") {
  for (int n = 4; n <= 50; ++n) {
    auto one = rbd::en_family(n, rbd::EnMode::OneChain).second;
    CHECK(one.result_c1sq == one.chi_h - 3);
    auto both = rbd::en_family(n, rbd::EnMode::BothChains).second;
    CHECK(both.result_c1sq == 2 * both.chi_h - 6);
  }
}

TEST_CASE("verify_prop41 examples") {
  auto r5 = rbd::verify_prop41(5);
  CHECK(r5.passed());
  CHECK(r5.fiber_image_sq == Rat(2, 9));
  CHECK(r5.canonical_sq == Rat(2));
  CHECK(r5.coefficients == std::vector<Rat>{Rat(2, 9), Rat(1, 9)});
  REQUIRE(r5.nakai.pairings.size() == 3);
  CHECK(r5.nakai.pairings[0].second == Rat(1));
  CHECK(r5.nakai.pairings[1].second == Rat(1, 9));
  CHECK(r5.nakai.pairings[2].second == Rat(1, 9));
  CHECK(r5.nakai.ample_evidence);

  auto r6 = rbd::verify_prop41(6);
  CHECK(r6.passed());
  CHECK(r6.fiber_image_sq == Rat(3, 16));
  CHECK(r6.canonical_sq == Rat(3));
  CHECK(r6.nakai.pairings[1].second == Rat(1, 16));
  CHECK(r6.nakai.pairings[2].second == Rat(2, 16));

  auto r40 = rbd::verify_prop41(40);
  CHECK(r40.passed());
  CHECK(r40.canonical_sq == Rat(37));

  CHECK(kind_of([] { rbd::verify_prop41(4); }) == rbd::ErrorKind::InvalidParameters);
}

TEST_CASE("gompf_x4") {
  auto g = rbd::gompf_x4();
  CHECK(g.passed());
  CHECK(g.coefficients == std::vector<Rat>{Rat(1, 4)});
  CHECK(g.fiber_image_sq == Rat(1, 4));
  CHECK(g.canonical_sq == Rat(1));
}

namespace {

// Random simply connected input with integral Todd genus and enough b- to
// absorb the chains.
ManifoldSpec random_spec(std::mt19937& rng, rbd::AssertedHypotheses a) {
  std::uniform_int_distribution<int> chain_count(0, 3);
  std::uniform_int_distribution<int> nd(2, 12);
  std::uniform_int_distribution<int> bp(1, 15);
  std::vector<BlowdownChain> chains;
  std::uint64_t k = 0;
  int count = chain_count(rng);
  for (int i = 0; i < count; ++i) {
    int n = nd(rng);
    std::vector<int> ms;
    for (int m = 1; m < n; ++m)
      if (std::gcd(n, m) == 1) ms.push_back(m);
    int m = ms[std::uniform_int_distribution<std::size_t>(0, ms.size() - 1)(rng)];
    chains.push_back(rbd::blowdown_chain(n, m));
    k += chains.back().chain.length();
  }
  int plus = 2 * bp(rng) + 1;
  int minus = static_cast<int>(k) + std::uniform_int_distribution<int>(0, 30)(rng);
  // chi + tau = 2 + 2 b+ must be divisible by 4 for an integral Todd genus.
  if ((2 + 2 * plus) % 4 != 0) ++plus;
  return ManifoldSpec{"random", CharNumbers(2 + plus + minus, plus - minus), chains, 0, a};
}

}  // namespace

TEST_CASE("property: both c1^2 routes agree and chains of type (n, 1) add n - 1") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    ManifoldSpec spec = random_spec(rng, {});
    spec.extra_blowups = static_cast<std::uint64_t>(trial % 4);
    auto r = rbd::rational_blowdown(spec);
    CHECK(r.orbifold_route_c1sq == Rat(r.result_c1sq));
    CHECK(r.minimal_c1sq - rbd::c1_squared(spec.char_numbers) == r.total_chain_length);
  }
  for (int n = 2; n <= 30; ++n) {
    ManifoldSpec spec = elliptic(n + 1, {rbd::blowdown_chain(n, 1)});
    auto r = rbd::rational_blowdown(spec);
    CHECK(r.result_c1sq - rbd::c1_squared(spec.char_numbers) == n - 1);
    CHECK(r.result_char.c2() - spec.char_numbers.c2() == -(n - 1));
  }
}

TEST_CASE("property: Yamabe squares of M and N differ by 32 pi^2 times the chain length") {
  std::mt19937 rng(11);
  rbd::AssertedHypotheses a;
  a.orbifold_canonical_ample = true;
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    ManifoldSpec spec = random_spec(rng, a);
    BigInt before = rbd::c1_squared(spec.char_numbers);
    if (before <= 0) continue;
    auto r = rbd::rational_blowdown(spec);
    REQUIRE(r.yamabe);
    SymbolicValue ym = rbd::yamabe_general_type(before).squared();
    SymbolicValue yn = r.yamabe->squared();
    Rat diff = yn.coefficient * Rat(yn.radicand) - ym.coefficient * Rat(ym.radicand);
    CHECK(diff == Rat(BigInt(32) * r.total_chain_length));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("property: extra blowups lower c1^2 and leave the Yamabe value") {
  for (int n = 5; n <= 12; ++n) {
    ManifoldSpec spec = rbd::en_family(n, rbd::EnMode::OneChain).first;
    auto base = rbd::rational_blowdown(spec);
    for (std::uint64_t l = 0; l <= 20; ++l) {
      spec.extra_blowups = l;
      auto r = rbd::rational_blowdown(spec);
      CHECK(r.result_c1sq == base.result_c1sq - l);
      CHECK(r.minimal_c1sq == base.minimal_c1sq);
      REQUIRE(r.yamabe);
      CHECK(*r.yamabe == *base.yamabe);
      CHECK(r.curvature_bound == base.curvature_bound);
      CHECK(r.orbifold_route_c1sq == Rat(r.result_c1sq));
    }
  }
}
