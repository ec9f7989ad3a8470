#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "rbd/error.hpp"
#include "rbd/hjcf.hpp"

using rbd::BigInt;
using rbd::CyclicSingularity;
using rbd::HjChain;
using rbd::Orientation;
using rbd::Rat;

namespace {

HjChain chain(std::initializer_list<int> v) {
  std::vector<BigInt> c(v.begin(), v.end());
  return HjChain(std::move(c));
}

rbd::ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const rbd::Error& e) {
    return e.kind();
  }
  FAIL("expected an rbd::Error");
  return rbd::ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("hj_expand examples") {
  CHECK(rbd::hj_expand(CyclicSingularity(4, 1)) == chain({4}));
  CHECK(rbd::hj_expand(CyclicSingularity(9, 2)) == chain({5, 2}));
  CHECK(rbd::hj_expand(CyclicSingularity(25, 9)) == chain({3, 5, 2}));
}

TEST_CASE("invalid singularities") {
  CHECK(kind_of([] { CyclicSingularity(4, 2); }) == rbd::ErrorKind::InvalidSingularity);
  CHECK(kind_of([] { CyclicSingularity(5, 5); }) == rbd::ErrorKind::InvalidSingularity);
  CHECK(kind_of([] { CyclicSingularity(5, 0); }) == rbd::ErrorKind::InvalidSingularity);
  CHECK(kind_of([] { CyclicSingularity(1, 0); }) == rbd::ErrorKind::InvalidSingularity);
}

TEST_CASE("hj_evaluate examples") {
  CHECK(rbd::hj_evaluate(chain({4})) == CyclicSingularity(4, 1));
  CHECK(rbd::hj_evaluate(chain({5, 2})) == CyclicSingularity(9, 2));
  CHECK(rbd::hj_evaluate(chain({2, 5})) == CyclicSingularity(9, 5));
  CHECK(kind_of([] { chain({3, 1}); }) == rbd::ErrorKind::InvalidChain);
  CHECK(kind_of([] { HjChain({}); }) == rbd::ErrorKind::InvalidChain);
}

TEST_CASE("blowdown_chain examples") {
  CHECK(rbd::blowdown_chain(2, 1).chain == chain({4}));
  auto c41 = rbd::blowdown_chain(4, 1);
  CHECK(c41.chain == chain({6, 2, 2}));
  CHECK(c41.chain.length() == 3);
  CHECK(rbd::blowdown_chain(5, 2).chain == chain({3, 5, 2}));
  CHECK(kind_of([] { rbd::blowdown_chain(4, 2); }) == rbd::ErrorKind::InvalidParameters);
  CHECK(kind_of([] { rbd::blowdown_chain(3, 3); }) == rbd::ErrorKind::InvalidParameters);
  CHECK(kind_of([] { rbd::blowdown_chain(1, 0); }) == rbd::ErrorKind::InvalidParameters);
}

TEST_CASE("recognize_blowdown examples") {
  auto r = rbd::recognize_blowdown(chain({5, 2}));
  REQUIRE(r.best);
  CHECK(*r.best == rbd::BlowdownMatch{3, 1, Orientation::Forward});
  REQUIRE(r.alternate);
  CHECK(*r.alternate == rbd::BlowdownMatch{3, 2, Orientation::Reversed});

  r = rbd::recognize_blowdown(chain({2, 5}));
  REQUIRE(r.best);
  CHECK(*r.best == rbd::BlowdownMatch{3, 2, Orientation::Forward});

  CHECK_FALSE(rbd::recognize_blowdown(chain({2})));
  CHECK_FALSE(rbd::recognize_blowdown(chain({3, 3})));

  // Palindromes carry no alternate.
  r = rbd::recognize_blowdown(chain({4}));
  REQUIRE(r.best);
  CHECK_FALSE(r.alternate);
}

TEST_CASE("a reversed blowdown chain is the (n, n - m) chain") {
  auto r = rbd::recognize_blowdown(chain({2, 2, 6}));
  REQUIRE(r.best);
  CHECK(*r.best == rbd::BlowdownMatch{4, 3, Orientation::Forward});
  REQUIRE(r.alternate);
  CHECK(*r.alternate == rbd::BlowdownMatch{4, 1, Orientation::Reversed});
}

TEST_CASE("eta invariant") {
  CHECK(rbd::eta_invariant(2) == Rat(1, 2));
  CHECK(rbd::eta_invariant(3) == Rat(16, 27));
  CHECK(rbd::eta_invariant(BigInt(1000000)) < Rat(2, 3));
  CHECK(kind_of([] { rbd::eta_invariant(1); }) == rbd::ErrorKind::InvalidParameters);
}

TEST_CASE("chain_gram examples") {
  CHECK(rbd::chain_gram(chain({4})) == rbd::QMatrix{{Rat(-4)}});
  rbd::QMatrix g = rbd::chain_gram(chain({5, 2}));
  CHECK(g == rbd::QMatrix{{Rat(-5), Rat(1)}, {Rat(1), Rat(-2)}});
  CHECK(rbd::is_negative_definite(g));

  // (-6)(-2)(-2) cofactor expansion: -6*(4 - 1) - 1*(-2) = -16 = -p with p = 16.
  rbd::QMatrix g3 = rbd::chain_gram(chain({6, 2, 2}));
  CHECK(oracle::leibniz_det(oracle::rows_of(g3, 3)) == Rat(-16));
  CHECK(rbd::determinant(g3) == Rat(-16));
}

TEST_CASE("continuant minors agree with dense minors and the Leibniz oracle") {
  for (int p = 2; p <= 40; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      HjChain c = rbd::hj_expand(CyclicSingularity(p, q));
      auto fast = rbd::chain_gram_minors(c);
      rbd::QMatrix g = rbd::chain_gram(c);
      auto dense = rbd::leading_principal_minors(g);
      REQUIRE(fast.size() == dense.size());
      for (std::size_t k = 0; k < fast.size(); ++k) CHECK(Rat(fast[k]) == dense[k]);
      if (c.length() <= 7) CHECK(oracle::leibniz_det(oracle::rows_of(g, c.length())) == Rat(fast.back()));
      CHECK(abs(fast.back()) == p);
      CHECK(rbd::is_negative_definite(g));
    }
  }
}

TEST_CASE("property: expand/evaluate round trip for p <= 300") {
  for (int p = 2; p <= 300; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      HjChain c = rbd::hj_expand(CyclicSingularity(p, q));
      CHECK(rbd::hj_evaluate(c) == CyclicSingularity(p, q));
    }
  }
}

TEST_CASE("property: m = 1 chains are [n+2, 2, ..., 2]") {
  for (int n = 2; n <= 40; ++n) {
    std::vector<BigInt> expected(static_cast<std::size_t>(n - 1), BigInt(2));
    expected[0] = n + 2;
    CHECK(rbd::blowdown_chain(n, 1).chain == HjChain(expected));
  }
}

TEST_CASE("reversed chain encodes the conjugate fraction") {
  for (int p = 3; p <= 60; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto fwd = rbd::hj_evaluate(rbd::hj_expand(CyclicSingularity(p, q)).reversed());
      CHECK(fwd.p() == p);
      CHECK((fwd.q() * q) % p == 1 % p);
    }
  }
}
