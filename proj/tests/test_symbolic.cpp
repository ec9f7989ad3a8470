#include <doctest.h>

#include <random>

#include "rbd/error.hpp"
#include "rbd/symbolic.hpp"

using rbd::BigInt;
using rbd::Rat;
using rbd::SymbolicValue;

// Decimal expectations below were computed independently with mpmath at 50
// digits and truncated to 12 significant digits.

TEST_CASE("canonicalize extracts square factors from the radicand") {
  SymbolicValue v = rbd::canonicalize({-1, Rat(4), 1, 8});
  CHECK(v.sign == -1);
  CHECK(v.coefficient == Rat(8));
  CHECK(v.pi_power == 1);
  CHECK(v.radicand == 2);

  SymbolicValue w = rbd::canonicalize({-1, Rat(4), 1, 2});
  CHECK(w.coefficient == Rat(4));
  CHECK(w.radicand == 2);

  SymbolicValue big = rbd::canonicalize({1, Rat(1, 3), 0, BigInt(2 * 2 * 3 * 3 * 3 * 7 * 7)});
  CHECK(big.coefficient == Rat(42, 3));
  CHECK(big.radicand == 3);
}

TEST_CASE("zero has one canonical form") {
  SymbolicValue a = rbd::canonicalize({1, Rat(0), 2, 5});
  SymbolicValue b = rbd::canonicalize({-1, Rat(3), 1, 0});
  SymbolicValue c = rbd::canonicalize({0, Rat(7), 0, 1});
  CHECK(a == b);
  CHECK(b == c);
  CHECK(a.sign == 0);
  CHECK(a.is_zero());
  CHECK(rbd::to_decimal(a) == "0");
  CHECK(a.to_string() == "0");
}

TEST_CASE("negative coefficients fold into the sign") {
  SymbolicValue v = rbd::canonicalize({1, Rat(-2), 0, 1});
  CHECK(v.sign == -1);
  CHECK(v.coefficient == Rat(2));
  CHECK_THROWS_AS(rbd::canonicalize({1, Rat(1), 0, BigInt(-3)}), rbd::Error);
}

TEST_CASE("decimal rendering truncates at the requested precision") {
  CHECK(rbd::to_decimal({-1, Rat(4), 1, 2}) == "-17.7715317526");
  CHECK(rbd::to_decimal({1, Rat(32), 2, 1}) == "315.827340834");
  CHECK(rbd::to_decimal({1, Rat(4), 1, 6}) == "30.7811959238");
  CHECK(rbd::to_decimal({1, Rat(8, 3), 1, 6}) == "20.5207972825");
  CHECK(rbd::to_decimal({1, Rat(160), 2, 1}) == "1579.13670417");
  CHECK(rbd::to_decimal({-1, Rat(4), 1, 2}, 3) == "-17.7");
  CHECK(rbd::to_decimal({1, Rat(1, 1000), 0, 1}, 4) == "0.001000");
  CHECK(rbd::to_decimal({1, Rat(123456), 0, 1}, 3) == "123000");
  CHECK(rbd::to_decimal({1, Rat(1), 0, 1}, 1) == "1");
  CHECK(rbd::to_decimal({1, Rat(8), 1, 1}, 20) == "25.132741228718345907");
  CHECK_THROWS_AS(rbd::to_decimal({1, Rat(1), 0, 1}, 0), rbd::Error);
}

TEST_CASE("to_string") {
  CHECK(SymbolicValue{-1, Rat(4), 1, 2}.to_string() == "-4*pi*sqrt(2)");
  CHECK(SymbolicValue{1, Rat(8, 3), 1, 6}.to_string() == "8/3*pi*sqrt(6)");
  CHECK(SymbolicValue{1, Rat(160), 2, 1}.to_string() == "160*pi^2");
  CHECK(SymbolicValue{-1, Rat(1), 1, 1}.to_string() == "-pi");
  CHECK(SymbolicValue{1, Rat(5), 0, 1}.to_string() == "5");
}

TEST_CASE("squared") {
  SymbolicValue y{-1, Rat(4), 1, 2};
  CHECK(y.squared() == SymbolicValue{1, Rat(32), 2, 1});
}

TEST_CASE("property: canonicalize is idempotent and equality is an equivalence") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> sign(-1, 1);
  std::uniform_int_distribution<int> num(0, 12);
  std::uniform_int_distribution<int> den(1, 6);
  std::uniform_int_distribution<int> pw(0, 3);
  std::uniform_int_distribution<int> rad(0, 200);
  std::vector<SymbolicValue> values;
  for (int i = 0; i < 400; ++i) {
    values.push_back({sign(rng), Rat(BigInt(num(rng)), BigInt(den(rng))), static_cast<unsigned>(pw(rng)),
                      BigInt(rad(rng))});
  }
  for (const auto& v : values) {
    SymbolicValue c = rbd::canonicalize(v);
    SymbolicValue cc = rbd::canonicalize(c);
    CHECK(c.sign == cc.sign);
    CHECK(c.coefficient == cc.coefficient);
    CHECK(c.pi_power == cc.pi_power);
    CHECK(c.radicand == cc.radicand);
    CHECK(v == v);
    CHECK(v == c);
  }
  for (std::size_t i = 0; i + 2 < values.size(); i += 3) {
    const auto& a = values[i];
    const auto& b = values[i + 1];
    const auto& c = values[i + 2];
    CHECK((a == b) == (b == a));
    if (a == b && b == c) CHECK(a == c);
  }
  // A scaled radicand with compensating coefficient is the same value.
  CHECK(SymbolicValue{1, Rat(3), 1, 50} == SymbolicValue{1, Rat(15), 1, 2});
}
