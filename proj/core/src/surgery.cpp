#include "rbd/surgery.hpp"

#include <stdexcept>

#include "rbd/error.hpp"

namespace rbd {

const char* tri_state_name(TriState t) noexcept {
  switch (t) {
    case TriState::YesDerived: return "yes-derived";
    case TriState::Unknown: return "unknown";
    case TriState::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

namespace {

void validate_chain(const BlowdownChain& c, std::size_t index) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::UnrecognizedChain,
                "chain " + std::to_string(index) + " " + c.chain.to_string() + ": " + why);
  };
  if (c.n <= 1 || c.m <= 0 || c.m >= c.n || gcd(c.n, c.m) != 1) {
    fail("type (" + c.n.str() + ", " + c.m.str() + ") is not 0 < m < n coprime");
  }
  CyclicSingularity s = hj_evaluate(c.chain);
  if (s.p() != c.n * c.n || s.q() != c.n * c.m - 1) {
    fail("evaluates to " + s.p().str() + "/" + s.q().str() + ", not the blowdown type (" + c.n.str() + ", " +
         c.m.str() + ")");
  }
}

}  // namespace

BlowdownReport rational_blowdown(const ManifoldSpec& spec) {
  BlowdownReport r;
  r.name = spec.name;
  r.input_char = spec.char_numbers;
  r.extra_blowups = spec.extra_blowups;
  const auto& in = spec.char_numbers;

  std::vector<SingularityType> sings;
  for (std::size_t i = 0; i < spec.chains.size(); ++i) {
    const auto& c = spec.chains[i];
    validate_chain(c, i);
    r.chains.push_back(ChainSummary{c.n, c.m, c.chain.coeffs(), recognize_blowdown(c.chain).alternate});
    r.total_chain_length += c.chain.length();
    sings.push_back(SingularityType{c.n, c.m});
  }
  const std::uint64_t k = r.total_chain_length;
  const std::uint64_t l = spec.extra_blowups;

  // Each chain of k spheres spans a negative-definite rank-k sublattice that
  // the rational ball replaces: chi drops by k, b- (hence -tau) by k.
  r.minimal_char = CharNumbers(in.euler() - k, in.signature() + k, in.b1());
  r.result_char = blow_up(r.minimal_char, l);
  r.minimal_c1sq = c1_squared(r.minimal_char);
  r.result_c1sq = c1_squared(r.result_char);

  // Second route: collapse the chains of M # l CP2-bar to orbifold points
  // and correct chi and tau by the local group orders and eta invariants.
  CharNumbers blown = blow_up(in, l);
  CharNumbers collapsed(blown.euler() - k, blown.signature() + k, blown.b1());
  OrbifoldCharNumbers orb = orbifold_correction(collapsed, sings);
  r.orbifold_route_c1sq = orb.c1_squared();
  if (r.orbifold_route_c1sq != Rat(r.result_c1sq)) {
    throw std::logic_error("orbifold c1^2 " + r.orbifold_route_c1sq.to_string() + " disagrees with " +
                           r.result_c1sq.str());
  }

  r.chi_h = todd_genus(r.result_char);

  const bool positive = r.minimal_c1sq > 0;
  const auto& a = spec.asserted;
  if (a.orbifold_canonical_ample) {
    if (positive) {
      r.minimal = {TriState::YesDerived, "asserted: canonical sheaf of the collapsed orbifold is ample"};
      r.general_type = {TriState::YesDerived, "asserted: canonical sheaf of the collapsed orbifold is ample"};
    } else {
      r.minimal = {TriState::NotApplicable, "ampleness asserted but c1^2(N) <= 0; inconsistent input"};
      r.general_type = {TriState::NotApplicable, "c1^2(N) <= 0"};
    }
  } else if (a.c1_dot_omega_negative) {
    r.minimal = {TriState::Unknown, "no ampleness assertion; minimality not derived"};
    if (positive) {
      r.general_type = {TriState::YesDerived, "asserted: c1.[omega] < 0 on the orbifold, with c1^2 > 0"};
    } else {
      r.general_type = {TriState::NotApplicable, "c1^2(N) <= 0"};
    }
  } else {
    r.minimal = {TriState::Unknown, "no hypothesis asserted"};
    r.general_type = positive ? Conclusion{TriState::Unknown, "no hypothesis asserted"}
                              : Conclusion{TriState::NotApplicable, "c1^2(N) <= 0"};
  }

  if (r.general_type.state == TriState::YesDerived) {
    r.yamabe = yamabe_general_type(r.minimal_c1sq);
    if (r.minimal.state != TriState::YesDerived) {
      r.notes.emplace_back("Yamabe value uses c1^2(N) and so presumes N is its own minimal model");
    }
  } else {
    r.notes.emplace_back("NotGeneralType: Yamabe value suppressed (general type is " +
                         std::string(tri_state_name(r.general_type.state)) + ")");
  }

  if (positive) {
    r.curvature_bound = curvature_lower_bound(r.minimal_c1sq);
  } else {
    r.curvature_bound = SymbolicValue{};
    if (r.minimal_c1sq < 0) r.notes.emplace_back("c1^2(N) < 0: the scalar curvature bound is trivial");
  }
  if (r.minimal_char.b_plus() == 1 && !a.c1_dot_omega_negative && !a.orbifold_canonical_ample) {
    r.notes.emplace_back("b+ = 1: the curvature bound additionally requires c1.[omega] < 0");
  }

  r.noether = noether_classify(r.minimal_char, r.minimal.state == TriState::YesDerived);
  if (!r.noether.c1_squared_even) {
    r.notes.emplace_back("the Noether inequality is quoted for even c1^2; here c1^2 is odd");
  }
  r.notes.emplace_back("BMY check uses the conventional form c1^2 <= 9 chi_h");
  return r;
}

std::pair<ManifoldSpec, BlowdownReport> en_family(int n, EnMode mode) {
  if (n < 4) throw Error(ErrorKind::InvalidParameters, "E(n) family needs n >= 4, got " + std::to_string(n));
  const bool one = mode == EnMode::OneChain;
  ManifoldSpec spec{"E(" + std::to_string(n) + ")" + (one ? " one chain" : " both chains"),
                    CharNumbers(BigInt(12) * n, BigInt(-8) * n),
                    {},
                    0,
                    {}};
  if (todd_genus(spec.char_numbers) != n) throw std::logic_error("E(n) Todd genus is not n");
  BlowdownChain chain = blowdown_chain(BigInt(n - 2), BigInt(1));
  spec.chains.push_back(chain);
  if (!one) spec.chains.push_back(chain);
  spec.asserted.orbifold_canonical_ample = one;
  BlowdownReport report = rational_blowdown(spec);
  return {std::move(spec), std::move(report)};
}

bool Prop41Report::passed() const {
  for (const auto& c : checks)
    if (!c.pass()) return false;
  return !checks.empty();
}

Prop41Report verify_prop41(int n) {
  if (n < 5) throw Error(ErrorKind::InvalidParameters, "needs n >= 5 (n = 4 is the separate X4 case)");
  EnUpstairs up = en_upstairs(n);
  const auto& lat = up.lattice;
  std::vector<std::pair<std::string, DivisorClass>> curves{
      {"C0hat", DivisorClass::basis(up.section_double_prime)},
      {"E1hat", DivisorClass::basis(up.e1bar)},
      {"E2hat", DivisorClass::basis(up.e2bar)},
  };
  ContractResult c = contract(lat, up.primed_chain, up.fiber, curves);

  Prop41Report r;
  r.n = n;
  r.chain = up.primed_chain;
  r.coefficients = c.coefficients;
  r.fiber_image_sq = c.image_self_int;
  const BigInt d = BigInt(n - 2) * (n - 2);
  r.canonical_sq = Rat(d) * r.fiber_image_sq;
  r.nakai = nakai_check(lat, c.pullback, curves);

  for (std::size_t j = 0; j < c.coefficients.size(); ++j) {
    r.checks.push_back({"coefficient " + up.primed_chain[j], Rat(BigInt(n - 3 - static_cast<int>(j)), d),
                        c.coefficients[j]});
  }
  r.checks.push_back({"Fhat^2", Rat(BigInt(n - 3), d), r.fiber_image_sq});
  r.checks.push_back({"Khat^2", Rat(n - 3), r.canonical_sq});
  r.checks.push_back({"Fhat.C0hat", Rat(1), c.pairings.at("C0hat")});
  r.checks.push_back({"Fhat.E1hat", Rat(BigInt(1), d), c.pairings.at("E1hat")});
  r.checks.push_back({"Fhat.E2hat", Rat(BigInt(n - 4), d), c.pairings.at("E2hat")});
  return r;
}

Prop41Report gompf_x4() {
  IntersectionLattice lat({"F", "C2"}, QMatrix{{Rat(0), Rat(1)}, {Rat(1), Rat(-4)}});
  ContractResult c = contract(lat, {"C2"}, DivisorClass::basis("F"));

  Prop41Report r;
  r.n = 4;
  r.chain = {"C2"};
  r.coefficients = c.coefficients;
  r.fiber_image_sq = c.image_self_int;
  r.canonical_sq = Rat(4) * r.fiber_image_sq;  // K = 2 f'
  r.nakai = nakai_check(lat, c.pullback, {});
  r.checks.push_back({"coefficient C2", Rat(1, 4), c.coefficients[0]});
  r.checks.push_back({"f'^2", Rat(1, 4), r.fiber_image_sq});
  r.checks.push_back({"K^2", Rat(1), r.canonical_sq});
  return r;
}

}  // namespace rbd
