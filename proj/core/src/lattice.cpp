#include "rbd/lattice.hpp"

#include <set>
#include <sstream>

#include "rbd/error.hpp"

namespace rbd {

DivisorClass::DivisorClass(std::initializer_list<std::pair<const std::string, Rat>> terms) {
  for (const auto& [label, value] : terms) set(label, coefficient(label) + value);
}

Rat DivisorClass::coefficient(const std::string& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? Rat(0) : it->second;
}

void DivisorClass::set(const std::string& label, const Rat& value) {
  if (value.is_zero()) {
    terms_.erase(label);
  } else {
    terms_[label] = value;
  }
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  for (const auto& [label, value] : o.terms_) set(label, coefficient(label) + value);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  for (const auto& [label, value] : o.terms_) set(label, coefficient(label) - value);
  return *this;
}

DivisorClass operator*(const Rat& s, const DivisorClass& d) {
  DivisorClass out;
  for (const auto& [label, value] : d.terms_) out.set(label, s * value);
  return out;
}

std::string DivisorClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [label, value] : terms_) {
    Rat mag = value.sign() < 0 ? -value : value;
    if (first) {
      if (value.sign() < 0) os << '-';
    } else {
      os << (value.sign() < 0 ? " - " : " + ");
    }
    if (mag != Rat(1)) os << mag << '*';
    os << label;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

IntersectionLattice::IntersectionLattice(std::vector<std::string> basis, QMatrix gram)
    : basis_(std::move(basis)), gram_(std::move(gram)) {
  if (basis_.size() != gram_.dim()) {
    throw Error(ErrorKind::InvalidParameters, "basis size does not match the Gram matrix");
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (!index_.emplace(basis_[i], i).second) {
      throw Error(ErrorKind::DuplicateLabel, "duplicate basis label '" + basis_[i] + "'");
    }
  }
}

std::size_t IntersectionLattice::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error(ErrorKind::UnknownLabel, "unknown basis label '" + label + "'");
  return it->second;
}

const Rat& IntersectionLattice::pairing(const std::string& a, const std::string& b) const {
  return gram_.at(index_of(a), index_of(b));
}

Rat pair(const IntersectionLattice& lat, const DivisorClass& a, const DivisorClass& b) {
  Rat total;
  for (const auto& [la, ca] : a.terms()) {
    std::size_t i = lat.index_of(la);
    for (const auto& [lb, cb] : b.terms()) {
      const Rat& g = lat.gram().at(i, lat.index_of(lb));
      if (!g.is_zero()) total += ca * cb * g;
    }
  }
  return total;
}

IntersectionLattice hirzebruch(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameters, "Hirzebruch surface needs n >= 1");
  return IntersectionLattice({"C0", "f"}, QMatrix{{Rat(-n), Rat(1)}, {Rat(1), Rat(0)}});
}

DivisorClass canonical_hirzebruch(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameters, "Hirzebruch surface needs n >= 1");
  return DivisorClass{{"C0", Rat(-2)}, {"f", Rat(-(n + 2))}};
}

IntersectionLattice blow_up_lattice(const IntersectionLattice& lat, const std::string& label) {
  if (lat.contains(label)) throw Error(ErrorKind::DuplicateLabel, "label '" + label + "' already in use");
  const std::size_t d = lat.dim();
  QMatrix g(d + 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) g.set(i, j, lat.gram().at(i, j));
  g.set(d, d, Rat(-1));
  std::vector<std::string> basis = lat.basis();
  basis.push_back(label);
  return IntersectionLattice(std::move(basis), std::move(g));
}

DivisorClass blow_up_canonical(const DivisorClass& canonical, const std::string& exceptional_label) {
  return canonical + DivisorClass::basis(exceptional_label);
}

ContractResult contract(const IntersectionLattice& lat, const std::vector<std::string>& chain_labels,
                        const DivisorClass& d,
                        const std::vector<std::pair<std::string, DivisorClass>>& queries) {
  if (chain_labels.empty()) throw Error(ErrorKind::InvalidParameters, "empty chain");
  std::vector<std::size_t> idx;
  std::set<std::string> seen;
  for (const auto& label : chain_labels) {
    idx.push_back(lat.index_of(label));
    if (!seen.insert(label).second) throw Error(ErrorKind::DuplicateLabel, "chain repeats '" + label + "'");
    if (!d.coefficient(label).is_zero()) {
      throw Error(ErrorKind::InvalidParameters, "divisor has support on chain curve '" + label + "'");
    }
  }
  for (const auto& [label, value] : d.terms()) lat.index_of(label);

  QMatrix sub = lat.gram().principal_submatrix(idx);
  if (!is_negative_definite(sub)) {
    throw Error(ErrorKind::NotContractible, "chain intersection matrix is not negative definite");
  }

  std::vector<Rat> rhs;
  rhs.reserve(chain_labels.size());
  for (const auto& label : chain_labels) rhs.push_back(-pair(lat, d, DivisorClass::basis(label)));

  ContractResult out;
  out.chain = chain_labels;
  out.coefficients = solve_symmetric(sub, rhs);
  out.pullback = d;
  for (std::size_t j = 0; j < chain_labels.size(); ++j) {
    out.pullback.set(chain_labels[j], out.coefficients[j]);
  }
  out.image_self_int = pair(lat, out.pullback, d);
  for (const auto& [name, q] : queries) out.pairings[name] = pair(lat, out.pullback, q);
  return out;
}

NakaiReport nakai_check(const IntersectionLattice& lat, const DivisorClass& d,
                        const std::vector<std::pair<std::string, DivisorClass>>& curves) {
  NakaiReport r;
  r.self_intersection = pair(lat, d, d);
  bool all_positive = r.self_intersection.sign() > 0;
  for (const auto& [name, c] : curves) {
    Rat v = pair(lat, d, c);
    all_positive = all_positive && v.sign() > 0;
    r.pairings.emplace_back(name, std::move(v));
  }
  r.ample_evidence = all_positive;
  std::ostringstream os;
  os << (all_positive ? "ample-evidence" : "not ample") << " (relative to " << curves.size()
     << " supplied curve" << (curves.size() == 1 ? "" : "s") << ")";
  r.verdict = os.str();
  return r;
}

EnUpstairs en_upstairs(int n) {
  if (n < 5) throw Error(ErrorKind::InvalidParameters, "upstairs lattice needs n >= 5");
  const int k = n - 4;

  std::vector<std::string> basis{"F", "C0'", "C0''"};
  std::vector<std::string> primed{"C0'"};
  std::vector<std::string> double_primed{"C0''"};
  for (int i = 1; i <= k; ++i) {
    primed.push_back("U'" + std::to_string(i));
    basis.push_back(primed.back());
  }
  for (int i = 1; i <= k; ++i) {
    double_primed.push_back("U''" + std::to_string(i));
    basis.push_back(double_primed.back());
  }
  basis.emplace_back("E1bar");
  basis.emplace_back("E2bar");

  std::unordered_map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < basis.size(); ++i) at[basis[i]] = i;
  QMatrix g(basis.size());
  auto put = [&](const std::string& a, const std::string& b, int v) { g.set(at.at(a), at.at(b), Rat(v)); };

  put("F", "C0'", 1);
  put("F", "C0''", 1);
  for (const auto* chain : {&primed, &double_primed}) {
    put((*chain)[0], (*chain)[0], -n);
    for (std::size_t i = 1; i < chain->size(); ++i) {
      put((*chain)[i], (*chain)[i], -2);
      put((*chain)[i - 1], (*chain)[i], 1);
    }
    put("E1bar", chain->back(), 1);  // U(n-4)
    put("E2bar", (*chain)[1], 1);    // U1
  }
  put("E1bar", "E1bar", -2);
  put("E2bar", "E2bar", -2);

  return EnUpstairs{n,
                    IntersectionLattice(std::move(basis), std::move(g)),
                    DivisorClass::basis("F"),
                    std::move(primed),
                    std::move(double_primed),
                    "C0''",
                    "E1bar",
                    "E2bar"};
}

}  // namespace rbd
