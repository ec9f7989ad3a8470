#pragma once

// Intersection lattices of surfaces: a labelled basis with a symmetric
// rational Gram matrix, rational divisor classes over it, blowups, and the
// pullback of a divisor under the contraction of a negative-definite chain.

#include <initializer_list>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rbd/exactnum.hpp"

namespace rbd {

// Rational combination of basis labels. Zero coefficients are not stored.
class DivisorClass {
 public:
  DivisorClass() = default;
  DivisorClass(std::initializer_list<std::pair<const std::string, Rat>> terms);

  static DivisorClass basis(const std::string& label) { return DivisorClass{{label, Rat(1)}}; }

  Rat coefficient(const std::string& label) const;
  void set(const std::string& label, const Rat& value);
  const std::map<std::string, Rat>& terms() const noexcept { return terms_; }

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rat& s, const DivisorClass& d);

  std::string to_string() const;  // "-2*C0 - 6*f"

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  std::map<std::string, Rat> terms_;
};

class IntersectionLattice {
 public:
  // Throws DuplicateLabel, or InvalidParameters on a size mismatch.
  IntersectionLattice(std::vector<std::string> basis, QMatrix gram);

  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<std::string>& basis() const noexcept { return basis_; }
  const QMatrix& gram() const noexcept { return gram_; }
  bool contains(const std::string& label) const { return index_.count(label) != 0; }
  // Throws UnknownLabel.
  std::size_t index_of(const std::string& label) const;

  const Rat& pairing(const std::string& a, const std::string& b) const;

 private:
  std::vector<std::string> basis_;
  QMatrix gram_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Bilinear extension of the Gram matrix. Throws UnknownLabel.
Rat pair(const IntersectionLattice& lat, const DivisorClass& a, const DivisorClass& b);

// Hirzebruch surface with negative section: basis {C0, f}, C0^2 = -n,
// C0.f = 1, f^2 = 0.
IntersectionLattice hirzebruch(int n);

// K = -2 C0 - (n + 2) f.
DivisorClass canonical_hirzebruch(int n);

// Adjoins an exceptional class with square -1, orthogonal to everything.
// Throws DuplicateLabel.
IntersectionLattice blow_up_lattice(const IntersectionLattice& lat, const std::string& label);

// Canonical class after blowing up: pullback of K plus the new exceptional
// class.
DivisorClass blow_up_canonical(const DivisorClass& canonical, const std::string& exceptional_label);

struct ContractResult {
  std::vector<std::string> chain;
  std::vector<Rat> coefficients;  // a_j, in chain order
  DivisorClass pullback;          // d + sum a_j G_j
  Rat image_self_int;             // (d + sum a_j G_j) . d
  std::map<std::string, Rat> pairings;
};

// Pullback of the image of d under contraction of `chain_labels`:
// solves (d + sum a_j G_j) . G_k = 0 for every k in the chain. `queries` are
// further classes Q whose pairings (d + sum a_j G_j) . Q are reported.
// Throws NotContractible if the chain sub-Gram is not negative definite and
// InvalidParameters if d has support on the chain.
ContractResult contract(const IntersectionLattice& lat, const std::vector<std::string>& chain_labels,
                        const DivisorClass& d,
                        const std::vector<std::pair<std::string, DivisorClass>>& queries = {});

struct NakaiReport {
  Rat self_intersection;
  std::vector<std::pair<std::string, Rat>> pairings;
  // d^2 > 0 and d.C > 0 for every supplied curve. This is evidence relative
  // to the supplied list, not a proof of ampleness.
  bool ample_evidence = false;
  std::string verdict;
};

NakaiReport nakai_check(const IntersectionLattice& lat, const DivisorClass& d,
                        const std::vector<std::pair<std::string, DivisorClass>>& curves);

// Elliptic surface E(n), n >= 5, as seen through its two (-n, -2, ..., -2)
// chains. Labels: F, C0', C0'', U'1..U'(n-4), U''1..U''(n-4), E1bar, E2bar.
// Each chain runs C0 - U1 - ... - U(n-4); E1bar meets both U(n-4) and E2bar
// meets both U1.
struct EnUpstairs {
  int n;
  IntersectionLattice lattice;
  DivisorClass fiber;
  std::vector<std::string> primed_chain;         // C0', U'1, ..., U'(n-4)
  std::vector<std::string> double_primed_chain;  // C0'', U''1, ..., U''(n-4)
  std::string section_double_prime;              // C0''
  std::string e1bar;
  std::string e2bar;
};

EnUpstairs en_upstairs(int n);

}  // namespace rbd
