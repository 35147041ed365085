/**
 * @file ppelem.hpp
 * @brief Elements of K ⊗ pp_k(G) as combinations of monomial generators.
 *
 * A monomial generator is the class of Ind_L^G k_χ, where χ is a linear
 * character of L of order prime to p with values in μ_n, n the p'-part of the
 * exponent of the top group. Characters are stored as exponent tables:
 * χ(x) = ζ_n^{exponent(x)}.
 *
 * Generators span the ring but are not a basis, so two PPElements with
 * different terms may be equal; compare them with species::equal_elements.
 */
#pragma once

#include <map>
#include <vector>

#include "ppring/cyclo.hpp"
#include "ppring/grp.hpp"

namespace ppring {

/// Characteristic p of k and the conductor n fixed for a computation.
struct ModularSetting {
  int p;
  int conductor;

  friend bool operator==(const ModularSetting&, const ModularSetting&) = default;
};

/// n = p'-part of the exponent of G. Throws NotPPrime unless p is prime.
ModularSetting setting_for(const FiniteGroup& G, int p);

class LinChar {
 public:
  /// exponents[i] is the exponent at domain.elements()[i]. Throws BadIndex
  /// if the table is not a homomorphism into Z/n.
  LinChar(Subgroup domain, std::vector<int> exponents, int conductor);

  static LinChar trivial(Subgroup domain, int conductor);
  /// Skips the homomorphism check; for tables produced by transport of a valid character.
  static LinChar unchecked(Subgroup domain, std::vector<int> exponents, int conductor);

  const Subgroup& domain() const noexcept { return domain_; }
  int conductor() const noexcept { return n_; }
  const std::vector<int>& exponents() const noexcept { return exps_; }
  /// Exponent at x, which must lie in the domain.
  int operator()(Elem x) const { return exps_[domain_.position(x)]; }

  bool is_trivial() const;
  /// Order of χ as an element of Hom(L, μ_n).
  int order() const;
  /// True when every p-element of the domain is in the kernel.
  bool kills_p_elements(int p) const;

  LinChar restrict_to(const Subgroup& L) const;
  /// The character y ↦ χ(g y g^-1) on domain^g.
  LinChar conjugate(Elem g) const;

  friend LinChar operator*(const LinChar& a, const LinChar& b);

 private:
  struct NoCheck {};
  LinChar(Subgroup domain, std::vector<int> exponents, int conductor, NoCheck);

  Subgroup domain_;
  std::vector<int> exps_;
  int n_;
};

/// All linear characters L → μ_n (each automatically kills the p-elements when p ∤ n).
std::vector<LinChar> linear_characters(const Subgroup& L, int conductor);

/// The class [Ind_L^G k_χ], normalized to the minimal G-conjugate of (L, χ).
class Generator {
 public:
  Generator(const Subgroup& L, const LinChar& chi);

  const FiniteGroup& group() const noexcept { return subgroup_.group(); }
  const Subgroup& subgroup() const noexcept { return subgroup_; }
  const LinChar& character() const noexcept { return chi_; }

  friend bool operator<(const Generator& a, const Generator& b);
  friend bool operator==(const Generator& a, const Generator& b);

 private:
  Subgroup subgroup_;
  LinChar chi_;
};

class PPElement {
 public:
  PPElement(GroupPtr G, ModularSetting setting);

  /// coeff · [Ind_L^G k_χ]; L must be a subgroup of *G.
  static PPElement generator(GroupPtr G, ModularSetting setting, const Subgroup& L, const LinChar& chi);
  static PPElement generator(GroupPtr G, ModularSetting setting, const Subgroup& L, const LinChar& chi,
                             const Cyclotomic& coeff);
  /// The class of the trivial module, the identity of the ring.
  static PPElement one(GroupPtr G, ModularSetting setting);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  ModularSetting setting() const noexcept { return setting_; }
  int conductor() const noexcept { return setting_.conductor; }
  const std::map<Generator, Cyclotomic>& terms() const noexcept { return terms_; }
  bool has_no_terms() const noexcept { return terms_.empty(); }

  void add_term(const Generator& gen, const Cyclotomic& coeff);

  PPElement& operator+=(const PPElement& rhs);
  PPElement& operator-=(const PPElement& rhs);
  PPElement& operator*=(const Cyclotomic& c);
  PPElement& operator*=(const Rational& r);

  friend PPElement operator+(PPElement a, const PPElement& b) { return a += b; }
  friend PPElement operator-(PPElement a, const PPElement& b) { return a -= b; }
  friend PPElement operator*(const Rational& r, PPElement a) { return a *= r; }
  friend PPElement operator*(const Cyclotomic& c, PPElement a) { return a *= c; }

 private:
  void check_compatible(const PPElement& rhs) const;

  GroupPtr group_;
  ModularSetting setting_;
  std::map<Generator, Cyclotomic> terms_;
};

/// The character x ↦ ζ_{|s|}^{j·a(x)} of <Ps> restricted to L, where
/// x ∈ s_lift^{a(x)} P. Throws NotNormal unless P ⊴ ps, and BadIndex unless
/// ps/P is cyclic generated by the image of s_lift and 0 ≤ j < |s|.
LinChar char_pullback(const Subgroup& ps, const Subgroup& P, Elem s_lift, int j, const Subgroup& L, int conductor);

/// Res to a group whose elements lie in x.group() (Mackey formula).
PPElement res_elt(const PPElement& x, const GroupPtr& H);
/// Res to a subgroup of x.group(), realized with subgroup_group.
PPElement res_elt(const PPElement& x, const Subgroup& H);
/// Ind from x.group() to an overgroup G. Throws NotSubgroup.
PPElement ind_elt(const PPElement& x, const GroupPtr& G);
/// Inflation from Q.group to Q.parent. Throws QuotientMismatch.
PPElement inf_elt(const PPElement& x, const QuotientGroup& Q);
/// Tensor product (ring multiplication). Throws GroupMismatch.
PPElement tensor_elt(const PPElement& x, const PPElement& y);
/// Brauer morphism Br_P, landing over target.quotient.group where target = normalizer_quotient(P).
/// Throws NotPGroup unless P is a p-group for x.setting().p.
PPElement brauer_elt(const PPElement& x, const Subgroup& P, const NormalizerQuotient& target);
PPElement brauer_elt(const PPElement& x, const Subgroup& P);

}  // namespace ppring
