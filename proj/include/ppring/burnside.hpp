#pragma once

#include <map>

#include "ppring/cyclo.hpp"
#include "ppring/grp.hpp"
#include "ppring/ppelem.hpp"

namespace ppring {

/// Σ c_L [G/L] in K ⊗ B(G), keyed by canonical subgroup-class representatives.
class BurnsideElement {
 public:
  explicit BurnsideElement(GroupPtr G);
  /// The transitive set [G/L].
  static BurnsideElement transitive(GroupPtr G, const Subgroup& L);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const std::map<Subgroup, Rational>& coeffs() const noexcept { return coeffs_; }
  /// Adds c·[G/L], normalizing L to its class representative.
  void add(const Subgroup& L, const Rational& c);

  BurnsideElement& operator+=(const BurnsideElement& rhs);
  BurnsideElement& operator*=(const Rational& r);
  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b);

 private:
  GroupPtr group_;
  std::map<Subgroup, Rational> coeffs_;
};

/// |(G/L)^H|.
long long mark(const Subgroup& L, const Subgroup& H);
/// Σ c_L |(G/L)^H|.
Rational mark(const BurnsideElement& x, const Subgroup& H);

BurnsideElement burnside_product(const BurnsideElement& a, const BurnsideElement& b);
BurnsideElement gluck_yoshida(const GroupPtr& G, const Subgroup& H);

/// X ↦ X^P as an N_G(P)/P-set, landing over target.quotient.group.
BurnsideElement fixed_point_functor(const Subgroup& P, const BurnsideElement& x, const NormalizerQuotient& target);
BurnsideElement fixed_point_functor(const Subgroup& P, const BurnsideElement& x);

/// Restriction to a group embedded in x.group(), by explicit orbit decomposition.
BurnsideElement burnside_res(const BurnsideElement& x, const GroupPtr& H);
/// Induction from x.group() to an overgroup.
BurnsideElement burnside_ind(const BurnsideElement& x, const GroupPtr& G);

/// [G/L] ↦ [Ind_L^G k].
PPElement linearize(const BurnsideElement& x, ModularSetting setting);

}  // namespace ppring
