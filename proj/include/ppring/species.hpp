/**
 * @file species.hpp
 * @brief Pairs (P, s) up to conjugacy and the species τ_{P,s}.
 *
 * A pair stores a p'-order lift of s in N_G(P) instead of an element of
 * N_G(P)/P. On a monomial generator Ind_L^G k_χ the species is evaluated on the
 * coset basis: restricted to P the module is a permutation module, the
 * P-fixed cosets gL span the Brauer quotient, and the lift permutes them with
 * monomial scalars. Orbits of length > 1 contribute nothing to the trace, so
 *
 *   τ_{P,s}(Ind_L^G k_χ) = Σ χ(g^-1 t g)  over cosets gL with P^g ⊆ L, g^-1 t g ∈ L,
 *
 * t the lift. The ffq module checks this against the literal Brauer quotient.
 */
#pragma once

#include <string>
#include <vector>

#include "ppring/ppelem.hpp"

namespace ppring {

class SpeciesPair {
 public:
  /// Throws NotPGroup if P is not a p-group, BadIndex if lift is not a
  /// p'-element normalizing P.
  static SpeciesPair make(GroupPtr G, const Subgroup& P, Elem lift, int p);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  int prime() const noexcept { return p_; }
  const Subgroup& P() const noexcept { return P_; }
  Elem lift() const noexcept { return lift_; }
  /// <Ps>, generated by P and the lift.
  const Subgroup& ps() const noexcept { return ps_; }
  /// N_G(P, s).
  const Subgroup& stabilizer() const noexcept { return stabilizer_; }
  std::size_t centralizer_order() const noexcept { return stabilizer_.order() / P_.order(); }
  int s_order() const noexcept { return s_order_; }

  /// e.g. "(|P|=2 P=[0,3], s=(0,1,2))".
  std::string label() const;

 private:
  SpeciesPair(GroupPtr G, Subgroup P, Elem lift, int p, Subgroup ps, Subgroup stab, int s_order);

  GroupPtr group_;
  int p_;
  Subgroup P_;
  Elem lift_;
  Subgroup ps_;
  Subgroup stabilizer_;
  int s_order_;
};

/// One representative per G-orbit, in canonical order.
std::vector<SpeciesPair> enumerate_pairs(const GroupPtr& G, int p);
bool pairs_conjugate(const SpeciesPair& a, const SpeciesPair& b);

/// Throws ConductorMismatch if the generator's conductor does not admit |s|.
Cyclotomic tau_generator(const SpeciesPair& pair, const Generator& gen);
Cyclotomic tau(const SpeciesPair& pair, const PPElement& x);

struct SpeciesVector {
  std::vector<SpeciesPair> pairs;
  std::vector<Cyclotomic> values;
};

SpeciesVector species_vector(const PPElement& x);
SpeciesVector species_vector(const PPElement& x, const std::vector<SpeciesPair>& pairs);
bool equal_elements(const PPElement& x, const PPElement& y);

}  // namespace ppring
