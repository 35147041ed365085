/**
 * @file idem.hpp
 * @brief Primitive idempotents F_{P,s} of K ⊗ pp_k(G).
 *
 * Two independent constructions are provided:
 *  - idempotent_theorem: the closed formula, a Möbius-weighted sum over
 *    L ≤ <Ps> with PL = <Ps> and over the characters φ of <s>;
 *  - idempotent_via_reduction: induction from <Ps> of E · Inf(F_{1,s}), where
 *    E is the linearized top Burnside idempotent of <Ps>.
 * Both are checked against the delta characterization through species.
 */
#pragma once

#include <vector>

#include "ppring/burnside.hpp"
#include "ppring/species.hpp"

namespace ppring {

/// F_{1,t} of a cyclic p'-group: (1/|C|) Σ_j φ_j(t^-1) [k_{φ_j}].
/// Throws NotPPrime if p divides |C|, NotCyclic if C is not cyclic.
PPElement cyclic_idempotent(const GroupPtr& C, Elem t, ModularSetting setting);

/// Linearization of the Gluck–Yoshida idempotent e_G^G.
PPElement top_E(const GroupPtr& G, ModularSetting setting);

/// F_{P,s} for a group equal to <Ps>, P its normal Sylow p-subgroup.
/// Throws ShapeMismatch if G is not cyclic modulo p with quotient generated by s.
PPElement idempotent_normal_case(const GroupPtr& G, Elem s_lift, ModularSetting setting);

PPElement idempotent_theorem(const SpeciesPair& pair, ModularSetting setting);
PPElement idempotent_theorem(const SpeciesPair& pair);
PPElement idempotent_via_reduction(const SpeciesPair& pair, ModularSetting setting);
PPElement idempotent_via_reduction(const SpeciesPair& pair);

/// True when the species vector of F over `pairs` is the indicator of the orbit of `pair`.
bool delta_holds(const SpeciesPair& pair, const SpeciesVector& species);

struct IdempotentReport {
  SpeciesPair pair;
  PPElement element;
  SpeciesVector species;
  bool delta_ok;
  bool routes_agree;
};

/// Builds F for every pair of G and checks delta and route agreement.
std::vector<IdempotentReport> idempotent_reports(const GroupPtr& G, int p);

/// Res_H F_{P,s}^G = Σ F^H_{Q,t} over H-classes of G-conjugates of (P,s) inside H.
bool verify_restriction(const SpeciesPair& pair, const Subgroup& H, ModularSetting setting);
/// Ind_H^G F^H_{Q,t} = |N_G(Q,t) : N_H(Q,t)| F^G_{Q,t}; pair_in_H lives over a subgroup group of G.
bool verify_induction(const SpeciesPair& pair_in_H, const GroupPtr& G, ModularSetting setting);
/// For G cyclic modulo p: species of E_G^G are the indicator of {(P,t) : <t> = G/P}.
bool verify_E_decomposition(const GroupPtr& G, ModularSetting setting);

/// The pair of a subgroup group viewed in an overgroup.
SpeciesPair pair_in_overgroup(const SpeciesPair& pair, const GroupPtr& G);

}  // namespace ppring
