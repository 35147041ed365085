#include "ppring/idem.hpp"

#include <numeric>

#include "ppring/lattice.hpp"

namespace ppring {

PPElement cyclic_idempotent(const GroupPtr& Cp, Elem t, ModularSetting setting) {
  const FiniteGroup& C = *Cp;
  const int m = static_cast<int>(C.order());
  if (std::gcd(m, setting.p) != 1) throw Error(ErrorCode::NotPPrime, "cyclic group order is divisible by p");
  Elem c = -1;
  for (std::size_t x = 0; x < C.order(); ++x) {
    if (C.element_order(static_cast<Elem>(x)) == m) {
      c = static_cast<Elem>(x);
      break;
    }
  }
  if (c < 0) throw Error(ErrorCode::NotCyclic, "group is not cyclic");
  if (setting.conductor % m != 0) throw Error(ErrorCode::ConductorMismatch, "|C| does not divide the conductor");
  const int step = setting.conductor / m;
  // power[x] = a with x = c^a.
  std::vector<int> power(C.order());
  for (int a = 0; a < m; ++a) power[static_cast<std::size_t>(C.pow(c, a))] = a;
  const int b = power[static_cast<std::size_t>(t)];

  const Subgroup all = Subgroup::whole(C);
  PPElement out(Cp, setting);
  for (int j = 0; j < m; ++j) {
    std::vector<int> exps;
    for (Elem x : all.elements()) exps.push_back(j * power[static_cast<std::size_t>(x)] * step % setting.conductor);
    // φ_j(t^-1) = ζ_m^{-jb}
    out += PPElement::generator(Cp, setting, all, LinChar::unchecked(all, std::move(exps), setting.conductor),
                                zeta_power(setting.conductor, -static_cast<long long>(j) * b * step));
  }
  out *= frac(1, m);
  return out;
}

PPElement top_E(const GroupPtr& G, ModularSetting setting) {
  return linearize(gluck_yoshida(G, Subgroup::whole(*G)), setting);
}

PPElement idempotent_normal_case(const GroupPtr& Gp, Elem s_lift, ModularSetting setting) {
  const FiniteGroup& G = *Gp;
  const Subgroup P = sylow(G, setting.p);
  if (!is_normal(P)) throw Error(ErrorCode::ShapeMismatch, "Sylow p-subgroup is not normal");
  const QuotientGroup Q = quotient(Gp, P);
  const Elem sbar = Q.project[static_cast<std::size_t>(s_lift)];
  if (static_cast<std::size_t>(Q.group->element_order(sbar)) != Q.group->order()) {
    throw Error(ErrorCode::ShapeMismatch, "G/P is not generated by the image of s");
  }
  const PPElement E = top_E(Gp, setting);
  const PPElement F1 = inf_elt(cyclic_idempotent(Q.group, sbar, setting), Q);
  return tensor_elt(E, F1);
}

PPElement idempotent_theorem(const SpeciesPair& pair, ModularSetting setting) {
  const FiniteGroup& G = pair.group();
  const GroupPtr H = subgroup_group(pair.ps());
  std::vector<Elem> pin;
  for (Elem x : pair.P().elements()) pin.push_back(H->index_of(G.element(x)));
  const Subgroup P(*H, std::move(pin));
  const Elem s = H->index_of(G.element(pair.lift()));
  const Subgroup top = Subgroup::whole(*H);
  const int m = pair.s_order();
  const int n = setting.conductor;
  if (n % m != 0) throw Error(ErrorCode::ConductorMismatch, "|s| does not divide the conductor");

  const SubgroupLattice& lat = H->lattice();
  const std::size_t top_i = lat.index_of(top);
  PPElement sum(H, setting);
  for (std::size_t li = 0; li < lat.size(); ++li) {
    const Subgroup& L = lat[li];
    if (join(P, L).order() != top.order()) continue;
    const long long mu = lat.moebius(li, top_i);
    if (mu == 0) continue;
    const Rational weight(static_cast<long>(L.order() * mu));
    for (int j = 0; j < m; ++j) {
      Cyclotomic c = zeta_power(n, -static_cast<long long>(j) * (n / m));
      c *= weight;
      sum += PPElement::generator(H, setting, L, char_pullback(top, P, s, j, L, n), c);
    }
  }
  PPElement F = ind_elt(sum, pair.group_ptr());
  F *= frac(1, static_cast<long>(pair.P().order() * static_cast<std::size_t>(m) * pair.centralizer_order()));
  return F;
}

PPElement idempotent_theorem(const SpeciesPair& pair) {
  return idempotent_theorem(pair, setting_for(pair.group(), pair.prime()));
}

PPElement idempotent_via_reduction(const SpeciesPair& pair, ModularSetting setting) {
  const FiniteGroup& G = pair.group();
  const GroupPtr H = subgroup_group(pair.ps());
  const Elem s = H->index_of(G.element(pair.lift()));
  PPElement F = ind_elt(idempotent_normal_case(H, s, setting), pair.group_ptr());
  F *= frac(pair.s_order(), static_cast<long>(pair.centralizer_order()));
  return F;
}

PPElement idempotent_via_reduction(const SpeciesPair& pair) {
  return idempotent_via_reduction(pair, setting_for(pair.group(), pair.prime()));
}

bool delta_holds(const SpeciesPair& pair, const SpeciesVector& species) {
  for (std::size_t i = 0; i < species.pairs.size(); ++i) {
    const Cyclotomic& v = species.values[i];
    const bool expect_one = pairs_conjugate(species.pairs[i], pair);
    if (expect_one ? !v.is_one() : !v.is_zero()) return false;
  }
  return true;
}

std::vector<IdempotentReport> idempotent_reports(const GroupPtr& G, int p) {
  const ModularSetting setting = setting_for(*G, p);
  const auto pairs = enumerate_pairs(G, p);
  std::vector<IdempotentReport> out;
  for (const auto& pair : pairs) {
    PPElement F = idempotent_theorem(pair, setting);
    SpeciesVector sv = species_vector(F, pairs);
    const bool delta = delta_holds(pair, sv);
    const PPElement R = idempotent_via_reduction(pair, setting);
    bool agree = true;
    for (std::size_t i = 0; i < pairs.size() && agree; ++i) agree = tau(pairs[i], R) == sv.values[i];
    out.push_back(IdempotentReport{pair, std::move(F), std::move(sv), delta, agree});
  }
  return out;
}

SpeciesPair pair_in_overgroup(const SpeciesPair& pair, const GroupPtr& G) {
  const std::vector<Elem> emb = embedding(pair.group(), *G);
  std::vector<Elem> P;
  for (Elem x : pair.P().elements()) P.push_back(emb[static_cast<std::size_t>(x)]);
  return SpeciesPair::make(G, Subgroup(*G, std::move(P)), emb[static_cast<std::size_t>(pair.lift())], pair.prime());
}

bool verify_restriction(const SpeciesPair& pair, const Subgroup& H, ModularSetting setting) {
  const GroupPtr Hg = subgroup_group(H);
  const PPElement restricted = res_elt(idempotent_theorem(pair, setting), Hg);
  PPElement expected(Hg, setting);
  for (const auto& q : enumerate_pairs(Hg, setting.p)) {
    if (pairs_conjugate(pair_in_overgroup(q, pair.group_ptr()), pair)) expected += idempotent_theorem(q, setting);
  }
  return equal_elements(restricted, expected);
}

bool verify_induction(const SpeciesPair& pair_in_H, const GroupPtr& G, ModularSetting setting) {
  const SpeciesPair in_G = pair_in_overgroup(pair_in_H, G);
  const Rational c = frac(static_cast<long>(in_G.stabilizer().order()), static_cast<long>(pair_in_H.stabilizer().order()));
  const PPElement lhs = ind_elt(idempotent_theorem(pair_in_H, setting), G);
  const PPElement rhs = c * idempotent_theorem(in_G, setting);
  return equal_elements(lhs, rhs);
}

bool verify_E_decomposition(const GroupPtr& Gp, ModularSetting setting) {
  const FiniteGroup& G = *Gp;
  const Subgroup P = sylow(G, setting.p);
  if (!is_normal(P)) throw Error(ErrorCode::ShapeMismatch, "Sylow p-subgroup is not normal");
  const QuotientGroup Q = quotient(Gp, P);
  bool cyclic = false;
  for (std::size_t x = 0; x < Q.group->order(); ++x) {
    cyclic = cyclic || static_cast<std::size_t>(Q.group->element_order(static_cast<Elem>(x))) == Q.group->order();
  }
  if (!cyclic) throw Error(ErrorCode::ShapeMismatch, "G/P is not cyclic");
  const SpeciesVector sv = species_vector(top_E(Gp, setting));
  for (std::size_t i = 0; i < sv.pairs.size(); ++i) {
    const SpeciesPair& pr = sv.pairs[i];
    const bool generates = pr.P() == P && static_cast<std::size_t>(Q.group->element_order(
                                              Q.project[static_cast<std::size_t>(pr.lift())])) == Q.group->order();
    if (generates ? !sv.values[i].is_one() : !sv.values[i].is_zero()) return false;
  }
  return true;
}

}  // namespace ppring
