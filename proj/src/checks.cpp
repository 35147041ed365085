#include "ppring/checks.hpp"

#include <set>
#include <sstream>

#include "ppring/lattice.hpp"

namespace ppring {

namespace {

constexpr std::size_t kKeptFailures = 8;

std::string generator_text(const Generator& gen) {
  const FiniteGroup& G = gen.group();
  std::ostringstream os;
  os << "Ind(<";
  const auto gens = gen.subgroup().generators();
  for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? "," : "") << G.element(gens[i]).to_string();
  os << ">, [";
  const auto& e = gen.character().exponents();
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << "])";
  return os.str();
}

PPElement as_element(const GroupPtr& G, ModularSetting s, const Generator& gen) {
  return PPElement::generator(G, s, gen.subgroup(), gen.character());
}

std::vector<Subgroup> class_rep_subgroups(const FiniteGroup& G) {
  const SubgroupLattice& lat = G.lattice();
  std::vector<Subgroup> out;
  for (std::size_t i : lat.class_reps()) out.push_back(lat[i]);
  return out;
}

std::vector<Subgroup> p_subgroup_reps(const FiniteGroup& G, int p) {
  std::vector<Subgroup> out;
  for (const auto& H : class_rep_subgroups(G)) {
    if (is_p_group(H, p)) out.push_back(H);
  }
  return out;
}

Subgroup transport(const Subgroup& H, const FiniteGroup& target) {
  std::vector<Elem> out;
  for (Elem x : H.elements()) out.push_back(target.index_of(H.group().element(x)));
  return Subgroup(target, std::move(out));
}

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

}  // namespace

void CheckResult::record(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  ++failures;
  if (failed.size() < kKeptFailures) failed.push_back(what);
}

CheckResult& CheckResult::merge(const CheckResult& other) {
  cases += other.cases;
  failures += other.failures;
  for (const auto& f : other.failed) {
    if (failed.size() < kKeptFailures) failed.push_back(f);
  }
  return *this;
}

std::vector<Generator> standard_generators(const GroupPtr& G, ModularSetting setting) {
  std::set<Generator> seen;
  for (const auto& L : class_rep_subgroups(*G)) {
    for (const auto& chi : linear_characters(L, setting.conductor)) seen.insert(Generator(L, chi));
  }
  return {seen.begin(), seen.end()};
}

CheckResult check_delta(const GroupPtr& G, int p) {
  CheckResult r{"delta", 0, 0, {}};
  const ModularSetting s = setting_for(*G, p);
  const auto pairs = enumerate_pairs(G, p);
  for (const auto& pair : pairs) {
    r.record(delta_holds(pair, species_vector(idempotent_theorem(pair, s), pairs)), pair.label());
  }
  return r;
}

CheckResult check_partition_of_unity(const GroupPtr& G, int p) {
  CheckResult r{"partition-of-unity", 0, 0, {}};
  const ModularSetting s = setting_for(*G, p);
  const auto pairs = enumerate_pairs(G, p);
  PPElement sum(G, s);
  for (const auto& pair : pairs) sum += idempotent_theorem(pair, s);
  const SpeciesVector sv = species_vector(sum, pairs);
  for (std::size_t i = 0; i < pairs.size(); ++i) r.record(sv.values[i].is_one(), pairs[i].label());
  return r;
}

CheckResult check_route_agreement(const GroupPtr& G, int p) {
  CheckResult r{"route-agreement", 0, 0, {}};
  const ModularSetting s = setting_for(*G, p);
  for (const auto& pair : enumerate_pairs(G, p)) {
    r.record(equal_elements(idempotent_theorem(pair, s), idempotent_via_reduction(pair, s)), pair.label());
  }
  return r;
}

CheckResult check_orthogonality(const GroupPtr& G, int p) {
  CheckResult r{"orthogonality", 0, 0, {}};
  const ModularSetting s = setting_for(*G, p);
  const auto pairs = enumerate_pairs(G, p);
  std::vector<PPElement> F;
  std::vector<SpeciesVector> sv;
  for (const auto& pair : pairs) {
    F.push_back(idempotent_theorem(pair, s));
    sv.push_back(species_vector(F.back(), pairs));
  }
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a; b < pairs.size(); ++b) {
      const SpeciesVector prod = species_vector(tensor_elt(F[a], F[b]), pairs);
      bool ok = true;
      for (std::size_t k = 0; k < pairs.size(); ++k) ok = ok && prod.values[k] == sv[a].values[k] * sv[b].values[k];
      r.record(ok, pairs[a].label() + " x " + pairs[b].label());
    }
  }
  return r;
}

CheckResult check_E_decomposition(const GroupPtr& G, int p) {
  CheckResult r{"E-decomposition", 0, 0, {}};
  const ModularSetting s = setting_for(*G, p);
  for (const auto& pair : enumerate_pairs(G, p)) {
    r.record(verify_E_decomposition(subgroup_group(pair.ps()), s), pair.label());
  }
  return r;
}

CheckResult check_restriction(const GroupPtr& G, int p) {
  CheckResult r{"restriction-law", 0, 0, {}};
  const ModularSetting s = setting_for(*G, p);
  const auto pairs = enumerate_pairs(G, p);
  for (const auto& H : class_rep_subgroups(*G)) {
    for (const auto& pair : pairs) {
      r.record(verify_restriction(pair, H, s), "H of order " + std::to_string(H.order()) + ", " + pair.label());
    }
  }
  return r;
}

CheckResult check_induction(const GroupPtr& G, int p) {
  CheckResult r{"induction-law", 0, 0, {}};
  const ModularSetting s = setting_for(*G, p);
  for (const auto& H : class_rep_subgroups(*G)) {
    const GroupPtr Hg = subgroup_group(H);
    for (const auto& pair : enumerate_pairs(Hg, p)) {
      r.record(verify_induction(pair, G, s), "H of order " + std::to_string(H.order()) + ", " + pair.label());
    }
  }
  return r;
}

CheckResult check_marks_delta(const GroupPtr& G) {
  CheckResult r{"marks-delta", 0, 0, {}};
  const auto reps = class_rep_subgroups(*G);
  for (const auto& H : reps) {
    const BurnsideElement e = gluck_yoshida(G, H);
    for (const auto& K : reps) {
      const Rational m = mark(e, K);
      r.record(m == (H == K ? 1 : 0),
               "e_H with |H|=" + std::to_string(H.order()) + " at |K|=" + std::to_string(K.order()));
    }
  }
  return r;
}

CheckResult check_gy_idempotent(const GroupPtr& G) {
  CheckResult r{"gluck-yoshida-idempotent", 0, 0, {}};
  for (const auto& H : class_rep_subgroups(*G)) {
    const BurnsideElement e = gluck_yoshida(G, H);
    r.record(burnside_product(e, e) == e, "|H|=" + std::to_string(H.order()));
  }
  return r;
}

CheckResult check_commute_res_ind(const GroupPtr& G, int p) {
  CheckResult r{"commute-res-ind", 0, 0, {}};
  const ModularSetting s = setting_for(*G, p);
  const auto reps = class_rep_subgroups(*G);
  for (const auto& H : reps) {
    const GroupPtr Hg = subgroup_group(H);
    const std::string where = "|H|=" + std::to_string(H.order());
    for (const auto& L : reps) {
      const BurnsideElement x = BurnsideElement::transitive(G, L);
      r.record(equal_elements(linearize(burnside_res(x, Hg), s), res_elt(linearize(x, s), Hg)),
               "Res " + where + ", |L|=" + std::to_string(L.order()));
    }
    for (const auto& K : class_rep_subgroups(*Hg)) {
      const BurnsideElement y = BurnsideElement::transitive(Hg, K);
      r.record(equal_elements(linearize(burnside_ind(y, G), s), ind_elt(linearize(y, s), G)),
               "Ind " + where + ", |K|=" + std::to_string(K.order()));
    }
  }
  return r;
}

CheckResult check_commute_brauer(const GroupPtr& G, int p) {
  CheckResult r{"commute-brauer", 0, 0, {}};
  const ModularSetting s = setting_for(*G, p);
  const auto reps = class_rep_subgroups(*G);
  for (const auto& P : p_subgroup_reps(*G, p)) {
    const NormalizerQuotient nq = normalizer_quotient(P);
    for (const auto& L : reps) {
      const BurnsideElement x = BurnsideElement::transitive(G, L);
      const PPElement lhs = linearize(fixed_point_functor(P, x, nq), s);
      const PPElement rhs = brauer_elt(linearize(x, s), P, nq);
      r.record(equal_elements(lhs, rhs), "|P|=" + std::to_string(P.order()) + ", |L|=" + std::to_string(L.order()));
    }
  }
  return r;
}

CheckResult check_points_fixes(const GroupPtr& G) {
  CheckResult r{"points-fixes", 0, 0, {}};
  const BurnsideElement top = gluck_yoshida(G, Subgroup::whole(*G));
  for (const auto& N : class_rep_subgroups(*G)) {
    if (!is_normal(N)) continue;
    const NormalizerQuotient nq = normalizer_quotient(N);
    const GroupPtr& Q = nq.quotient.group;
    r.record(fixed_point_functor(N, top, nq) == gluck_yoshida(Q, Subgroup::whole(*Q)),
             "|N|=" + std::to_string(N.order()));
  }
  return r;
}

CheckResult check_species_multiplicative(const GroupPtr& G, int p, std::size_t samples, Rng& rng) {
  CheckResult r{"species-multiplicative", 0, 0, {}};
  const ModularSetting s = setting_for(*G, p);
  const auto gens = standard_generators(G, s);
  const auto pairs = enumerate_pairs(G, p);
  for (std::size_t i = 0; i < samples; ++i) {
    const Generator& a = gens[pick(rng, gens.size())];
    const Generator& b = gens[pick(rng, gens.size())];
    const PPElement prod = tensor_elt(as_element(G, s, a), as_element(G, s, b));
    bool ok = true;
    for (const auto& pair : pairs) ok = ok && tau(pair, prod) == tau_generator(pair, a) * tau_generator(pair, b);
    r.record(ok, generator_text(a) + " x " + generator_text(b));
  }
  return r;
}

CheckResult check_brauer_multiplicative(const GroupPtr& G, int p, std::size_t samples, Rng& rng) {
  CheckResult r{"brauer-multiplicative", 0, 0, {}};
  const ModularSetting s = setting_for(*G, p);
  const auto gens = standard_generators(G, s);
  const auto ps = p_subgroup_reps(*G, p);
  for (std::size_t i = 0; i < samples; ++i) {
    const Subgroup& P = ps[pick(rng, ps.size())];
    const Generator& a = gens[pick(rng, gens.size())];
    const Generator& b = gens[pick(rng, gens.size())];
    const NormalizerQuotient nq = normalizer_quotient(P);
    const PPElement x = as_element(G, s, a);
    const PPElement y = as_element(G, s, b);
    const auto qpairs = enumerate_pairs(nq.quotient.group, p);
    const SpeciesVector bxy = species_vector(brauer_elt(tensor_elt(x, y), P, nq), qpairs);
    const SpeciesVector bx = species_vector(brauer_elt(x, P, nq), qpairs);
    const SpeciesVector by = species_vector(brauer_elt(y, P, nq), qpairs);
    bool ok = true;
    for (std::size_t k = 0; k < qpairs.size(); ++k) ok = ok && bxy.values[k] == bx.values[k] * by.values[k];
    r.record(ok, "|P|=" + std::to_string(P.order()) + ", " + generator_text(a) + " x " + generator_text(b));
  }
  return r;
}

CheckResult check_factor_tau(const GroupPtr& G, int p) {
  CheckResult r{"factor-tau", 0, 0, {}};
  const ModularSetting s = setting_for(*G, p);
  const auto gens = standard_generators(G, s);
  for (const auto& pair : enumerate_pairs(G, p)) {
    const GroupPtr H = subgroup_group(pair.ps());
    const Subgroup PH = transport(pair.P(), *H);
    const Elem sH = H->index_of(G->element(pair.lift()));
    const NormalizerQuotient nq = normalizer_quotient(PH);
    const Elem sbar = nq.quotient.project[static_cast<std::size_t>(nq.normalizer->index_of(H->element(sH)))];
    const GroupPtr& Q = nq.quotient.group;
    const SpeciesPair qpair = SpeciesPair::make(Q, Subgroup::trivial(*Q), sbar, p);
    for (const auto& gen : gens) {
      const PPElement x = as_element(G, s, gen);
      const Cyclotomic lhs = tau(pair, x);
      const Cyclotomic rhs = tau(qpair, brauer_elt(res_elt(x, H), PH, nq));
      r.record(lhs == rhs, pair.label() + ", " + generator_text(gen));
    }
  }
  return r;
}

CheckResult check_tau_res(const GroupPtr& G, int p) {
  CheckResult r{"tau-res", 0, 0, {}};
  const ModularSetting s = setting_for(*G, p);
  const auto gens = standard_generators(G, s);
  for (const auto& pair : enumerate_pairs(G, p)) {
    const GroupPtr H = subgroup_group(pair.ps());
    const SpeciesPair hpair =
        SpeciesPair::make(H, transport(pair.P(), *H), H->index_of(G->element(pair.lift())), p);
    for (const auto& gen : gens) {
      const PPElement x = as_element(G, s, gen);
      r.record(tau(pair, x) == tau(hpair, res_elt(x, H)), pair.label() + ", " + generator_text(gen));
    }
  }
  return r;
}

CheckResult check_oracle(const GroupPtr& G, int p, std::size_t samples, Rng& rng, int conductor_cap,
                         std::size_t dim_cap) {
  CheckResult r{"oracle-agreement", 0, 0, {}};
  const ModularSetting s = setting_for(*G, p);
  const FqField F = build_field(p, s.conductor, 0, conductor_cap);
  const auto gens = standard_generators(G, s);
  const auto pairs = enumerate_pairs(G, p);
  for (std::size_t i = 0; i < samples; ++i) {
    const SpeciesPair& pair = pairs[pick(rng, pairs.size())];
    const Generator& gen = gens[pick(rng, gens.size())];
    const OracleResult o = oracle_detail(pair, gen, F, dim_cap);
    r.record(o.value == tau_generator(pair, gen) && o.eigen_total == o.brauer_dim,
             pair.label() + ", " + generator_text(gen));
  }
  return r;
}

std::vector<CheckResult> full_suite(const GroupPtr& G, int p, std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CheckResult> out;
  out.push_back(check_delta(G, p));
  out.push_back(check_partition_of_unity(G, p));
  out.push_back(check_route_agreement(G, p));
  out.push_back(check_orthogonality(G, p));
  out.push_back(check_E_decomposition(G, p));
  out.push_back(check_restriction(G, p));
  out.push_back(check_induction(G, p));
  out.push_back(check_marks_delta(G));
  out.push_back(check_gy_idempotent(G));
  out.push_back(check_commute_res_ind(G, p));
  out.push_back(check_commute_brauer(G, p));
  out.push_back(check_points_fixes(G));
  out.push_back(check_species_multiplicative(G, p, samples, rng));
  out.push_back(check_brauer_multiplicative(G, p, samples, rng));
  out.push_back(check_factor_tau(G, p));
  out.push_back(check_tau_res(G, p));
  return out;
}

}  // namespace ppring
