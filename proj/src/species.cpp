#include "ppring/species.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ppring/lattice.hpp"

namespace ppring {

SpeciesPair::SpeciesPair(GroupPtr G, Subgroup P, Elem lift, int p, Subgroup ps, Subgroup stab, int s_order)
    : group_(std::move(G)),
      p_(p),
      P_(std::move(P)),
      lift_(lift),
      ps_(std::move(ps)),
      stabilizer_(std::move(stab)),
      s_order_(s_order) {}

SpeciesPair SpeciesPair::make(GroupPtr G, const Subgroup& P0, Elem lift, int p) {
  const FiniteGroup& g = *G;
  Subgroup P = &P0.group() == G.get() ? P0 : Subgroup(g, P0.elements());
  if (!is_p_group(P, p)) throw Error(ErrorCode::NotPGroup, "pair needs a p-subgroup");
  if (std::gcd(g.element_order(lift), p) != 1) throw Error(ErrorCode::BadIndex, "lift must have p'-order");
  for (Elem u : P.elements()) {
    if (!P.contains(g.conj(u, lift))) throw Error(ErrorCode::BadIndex, "lift does not normalize P");
  }
  std::vector<Elem> gens = P.generators();
  gens.push_back(lift);
  Subgroup ps = generate(g, gens);
  // N_G(P, s) = {x ∈ N_G(P) : t^-1 x^-1 t x ∈ P}.
  std::vector<Elem> stab;
  const Subgroup N = normalizer(g, P);
  for (Elem x : N.elements()) {
    if (P.contains(g.mul(g.inv(lift), g.conj(lift, x)))) stab.push_back(x);
  }
  Subgroup st(g, std::move(stab));
  const int s_order = g.element_order(lift);
  return SpeciesPair(std::move(G), std::move(P), lift, p, std::move(ps), std::move(st), s_order);
}

std::string SpeciesPair::label() const {
  std::ostringstream os;
  os << "(|P|=" << P_.order() << " P=<";
  const auto gens = P_.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? "," : "") << group_->element(gens[i]).to_string();
  os << ">, s=" << group_->element(lift_).to_string() << ")";
  return os.str();
}

std::vector<SpeciesPair> enumerate_pairs(const GroupPtr& Gp, int p) {
  const FiniteGroup& G = *Gp;
  const SubgroupLattice& lat = G.lattice();
  std::vector<SpeciesPair> out;
  for (std::size_t idx : lat.class_reps()) {
    const Subgroup& P = lat[idx];
    if (!is_p_group(P, p)) continue;
    const Subgroup N = normalizer(G, P);
    std::vector<Elem> chosen;
    for (Elem t : N.elements()) {
      if (std::gcd(G.element_order(t), p) != 1) continue;
      bool fresh = true;
      for (Elem c : chosen) {
        if (G.element_order(c) != G.element_order(t)) continue;
        for (Elem g : N.elements()) {
          if (P.contains(G.mul(G.inv(c), G.conj(t, g)))) {
            fresh = false;
            break;
          }
        }
        if (!fresh) break;
      }
      if (fresh) chosen.push_back(t);
    }
    std::stable_sort(chosen.begin(), chosen.end(),
                     [&](Elem a, Elem b) { return G.element_order(a) < G.element_order(b); });
    for (Elem t : chosen) out.push_back(SpeciesPair::make(Gp, P, t, p));
  }
  return out;
}

bool pairs_conjugate(const SpeciesPair& a, const SpeciesPair& b) {
  if (!same_group(a.group(), b.group())) throw Error(ErrorCode::GroupMismatch, "pairs over different groups");
  if (a.P().order() != b.P().order() || a.s_order() != b.s_order()) return false;
  const FiniteGroup& G = a.group();
  const Subgroup Pb(G, b.P().elements());
  for (std::size_t i = 0; i < G.order(); ++i) {
    const Elem g = static_cast<Elem>(i);
    if (!(a.P().conjugate(g) == Pb)) continue;
    if (Pb.contains(G.mul(G.conj(a.lift(), g), G.inv(b.lift())))) return true;
  }
  return false;
}

Cyclotomic tau_generator(const SpeciesPair& pair, const Generator& gen) {
  if (!same_group(pair.group(), gen.group())) throw Error(ErrorCode::GroupMismatch, "generator over another group");
  const int n = gen.character().conductor();
  if (n % pair.s_order() != 0) throw Error(ErrorCode::ConductorMismatch, "|s| does not divide the conductor");
  const FiniteGroup& G = pair.group();
  const Subgroup& L = gen.subgroup();
  const std::vector<Elem> pgens = pair.P().generators();
  std::vector<long long> counts(static_cast<std::size_t>(n), 0);
  for (Elem g : left_transversal(L)) {
    const Elem t = G.conj(pair.lift(), g);
    if (!L.contains(t)) continue;
    bool fixed = true;
    for (Elem u : pgens) {
      if (!L.contains(G.conj(u, g))) {
        fixed = false;
        break;
      }
    }
    if (fixed) ++counts[static_cast<std::size_t>(gen.character()(t))];
  }
  return Cyclotomic::from_exponent_counts(n, counts);
}

Cyclotomic tau(const SpeciesPair& pair, const PPElement& x) {
  Cyclotomic acc(x.conductor());
  for (const auto& [gen, coeff] : x.terms()) acc += coeff * tau_generator(pair, gen);
  return acc;
}

SpeciesVector species_vector(const PPElement& x, const std::vector<SpeciesPair>& pairs) {
  SpeciesVector v{pairs, {}};
  v.values.reserve(pairs.size());
  for (const auto& pr : pairs) v.values.push_back(tau(pr, x));
  return v;
}

SpeciesVector species_vector(const PPElement& x) {
  return species_vector(x, enumerate_pairs(x.group_ptr(), x.setting().p));
}

bool equal_elements(const PPElement& x, const PPElement& y) {
  if (!same_group(x.group(), y.group())) throw Error(ErrorCode::GroupMismatch, "elements over different groups");
  // Species are linear, so x = y iff every species of x - y vanishes.
  const PPElement d = x - y;
  for (const auto& pr : enumerate_pairs(x.group_ptr(), x.setting().p)) {
    if (!tau(pr, d).is_zero()) return false;
  }
  return true;
}

}  // namespace ppring
