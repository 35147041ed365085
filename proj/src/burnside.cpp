#include "ppring/burnside.hpp"

#include "ppring/lattice.hpp"

namespace ppring {

namespace {

Subgroup on(const FiniteGroup& G, const Subgroup& H) {
  if (&H.group() == &G) return H;
  if (!same_group(H.group(), G)) throw Error(ErrorCode::GroupMismatch, "subgroup of a different group");
  return Subgroup(G, H.elements());
}

// The G-set G/L: cosets labelled by minimal representatives, with the orbit
// decomposition of a subgroup A acting by left multiplication.
struct CosetSpace {
  const FiniteGroup& G;
  std::vector<int> label;  // element -> coset id
  std::vector<Elem> reps;

  explicit CosetSpace(const Subgroup& L) : G(L.group()), label(L.group().order(), -1) {
    for (std::size_t g = 0; g < G.order(); ++g) {
      if (label[g] >= 0) continue;
      const int id = static_cast<int>(reps.size());
      reps.push_back(static_cast<Elem>(g));
      for (Elem l : L.elements()) label[static_cast<std::size_t>(G.mul(static_cast<Elem>(g), l))] = id;
    }
  }

  int act(Elem a, int coset) const {
    return label[static_cast<std::size_t>(G.mul(a, reps[static_cast<std::size_t>(coset)]))];
  }

  /// Orbits of A on the given cosets: (representative coset, stabilizer in A).
  std::vector<std::pair<int, std::vector<Elem>>> orbits(const Subgroup& A, const std::vector<int>& points) const {
    std::vector<bool> done(reps.size(), false);
    std::vector<std::pair<int, std::vector<Elem>>> out;
    for (int c : points) {
      if (done[static_cast<std::size_t>(c)]) continue;
      std::vector<Elem> stab;
      for (Elem a : A.elements()) {
        const int d = act(a, c);
        done[static_cast<std::size_t>(d)] = true;
        if (d == c) stab.push_back(a);
      }
      out.emplace_back(c, std::move(stab));
    }
    return out;
  }
};

}  // namespace

BurnsideElement::BurnsideElement(GroupPtr G) : group_(std::move(G)) {}

BurnsideElement BurnsideElement::transitive(GroupPtr G, const Subgroup& L) {
  BurnsideElement x(std::move(G));
  x.add(L, Rational(1));
  return x;
}

void BurnsideElement::add(const Subgroup& L, const Rational& c) {
  if (c == 0) return;
  const Subgroup& rep = group_->lattice().class_rep(on(*group_, L));
  auto [it, fresh] = coeffs_.try_emplace(rep, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& rhs) {
  if (!same_group(*group_, *rhs.group_)) throw Error(ErrorCode::GroupMismatch, "Burnside elements over different groups");
  for (const auto& [L, c] : rhs.coeffs_) add(L, c);
  return *this;
}

BurnsideElement& BurnsideElement::operator*=(const Rational& r) {
  if (r == 0) coeffs_.clear();
  for (auto& [L, c] : coeffs_) c *= r;
  return *this;
}

bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
  if (!same_group(*a.group_, *b.group_)) return false;
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (auto ia = a.coeffs_.begin(), ib = b.coeffs_.begin(); ia != a.coeffs_.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || ia->second != ib->second) return false;
  }
  return true;
}

long long mark(const Subgroup& L, const Subgroup& H0) {
  const FiniteGroup& G = L.group();
  const Subgroup H = on(G, H0);
  long long count = 0;
  for (Elem g : left_transversal(L)) {
    bool fixed = true;
    for (Elem h : H.elements()) {
      if (!L.contains(G.conj(h, g))) {
        fixed = false;
        break;
      }
    }
    if (fixed) ++count;
  }
  return count;
}

Rational mark(const BurnsideElement& x, const Subgroup& H) {
  Rational acc = 0;
  for (const auto& [L, c] : x.coeffs()) acc += c * static_cast<long>(mark(L, H));
  return acc;
}

BurnsideElement burnside_product(const BurnsideElement& a, const BurnsideElement& b) {
  if (!same_group(a.group(), b.group())) throw Error(ErrorCode::GroupMismatch, "Burnside product over different groups");
  const FiniteGroup& G = a.group();
  BurnsideElement out(a.group_ptr());
  for (const auto& [A, ca] : a.coeffs()) {
    for (const auto& [B0, cb] : b.coeffs()) {
      const Subgroup B = on(G, B0);
      for (Elem g : double_coset_reps(A, B)) out.add(intersect(A, B.conjugate(G.inv(g))), ca * cb);
    }
  }
  return out;
}

BurnsideElement gluck_yoshida(const GroupPtr& Gp, const Subgroup& H0) {
  const FiniteGroup& G = *Gp;
  const Subgroup H = on(G, H0);
  const SubgroupLattice& lat = G.lattice();
  const std::size_t hi = lat.index_of(H);
  BurnsideElement out(Gp);
  for (std::size_t li = 0; li <= hi; ++li) {
    if (!lat.leq(li, hi)) continue;
    const long long mu = lat.moebius(li, hi);
    if (mu != 0) out.add(lat[li], Rational(static_cast<long>(lat[li].order() * mu)));
  }
  out *= frac(1, static_cast<long>(normalizer(G, H).order()));
  return out;
}

BurnsideElement fixed_point_functor(const Subgroup& P0, const BurnsideElement& x, const NormalizerQuotient& target) {
  const FiniteGroup& G = x.group();
  const Subgroup P = on(G, P0);
  const QuotientGroup& Q = target.quotient;
  const FiniteGroup& Ng = *target.normalizer;
  const Subgroup N(G, target.to_parent);
  BurnsideElement out(Q.group);
  for (const auto& [L, c] : x.coeffs()) {
    CosetSpace space(L);
    std::vector<int> fixed;
    for (std::size_t k = 0; k < space.reps.size(); ++k) {
      bool f = true;
      for (Elem u : P.elements()) {
        if (space.act(u, static_cast<int>(k)) != static_cast<int>(k)) {
          f = false;
          break;
        }
      }
      if (f) fixed.push_back(static_cast<int>(k));
    }
    for (const auto& [coset, stab] : space.orbits(N, fixed)) {
      std::vector<Elem> img;
      for (Elem s : stab) img.push_back(Q.project[static_cast<std::size_t>(Ng.index_of(G.element(s)))]);
      out.add(Subgroup(*Q.group, std::move(img)), c);
    }
  }
  return out;
}

BurnsideElement fixed_point_functor(const Subgroup& P, const BurnsideElement& x) {
  return fixed_point_functor(P, x, normalizer_quotient(on(x.group(), P)));
}

BurnsideElement burnside_res(const BurnsideElement& x, const GroupPtr& Hp) {
  const FiniteGroup& G = x.group();
  const std::vector<Elem> emb = embedding(*Hp, G);
  const Subgroup Hs(G, emb);
  BurnsideElement out(Hp);
  for (const auto& [L, c] : x.coeffs()) {
    CosetSpace space(L);
    std::vector<int> all(space.reps.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
    for (const auto& [coset, stab] : space.orbits(Hs, all)) {
      std::vector<Elem> local;
      for (Elem s : stab) local.push_back(Hp->index_of(G.element(s)));
      out.add(Subgroup(*Hp, std::move(local)), c);
    }
  }
  return out;
}

BurnsideElement burnside_ind(const BurnsideElement& x, const GroupPtr& Gp) {
  const std::vector<Elem> emb = embedding(x.group(), *Gp);
  BurnsideElement out(Gp);
  for (const auto& [K, c] : x.coeffs()) {
    std::vector<Elem> img;
    for (Elem k : K.elements()) img.push_back(emb[static_cast<std::size_t>(k)]);
    out.add(Subgroup(*Gp, std::move(img)), c);
  }
  return out;
}

PPElement linearize(const BurnsideElement& x, ModularSetting setting) {
  PPElement out(x.group_ptr(), setting);
  for (const auto& [L, c] : x.coeffs()) {
    out += PPElement::generator(x.group_ptr(), setting, L, LinChar::trivial(L, setting.conductor),
                                Cyclotomic(setting.conductor, c));
  }
  return out;
}

}  // namespace ppring
