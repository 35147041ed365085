#include "ppring/ppelem.hpp"

#include <algorithm>
#include <numeric>

namespace ppring {

namespace {

int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// The same element set viewed inside another (structurally equal) group object.
Subgroup rehome(const Subgroup& H, const FiniteGroup& G) {
  if (&H.group() == &G) return H;
  if (!same_group(H.group(), G)) throw Error(ErrorCode::GroupMismatch, "subgroup lives in a different group");
  return Subgroup(G, H.elements());
}

// Builds a character table from (element, exponent) pairs in arbitrary order.
LinChar table_char(const FiniteGroup& G, std::vector<std::pair<Elem, int>> entries, int n) {
  std::sort(entries.begin(), entries.end());
  std::vector<Elem> elems;
  std::vector<int> exps;
  for (const auto& [x, e] : entries) {
    elems.push_back(x);
    exps.push_back(e);
  }
  return LinChar::unchecked(Subgroup(G, std::move(elems)), std::move(exps), n);
}

}  // namespace

ModularSetting setting_for(const FiniteGroup& G, int p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPPrime, std::to_string(p) + " is not prime");
  const long long e = G.exponent();
  return ModularSetting{p, static_cast<int>(e / p_part(e, p))};
}

// ---------------------------------------------------------------------------
// LinChar

LinChar::LinChar(Subgroup domain, std::vector<int> exponents, int conductor, NoCheck)
    : domain_(std::move(domain)), exps_(std::move(exponents)), n_(conductor) {}

LinChar::LinChar(Subgroup domain, std::vector<int> exponents, int conductor)
    : domain_(std::move(domain)), exps_(std::move(exponents)), n_(conductor) {
  if (n_ < 1 || exps_.size() != domain_.order()) throw Error(ErrorCode::BadIndex, "character table has wrong size");
  for (auto& e : exps_) e = mod(e, n_);
  const FiniteGroup& G = domain_.group();
  const auto& el = domain_.elements();
  for (std::size_t a = 0; a < el.size(); ++a) {
    for (std::size_t b = 0; b < el.size(); ++b) {
      if ((*this)(G.mul(el[a], el[b])) != (exps_[a] + exps_[b]) % n_) {
        throw Error(ErrorCode::BadIndex, "character table is not a homomorphism");
      }
    }
  }
}

LinChar LinChar::trivial(Subgroup domain, int conductor) {
  std::vector<int> zeros(domain.order(), 0);
  return LinChar(std::move(domain), std::move(zeros), conductor, NoCheck{});
}

LinChar LinChar::unchecked(Subgroup domain, std::vector<int> exponents, int conductor) {
  return LinChar(std::move(domain), std::move(exponents), conductor, NoCheck{});
}

bool LinChar::is_trivial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

int LinChar::order() const {
  int g = n_;
  for (int e : exps_) g = std::gcd(g, e);
  return n_ / g;
}

bool LinChar::kills_p_elements(int p) const {
  const FiniteGroup& G = domain_.group();
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (prime_power_base(G.element_order(domain_.elements()[i])) == p && exps_[i] != 0) return false;
  }
  return true;
}

LinChar LinChar::restrict_to(const Subgroup& L) const {
  if (!L.is_subgroup_of(domain_)) throw Error(ErrorCode::NotSubgroup, "restriction target is not in the domain");
  std::vector<int> exps;
  exps.reserve(L.order());
  for (Elem x : L.elements()) exps.push_back((*this)(x));
  return LinChar(L, std::move(exps), n_, NoCheck{});
}

LinChar LinChar::conjugate(Elem g) const {
  const FiniteGroup& G = domain_.group();
  std::vector<std::pair<Elem, int>> entries;
  entries.reserve(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) entries.emplace_back(G.conj(domain_.elements()[i], g), exps_[i]);
  return table_char(G, std::move(entries), n_);
}

LinChar operator*(const LinChar& a, const LinChar& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::ConductorMismatch, "characters at different conductors");
  if (!(a.domain_ == b.domain_)) throw Error(ErrorCode::GroupMismatch, "characters on different subgroups");
  std::vector<int> exps(a.exps_.size());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = (a.exps_[i] + b.exps_[i]) % a.n_;
  return LinChar(a.domain_, std::move(exps), a.n_, LinChar::NoCheck{});
}

std::vector<LinChar> linear_characters(const Subgroup& L, int conductor) {
  const FiniteGroup& G = L.group();
  const std::vector<Elem> gens = L.generators();
  std::vector<LinChar> out;
  std::vector<int> choice(gens.size(), 0);
  while (true) {
    // Extend along the Cayley graph of L; reject on any inconsistency.
    std::vector<int> value(G.order(), -1);
    value[0] = 0;
    std::vector<Elem> queue{FiniteGroup::identity()};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Elem y = G.mul(queue[i], gens[k]);
        const int v = (value[static_cast<std::size_t>(queue[i])] + choice[k]) % conductor;
        int& slot = value[static_cast<std::size_t>(y)];
        if (slot < 0) {
          slot = v;
          queue.push_back(y);
        } else if (slot != v) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      std::vector<int> exps;
      for (Elem x : L.elements()) exps.push_back(value[static_cast<std::size_t>(x)]);
      out.push_back(LinChar::unchecked(L, std::move(exps), conductor));
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == conductor) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generator

Generator::Generator(const Subgroup& L, const LinChar& chi) : subgroup_(L), chi_(chi) {
  if (!(chi.domain() == L)) throw Error(ErrorCode::GroupMismatch, "character domain differs from the subgroup");
  const FiniteGroup& G = L.group();
  std::vector<Elem> best_g{FiniteGroup::identity()};
  for (std::size_t g = 1; g < G.order(); ++g) {
    Subgroup c = L.conjugate(static_cast<Elem>(g));
    if (c < subgroup_) {
      subgroup_ = std::move(c);
      best_g.assign(1, static_cast<Elem>(g));
    } else if (c == subgroup_) {
      best_g.push_back(static_cast<Elem>(g));
    }
  }
  bool first = true;
  for (Elem g : best_g) {
    LinChar c = chi.conjugate(g);
    if (first || c.exponents() < chi_.exponents()) chi_ = std::move(c);
    first = false;
  }
}

bool operator<(const Generator& a, const Generator& b) {
  if (a.subgroup_ < b.subgroup_) return true;
  if (b.subgroup_ < a.subgroup_) return false;
  return a.chi_.exponents() < b.chi_.exponents();
}

bool operator==(const Generator& a, const Generator& b) {
  return a.subgroup_ == b.subgroup_ && a.chi_.exponents() == b.chi_.exponents();
}

// ---------------------------------------------------------------------------
// PPElement

PPElement::PPElement(GroupPtr G, ModularSetting setting) : group_(std::move(G)), setting_(setting) {}

PPElement PPElement::generator(GroupPtr G, ModularSetting setting, const Subgroup& L, const LinChar& chi) {
  return generator(std::move(G), setting, L, chi, Cyclotomic(setting.conductor, Rational(1)));
}

PPElement PPElement::generator(GroupPtr G, ModularSetting setting, const Subgroup& L, const LinChar& chi,
                               const Cyclotomic& coeff) {
  if (chi.conductor() != setting.conductor) throw Error(ErrorCode::ConductorMismatch, "character conductor");
  PPElement x(std::move(G), setting);
  Subgroup Lh = rehome(L, *x.group_);
  x.add_term(Generator(Lh, LinChar::unchecked(Lh, chi.exponents(), chi.conductor())), coeff);
  return x;
}

PPElement PPElement::one(GroupPtr G, ModularSetting setting) {
  Subgroup all = Subgroup::whole(*G);
  return generator(G, setting, all, LinChar::trivial(all, setting.conductor));
}

void PPElement::add_term(const Generator& gen, const Cyclotomic& coeff) {
  if (coeff.conductor() != setting_.conductor || gen.character().conductor() != setting_.conductor) {
    throw Error(ErrorCode::ConductorMismatch, "term conductor differs from the element's");
  }
  if (coeff.is_zero()) return;
  auto insert = [&](const Generator& g) {
    auto [it, fresh] = terms_.try_emplace(g, coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  };
  if (&gen.group() == group_.get()) {
    insert(gen);
  } else {
    Subgroup L = rehome(gen.subgroup(), *group_);
    insert(Generator(L, LinChar::unchecked(L, gen.character().exponents(), setting_.conductor)));
  }
}

void PPElement::check_compatible(const PPElement& rhs) const {
  if (!same_group(*group_, *rhs.group_)) throw Error(ErrorCode::GroupMismatch, "elements over different groups");
  if (!(setting_ == rhs.setting_)) throw Error(ErrorCode::ConductorMismatch, "elements in different settings");
}

PPElement& PPElement::operator+=(const PPElement& rhs) {
  check_compatible(rhs);
  for (const auto& [g, c] : rhs.terms_) add_term(g, c);
  return *this;
}

PPElement& PPElement::operator-=(const PPElement& rhs) {
  check_compatible(rhs);
  for (const auto& [g, c] : rhs.terms_) add_term(g, -c);
  return *this;
}

PPElement& PPElement::operator*=(const Cyclotomic& c) {
  if (c.conductor() != setting_.conductor) throw Error(ErrorCode::ConductorMismatch, "scalar conductor");
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

PPElement& PPElement::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, c] : terms_) c *= r;
  return *this;
}

// ---------------------------------------------------------------------------
// Operations

LinChar char_pullback(const Subgroup& ps, const Subgroup& P, Elem s_lift, int j, const Subgroup& L, int conductor) {
  const FiniteGroup& G = ps.group();
  if (!P.is_subgroup_of(ps) || !is_normal(P, ps)) throw Error(ErrorCode::NotNormal, "P is not normal in <Ps>");
  if (!ps.contains(s_lift)) throw Error(ErrorCode::BadIndex, "lift is not in <Ps>");
  if (!L.is_subgroup_of(ps)) throw Error(ErrorCode::NotSubgroup, "L is not a subgroup of <Ps>");
  // Powers of the lift modulo P.
  std::vector<Elem> powers{FiniteGroup::identity()};
  while (true) {
    Elem next = G.mul(powers.back(), s_lift);
    if (P.contains(next)) break;
    powers.push_back(next);
  }
  const int m = static_cast<int>(powers.size());
  if (static_cast<std::size_t>(m) * P.order() != ps.order()) {
    throw Error(ErrorCode::BadIndex, "<Ps>/P is not generated by the image of the lift");
  }
  if (j < 0 || j >= m) throw Error(ErrorCode::BadIndex, "character index out of range");
  if (conductor % m != 0) throw Error(ErrorCode::ConductorMismatch, "|s| does not divide the conductor");
  const int step = conductor / m;
  std::vector<int> exps;
  exps.reserve(L.order());
  for (Elem x : L.elements()) {
    int a = 0;
    while (!P.contains(G.mul(G.inv(powers[static_cast<std::size_t>(a)]), x))) ++a;
    exps.push_back(mod(static_cast<long long>(j) * a * step, conductor));
  }
  return LinChar::unchecked(L, std::move(exps), conductor);
}

PPElement res_elt(const PPElement& x, const GroupPtr& H) {
  const FiniteGroup& G = x.group();
  const std::vector<Elem> emb = embedding(*H, G);
  std::vector<Elem> back(G.order(), -1);
  for (std::size_t i = 0; i < emb.size(); ++i) back[static_cast<std::size_t>(emb[i])] = static_cast<Elem>(i);
  const Subgroup Hs(G, emb);
  const int n = x.conductor();

  PPElement out(H, x.setting());
  for (const auto& [gen, coeff] : x.terms()) {
    const Subgroup& L = gen.subgroup();
    const LinChar& chi = gen.character();
    for (Elem g : double_coset_reps(Hs, L)) {
      // H ∩ gLg^-1 with the character h ↦ χ(g^-1 h g).
      const Subgroup K = intersect(Hs, L.conjugate(G.inv(g)));
      std::vector<std::pair<Elem, int>> entries;
      for (Elem k : K.elements()) entries.emplace_back(back[static_cast<std::size_t>(k)], chi(G.conj(k, g)));
      LinChar psi = table_char(*H, std::move(entries), n);
      Subgroup Kh = psi.domain();
      out.add_term(Generator(Kh, psi), coeff);
    }
  }
  return out;
}

PPElement res_elt(const PPElement& x, const Subgroup& H) {
  if (!same_group(H.group(), x.group())) throw Error(ErrorCode::GroupMismatch, "restriction to a foreign subgroup");
  return res_elt(x, subgroup_group(H));
}

PPElement ind_elt(const PPElement& x, const GroupPtr& G) {
  const std::vector<Elem> emb = embedding(x.group(), *G);
  PPElement out(G, x.setting());
  for (const auto& [gen, coeff] : x.terms()) {
    std::vector<std::pair<Elem, int>> entries;
    const auto& el = gen.subgroup().elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
      entries.emplace_back(emb[static_cast<std::size_t>(el[i])], gen.character().exponents()[i]);
    }
    LinChar chi = table_char(*G, std::move(entries), x.conductor());
    Subgroup L = chi.domain();
    out.add_term(Generator(L, chi), coeff);
  }
  return out;
}

PPElement inf_elt(const PPElement& x, const QuotientGroup& Q) {
  if (!same_group(x.group(), *Q.group)) throw Error(ErrorCode::QuotientMismatch, "element is not over the quotient");
  const FiniteGroup& G = *Q.parent;
  PPElement out(Q.parent, x.setting());
  for (const auto& [gen, coeff] : x.terms()) {
    std::vector<Elem> elems;
    std::vector<int> exps;
    for (std::size_t g = 0; g < G.order(); ++g) {
      const Elem q = Q.project[g];
      if (!gen.subgroup().contains(q)) continue;
      elems.push_back(static_cast<Elem>(g));
      exps.push_back(gen.character()(q));
    }
    Subgroup L(G, std::move(elems));
    out.add_term(Generator(L, LinChar::unchecked(L, std::move(exps), x.conductor())), coeff);
  }
  return out;
}

PPElement tensor_elt(const PPElement& x, const PPElement& y) {
  if (!same_group(x.group(), y.group())) throw Error(ErrorCode::GroupMismatch, "tensor of elements over different groups");
  if (!(x.setting() == y.setting())) throw Error(ErrorCode::ConductorMismatch, "tensor across settings");
  const FiniteGroup& G = x.group();
  const int n = x.conductor();
  PPElement out(x.group_ptr(), x.setting());
  for (const auto& [ga, ca] : x.terms()) {
    const Subgroup& A = ga.subgroup();
    for (const auto& [gb, cb] : y.terms()) {
      const Subgroup B = rehome(gb.subgroup(), G);
      const Cyclotomic c = ca * cb;
      for (Elem g : double_coset_reps(A, B)) {
        const Subgroup K = intersect(A, B.conjugate(G.inv(g)));
        std::vector<int> exps;
        exps.reserve(K.order());
        for (Elem k : K.elements()) exps.push_back((ga.character()(k) + gb.character()(G.conj(k, g))) % n);
        out.add_term(Generator(K, LinChar::unchecked(K, std::move(exps), n)), c);
      }
    }
  }
  return out;
}

PPElement brauer_elt(const PPElement& x, const Subgroup& P, const NormalizerQuotient& target) {
  if (!is_p_group(P, x.setting().p)) throw Error(ErrorCode::NotPGroup, "Brauer morphism needs a p-subgroup");
  if (!same_group(P.group(), x.group())) throw Error(ErrorCode::GroupMismatch, "P is not a subgroup of the group");
  const QuotientGroup& Q = target.quotient;
  const PPElement xn = res_elt(x, target.normalizer);
  PPElement out(Q.group, x.setting());
  for (const auto& [gen, coeff] : xn.terms()) {
    const Subgroup L = rehome(gen.subgroup(), *target.normalizer);
    if (!Q.kernel.is_subgroup_of(L)) continue;
    // Every coset is P-fixed; χ factors through L/P since it kills p-elements.
    std::vector<std::pair<Elem, int>> entries;
    std::vector<bool> seen(Q.group->order(), false);
    for (std::size_t i = 0; i < L.order(); ++i) {
      const Elem q = Q.project[static_cast<std::size_t>(L.elements()[i])];
      if (seen[static_cast<std::size_t>(q)]) continue;
      seen[static_cast<std::size_t>(q)] = true;
      entries.emplace_back(q, gen.character().exponents()[i]);
    }
    LinChar chibar = table_char(*Q.group, std::move(entries), x.conductor());
    Subgroup Lbar = chibar.domain();
    out.add_term(Generator(Lbar, chibar), coeff);
  }
  return out;
}

PPElement brauer_elt(const PPElement& x, const Subgroup& P) {
  const Subgroup Ph = rehome(P, x.group());
  return brauer_elt(x, Ph, normalizer_quotient(Ph));
}

}  // namespace ppring
