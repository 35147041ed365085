#include "ppring/grp.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "ppring/lattice.hpp"

namespace ppring {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::ConductorMismatch: return "ConductorMismatch";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::QuotientMismatch: return "QuotientMismatch";
    case ErrorCode::NotPGroup: return "NotPGroup";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::NotPPrime: return "NotPPrime";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::InvalidPermutation, "image list is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i];
      if (a < 0 || a >= degree || used[static_cast<std::size_t>(a)]) {
        throw Error(ErrorCode::InvalidPermutation, "bad or repeated point in cycle");
      }
      used[static_cast<std::size_t>(a)] = true;
      img[static_cast<std::size_t>(a)] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw Error(ErrorCode::InvalidPermutation, "degree mismatch in product");
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[i] = rhs.images_[static_cast<std::size_t>(images_[i])];
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    std::vector<int> cyc;
    for (int j = static_cast<int>(i); !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::~FiniteGroup() = default;

GroupPtr close_generators(int degree, std::vector<Permutation> gens, std::size_t cap) {
  for (const auto& g : gens) {
    if (g.degree() != degree) throw Error(ErrorCode::InvalidPermutation, "generator degree mismatch");
  }
  std::set<Permutation> seen;
  std::deque<Permutation> todo;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Permutation cur = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : gens) {
      Permutation next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw Error(ErrorCode::OrderCapExceeded, "group order exceeds cap " + std::to_string(cap));
        }
        todo.push_back(std::move(next));
      }
    }
  }

  std::shared_ptr<FiniteGroup> G(new FiniteGroup());
  G->degree_ = degree;
  G->generators_ = std::move(gens);
  G->elements_.assign(seen.begin(), seen.end());
  const std::size_t n = G->elements_.size();
  G->mul_.resize(n * n);
  G->inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      G->mul_[a * n + b] = G->index_of(G->elements_[a] * G->elements_[b]);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (G->mul_[a * n + b] == 0) {
        G->inv_[a] = static_cast<Elem>(b);
        break;
      }
    }
  }
  G->elem_order_.resize(n);
  long long expo = 1;
  for (std::size_t a = 0; a < n; ++a) {
    int k = 1;
    for (Elem x = static_cast<Elem>(a); x != 0; x = G->mul_[static_cast<std::size_t>(x) * n + a]) ++k;
    G->elem_order_[a] = k;
    expo = std::lcm(expo, static_cast<long long>(G->elem_order_[a]));
  }
  G->exponent_ = static_cast<int>(expo);
  return G;
}

Elem FiniteGroup::pow(Elem x, long long k) const {
  const long long ord = element_order(x);
  k %= ord;
  if (k < 0) k += ord;
  Elem r = identity();
  for (long long i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

std::optional<Elem> FiniteGroup::find(const Permutation& perm) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), perm);
  if (it == elements_.end() || *it != perm) return std::nullopt;
  return static_cast<Elem>(it - elements_.begin());
}

Elem FiniteGroup::index_of(const Permutation& perm) const {
  auto idx = find(perm);
  if (!idx) throw Error(ErrorCode::NotSubgroup, "permutation " + perm.to_string() + " is not in the group");
  return *idx;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = a + 1; b < order(); ++b) {
      if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) != mul(static_cast<Elem>(b), static_cast<Elem>(a))) {
        return false;
      }
    }
  }
  return true;
}

const SubgroupLattice& FiniteGroup::lattice() const {
  std::call_once(lattice_once_, [this] { lattice_ = std::make_unique<SubgroupLattice>(*this); });
  return *lattice_;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<Elem> elems)
    : group_(&parent), elems_(std::move(elems)), member_(parent.order(), false) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  for (Elem x : elems_) member_[static_cast<std::size_t>(x)] = true;
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) { return Subgroup(parent, {FiniteGroup::identity()}); }

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<Elem> all(parent.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(parent, std::move(all));
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (group_ != other.group_ || order() > other.order()) return false;
  return std::all_of(elems_.begin(), elems_.end(), [&](Elem x) { return other.contains(x); });
}

std::size_t Subgroup::position(Elem x) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  return static_cast<std::size_t>(it - elems_.begin());
}

Subgroup Subgroup::conjugate(Elem g) const {
  std::vector<Elem> out;
  out.reserve(elems_.size());
  for (Elem x : elems_) out.push_back(group_->conj(x, g));
  return Subgroup(*group_, std::move(out));
}

std::vector<Elem> Subgroup::generators() const {
  std::vector<Elem> gens;
  Subgroup cur = trivial(*group_);
  for (Elem x : elems_) {
    if (cur.order() == order()) break;
    if (!cur.contains(x)) {
      gens.push_back(x);
      cur = generate(*group_, gens);
    }
  }
  return gens;
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elems_ < b.elems_;
}

Subgroup generate(const FiniteGroup& G, std::span<const Elem> gens) {
  std::vector<bool> in(G.order(), false);
  std::vector<Elem> elems{FiniteGroup::identity()};
  in[0] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Elem g : gens) {
      Elem y = G.mul(elems[i], g);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        elems.push_back(y);
      }
    }
  }
  return Subgroup(G, std::move(elems));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> gens = a.generators();
  for (Elem x : b.generators()) gens.push_back(x);
  return generate(a.group(), gens);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return Subgroup(a.group(), std::move(out));
}

// ---------------------------------------------------------------------------
// Arithmetic helpers

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

long long prime_power_base(long long n) {
  if (n == 1) return 1;
  if (n < 1) return 0;
  long long p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

bool is_p_group(const Subgroup& H, int p) {
  long long b = prime_power_base(static_cast<long long>(H.order()));
  return b == 1 || b == p;
}

long long p_part(long long n, int p) {
  long long r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Sylow subgroups, p'-parts

Subgroup sylow(const FiniteGroup& G, int p) {
  const auto target = static_cast<std::size_t>(p_part(static_cast<long long>(G.order()), p));
  Subgroup P = Subgroup::trivial(G);
  while (P.order() < target) {
    Subgroup N = normalizer(G, P);
    bool grown = false;
    for (Elem x : N.elements()) {
      if (P.contains(x) || prime_power_base(G.element_order(x)) != p) continue;
      // x normalizes P, so <P, x> = P<x> is again a p-group.
      std::vector<Elem> gens = P.generators();
      gens.push_back(x);
      P = generate(G, gens);
      grown = true;
      break;
    }
    if (!grown) break;
  }
  return P;
}

Elem p_prime_part(const FiniteGroup& G, Elem x, int p) {
  const long long ord = G.element_order(x);
  const long long pa = p_part(ord, p);
  const long long r = ord / pa;
  long long m = 0;
  for (long long c = 0; c < r; ++c) {
    if ((pa * c) % r == 1 % r) {
      m = c;
      break;
    }
  }
  return G.pow(x, pa * m);
}

Permutation p_prime_part(const FiniteGroup& G, const Permutation& x, int p) {
  return G.element(p_prime_part(G, G.index_of(x), p));
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
  std::vector<Elem> out;
  for (std::size_t g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem h : H.elements()) {
      if (!H.contains(G.conj(h, static_cast<Elem>(g)))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(static_cast<Elem>(g));
  }
  return Subgroup(G, std::move(out));
}

Subgroup centralizer(const FiniteGroup& G, Elem x) {
  std::vector<Elem> out;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (G.mul(static_cast<Elem>(g), x) == G.mul(x, static_cast<Elem>(g))) out.push_back(static_cast<Elem>(g));
  }
  return Subgroup(G, std::move(out));
}

bool is_normal(const Subgroup& H, const Subgroup& in) {
  const FiniteGroup& G = H.group();
  for (Elem g : in.elements()) {
    for (Elem h : H.elements()) {
      if (!H.contains(G.conj(h, g))) return false;
    }
  }
  return true;
}

bool is_normal(const Subgroup& H) { return is_normal(H, Subgroup::whole(H.group())); }

// ---------------------------------------------------------------------------
// Cosets

std::vector<Elem> left_transversal(const Subgroup& L) {
  const FiniteGroup& G = L.group();
  std::vector<bool> covered(G.order(), false);
  std::vector<Elem> reps;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (covered[g]) continue;
    reps.push_back(static_cast<Elem>(g));
    for (Elem l : L.elements()) covered[static_cast<std::size_t>(G.mul(static_cast<Elem>(g), l))] = true;
  }
  return reps;
}

std::vector<Elem> double_coset_reps(const Subgroup& A, const Subgroup& B) {
  const FiniteGroup& G = A.group();
  std::vector<bool> covered(G.order(), false);
  std::vector<Elem> reps;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (covered[g]) continue;
    reps.push_back(static_cast<Elem>(g));
    for (Elem a : A.elements()) {
      Elem ag = G.mul(a, static_cast<Elem>(g));
      for (Elem b : B.elements()) covered[static_cast<std::size_t>(G.mul(ag, b))] = true;
    }
  }
  return reps;
}

std::optional<Elem> subgroup_conjugacy(const Subgroup& H1, const Subgroup& H2) {
  if (H1.order() != H2.order()) return std::nullopt;
  const FiniteGroup& G = H1.group();
  for (std::size_t g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem h : H1.elements()) {
      if (!H2.contains(G.conj(h, static_cast<Elem>(g)))) {
        ok = false;
        break;
      }
    }
    if (ok) return static_cast<Elem>(g);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Quotients and subgroup realizations

Subgroup QuotientGroup::image(const Subgroup& H) const {
  std::vector<Elem> out;
  for (Elem h : H.elements()) out.push_back(project[static_cast<std::size_t>(h)]);
  return Subgroup(*group, std::move(out));
}

Subgroup QuotientGroup::preimage(const Subgroup& Hbar) const {
  std::vector<Elem> out;
  for (std::size_t g = 0; g < parent->order(); ++g) {
    if (Hbar.contains(project[g])) out.push_back(static_cast<Elem>(g));
  }
  return Subgroup(*parent, std::move(out));
}

QuotientGroup quotient(const GroupPtr& G, const Subgroup& N) {
  if (&N.group() != G.get()) throw Error(ErrorCode::GroupMismatch, "kernel is not a subgroup of the parent");
  if (!is_normal(N)) throw Error(ErrorCode::NotNormal, "kernel is not normal");
  const std::size_t n = G->order();
  // Right cosets Ng; for a normal subgroup they coincide with left cosets.
  std::vector<int> label(n, -1);
  std::vector<Elem> reps;
  for (std::size_t g = 0; g < n; ++g) {
    if (label[g] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<Elem>(g));
    for (Elem k : N.elements()) label[static_cast<std::size_t>(G->mul(k, static_cast<Elem>(g)))] = id;
  }
  const int k = static_cast<int>(reps.size());
  auto action = [&](Elem g) {
    std::vector<int> img(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
      img[static_cast<std::size_t>(c)] = label[static_cast<std::size_t>(G->mul(reps[static_cast<std::size_t>(c)], g))];
    }
    return Permutation(std::move(img));
  };
  std::vector<Permutation> gens;
  for (const auto& gp : G->generators()) gens.push_back(action(G->index_of(gp)));
  GroupPtr Q = close_generators(k, std::move(gens), std::max<std::size_t>(n, 1));

  QuotientGroup out{G, N, Q, std::vector<Elem>(n), std::vector<Elem>(Q->order(), -1), reps};
  for (std::size_t g = 0; g < n; ++g) {
    const Elem q = Q->index_of(action(static_cast<Elem>(g)));
    out.project[g] = q;
    if (out.lift[static_cast<std::size_t>(q)] < 0) out.lift[static_cast<std::size_t>(q)] = static_cast<Elem>(g);
  }
  return out;
}

GroupPtr subgroup_group(const Subgroup& H) {
  const FiniteGroup& G = H.group();
  std::vector<Permutation> gens;
  for (Elem x : H.generators()) gens.push_back(G.element(x));
  return close_generators(G.degree(), std::move(gens), std::max<std::size_t>(H.order(), 1));
}

std::vector<Elem> embedding(const FiniteGroup& sub, const FiniteGroup& G) {
  if (sub.degree() != G.degree()) throw Error(ErrorCode::NotSubgroup, "degree mismatch");
  std::vector<Elem> out(sub.order());
  for (std::size_t i = 0; i < sub.order(); ++i) out[i] = G.index_of(sub.element(static_cast<Elem>(i)));
  return out;
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  return &a == &b || (a.degree() == b.degree() && a.elements() == b.elements());
}

NormalizerQuotient normalizer_quotient(const Subgroup& P) {
  const FiniteGroup& G = P.group();
  Subgroup N = normalizer(G, P);
  GroupPtr Ng = subgroup_group(N);
  std::vector<Elem> to_parent = N.elements();
  std::vector<Elem> pin;
  for (Elem x : P.elements()) pin.push_back(static_cast<Elem>(N.position(x)));
  Subgroup Pn(*Ng, std::move(pin));
  QuotientGroup Q = quotient(Ng, Pn);
  return NormalizerQuotient{Ng, std::move(to_parent), std::move(Q)};
}

// ---------------------------------------------------------------------------
// Named groups

GroupPtr cyclic(int n, std::size_t cap) {
  if (n < 1) throw Error(ErrorCode::UnknownName, "cyclic order must be positive");
  if (n == 1) return close_generators(1, {}, cap);
  std::vector<int> cyc(static_cast<std::size_t>(n));
  std::iota(cyc.begin(), cyc.end(), 0);
  return close_generators(n, {Permutation::from_cycles(n, {cyc})}, cap);
}

GroupPtr dihedral(int order, std::size_t cap) {
  if (order < 2 || order % 2 != 0) throw Error(ErrorCode::UnknownName, "dihedral order must be even");
  const int m = order / 2;
  if (m == 1) return cyclic(2, cap);
  if (m == 2) {
    return close_generators(
        4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})}, cap);
  }
  std::vector<int> rot(static_cast<std::size_t>(m)), refl(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % m;
    refl[static_cast<std::size_t>(i)] = (m - i) % m;
  }
  return close_generators(m, {Permutation(rot), Permutation(refl)}, cap);
}

GroupPtr symmetric(int n, std::size_t cap) {
  if (n < 1) throw Error(ErrorCode::UnknownName, "symmetric degree must be positive");
  if (n == 1) return close_generators(1, {}, cap);
  std::vector<int> cyc(static_cast<std::size_t>(n));
  std::iota(cyc.begin(), cyc.end(), 0);
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}})};
  if (n > 2) gens.push_back(Permutation::from_cycles(n, {cyc}));
  return close_generators(n, std::move(gens), cap);
}

GroupPtr alternating(int n, std::size_t cap) {
  if (n < 1) throw Error(ErrorCode::UnknownName, "alternating degree must be positive");
  if (n < 3) return close_generators(n, {}, cap);
  std::vector<Permutation> gens;
  for (int i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return close_generators(n, std::move(gens), cap);
}

GroupPtr quaternion8() {
  // Regular representation: i = (0,1,3,6)(2,5,7,4), j = (0,2,3,7)(1,4,6,5).
  return close_generators(8, {Permutation::from_cycles(8, {{0, 1, 3, 6}, {2, 5, 7, 4}}),
                              Permutation::from_cycles(8, {{0, 2, 3, 7}, {1, 4, 6, 5}})});
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap) {
  const int d = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<int> img(static_cast<std::size_t>(d));
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < a.degree(); ++i) img[static_cast<std::size_t>(i)] = g[i];
    gens.emplace_back(std::move(img));
  }
  for (const auto& g : b.generators()) {
    std::vector<int> img(static_cast<std::size_t>(d));
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < b.degree(); ++i) img[static_cast<std::size_t>(a.degree() + i)] = a.degree() + g[i];
    gens.emplace_back(std::move(img));
  }
  return close_generators(d, std::move(gens), cap);
}

namespace {

GroupPtr named_factor(const std::string& name, std::size_t cap) {
  auto number = [&](std::size_t from) {
    if (name.size() <= from) throw Error(ErrorCode::UnknownName, name);
    for (std::size_t i = from; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') throw Error(ErrorCode::UnknownName, name);
    }
    if (name.size() - from > 4) throw Error(ErrorCode::UnknownName, name);
    return std::stoi(name.substr(from));
  };
  if (name == "Q8") return quaternion8();
  if (name == "V4") return dihedral(4, cap);
  if (name.empty()) throw Error(ErrorCode::UnknownName, "empty group name");
  switch (name[0]) {
    case 'C': return cyclic(number(1), cap);
    case 'D': return dihedral(number(1), cap);
    case 'S': return symmetric(number(1), cap);
    case 'A': return alternating(number(1), cap);
    default: throw Error(ErrorCode::UnknownName, name);
  }
}

}  // namespace

GroupPtr named_group(const std::string& name, std::size_t cap) {
  GroupPtr G;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = name.find('x', start);
    GroupPtr f = named_factor(name.substr(start, pos == std::string::npos ? std::string::npos : pos - start), cap);
    G = G ? direct_product(*G, *f, cap) : f;
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return G;
}

}  // namespace ppring
