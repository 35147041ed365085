#include "ppring/ffq.hpp"

#include <numeric>
#include <sstream>

#include "ppring/lattice.hpp"

namespace ppring {

namespace {

using Poly = std::vector<int>;  // coefficients over F_p, low degree first
using Vec = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, int p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  // f is monic.
  while (a.size() > df) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = ((a[shift + i] - lead * f[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

Poly decode(long x, int p) {
  Poly a;
  while (x > 0) {
    a.push_back(static_cast<int>(x % p));
    x /= p;
  }
  return a;
}

long encode(const Poly& a, int p) {
  long x = 0;
  for (std::size_t i = a.size(); i-- > 0;) x = x * p + a[i];
  return x;
}

// Monic polynomial of the given degree whose lower coefficients are the digits of `low`.
Poly monic(long low, int degree, int p) {
  Poly f = decode(low, p);
  f.resize(static_cast<std::size_t>(degree), 0);
  f.push_back(1);
  return f;
}

bool irreducible(const Poly& f, int p) {
  const int m = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= m; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long low = 0; low < count; ++low) {
      if (poly_mod(f, monic(low, d, p), p).empty()) return false;
    }
  }
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long r = 2; r * r <= n; ++r) {
    if (n % r) continue;
    out.push_back(r);
    while (n % r == 0) n /= r;
  }
  if (n > 1) out.push_back(n);
  return out;
}

long totient(long n) {
  long out = n;
  for (long r : prime_factors(n)) out = out / r * (r - 1);
  return out;
}

// Reduced row echelon basis of a subspace, each row optionally carrying a
// coordinate tail that is combined along with it.
class Echelon {
 public:
  Echelon(const FqField& F, std::size_t width) : F_(F), width_(width) {}

  std::size_t rank() const { return rows_.size(); }

  /// Reduces v (of length width + tail) in place; returns false iff the head becomes zero.
  bool reduce(Vec& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const int c = v[piv_[i]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = F_.sub(v[k], F_.mul(c, rows_[i][k]));
    }
    for (std::size_t k = 0; k < width_; ++k) {
      if (v[k] != 0) return true;
    }
    return false;
  }

  bool insert(Vec v) {
    if (!reduce(v)) return false;
    std::size_t p = 0;
    while (v[p] == 0) ++p;
    const int s = F_.inv(v[p]);
    for (int& x : v) x = F_.mul(x, s);
    for (auto& row : rows_) {
      const int c = row[p];
      if (c == 0) continue;
      for (std::size_t k = 0; k < row.size(); ++k) row[k] = F_.sub(row[k], F_.mul(c, v[k]));
    }
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
  }

 private:
  const FqField& F_;
  std::size_t width_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
};

std::size_t rank_of(const FqField& F, const std::vector<Vec>& rows, std::size_t width) {
  Echelon e(F, width);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

// Null space of the matrix with the given rows (each of length width).
std::vector<Vec> kernel(const FqField& F, const std::vector<Vec>& rows, std::size_t width) {
  std::vector<Vec> R;
  std::vector<std::size_t> piv;
  for (Vec v : rows) {
    for (std::size_t i = 0; i < R.size(); ++i) {
      const int c = v[piv[i]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < width; ++k) v[k] = F.sub(v[k], F.mul(c, R[i][k]));
    }
    std::size_t p = 0;
    while (p < width && v[p] == 0) ++p;
    if (p == width) continue;
    const int s = F.inv(v[p]);
    for (int& x : v) x = F.mul(x, s);
    for (auto& row : R) {
      const int c = row[p];
      if (c == 0) continue;
      for (std::size_t k = 0; k < width; ++k) row[k] = F.sub(row[k], F.mul(c, v[k]));
    }
    R.push_back(std::move(v));
    piv.push_back(p);
  }
  std::vector<bool> is_pivot(width, false);
  for (std::size_t p : piv) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < width; ++f) {
    if (is_pivot[f]) continue;
    Vec v(width, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < R.size(); ++i) v[piv[i]] = F.neg(R[i][f]);
    out.push_back(std::move(v));
  }
  return out;
}

// Fixed points of a subgroup: kernel of the stacked (g - 1) over its generators.
std::vector<Vec> fixed_space(const FqModule& M, const Subgroup& Q) {
  const FqField& F = M.field();
  const std::size_t d = M.dimension();
  std::vector<Vec> rows;
  for (Elem u : Q.generators()) {
    const Monomial a = M.action(u);
    std::vector<Vec> block(d, Vec(d, 0));
    for (std::size_t k = 0; k < d; ++k) {
      block[static_cast<std::size_t>(a.target[k])][k] = a.scalar[k];
      block[k][k] = F.sub(block[k][k], 1);
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }
  return kernel(F, rows, d);
}

Vec add_vec(const FqField& F, Vec a, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = F.add(a[k], b[k]);
  return a;
}

}  // namespace

int FqField::add(int a, int b) const {
  if (p_ == 2) return a ^ b;
  int r = 0;
  int place = 1;
  while (a > 0 || b > 0) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

int FqField::neg(int a) const {
  if (p_ == 2) return a;
  int r = 0;
  int place = 1;
  while (a > 0) {
    r += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return r;
}

int FqField::sub(int a, int b) const { return add(a, neg(b)); }

int FqField::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  const long k = (static_cast<long>(log_[static_cast<std::size_t>(a)]) + log_[static_cast<std::size_t>(b)]) % (q_ - 1);
  return exp_[static_cast<std::size_t>(k)];
}

int FqField::inv(int a) const {
  if (a == 0) throw Error(ErrorCode::BadIndex, "zero has no inverse");
  const long k = (q_ - 1 - log_[static_cast<std::size_t>(a)]) % (q_ - 1);
  return exp_[static_cast<std::size_t>(k)];
}

int FqField::pow(int a, long long e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const long long order = q_ - 1;
  long long k = (static_cast<long long>(log_[static_cast<std::size_t>(a)]) * (e % order)) % order;
  if (k < 0) k += order;
  return exp_[static_cast<std::size_t>(k)];
}

int FqField::zeta_power(long long e) const {
  long long j = e % n_;
  if (j < 0) j += n_;
  return exp_[static_cast<std::size_t>(j * ((q_ - 1) / n_))];
}

int FqField::theta(int x) const {
  if (x == 0) return -1;
  const long step = (q_ - 1) / n_;
  const long l = log_[static_cast<std::size_t>(x)];
  if (l % step != 0) return -1;
  return static_cast<int>(l / step);
}

std::string FqField::to_string(int x) const {
  if (m_ == 1) return std::to_string(x);
  const Poly a = decode(x, p_);
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || a[i] != 1) os << a[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

FqField build_field(int p, int n, int generator_choice, int conductor_cap) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPPrime, "field characteristic must be prime");
  if (n < 1 || n % p == 0) throw Error(ErrorCode::NotPPrime, "conductor must be a positive p'-number");
  if (n > conductor_cap) throw Error(ErrorCode::CapExceeded, "conductor exceeds the oracle cap");
  int m = 1;
  long q = p;
  while ((q - 1) % n != 0) {
    ++m;
    q *= p;
    if (q > kMaxFieldSize) throw Error(ErrorCode::CapExceeded, "field size exceeds the oracle cap");
  }

  FqField F;
  F.p_ = p;
  F.m_ = m;
  F.q_ = q;
  F.n_ = n;
  for (long low = 0; low < q; ++low) {
    Poly f = monic(low, m, p);
    if (irreducible(f, p)) {
      F.modulus_ = std::move(f);
      break;
    }
  }

  const auto slow_mul = [&](long a, long b) { return encode(poly_mod(poly_mul(decode(a, p), decode(b, p), p), F.modulus_, p), p); };
  const auto slow_pow = [&](long a, long e) {
    long r = 1;
    while (e > 0) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  const std::vector<long> primes = prime_factors(q - 1);
  const long count = totient(q - 1);
  long wanted = ((generator_choice % count) + count) % count;
  long g = -1;
  for (long x = 1; x < q; ++x) {
    bool primitive = true;
    for (long r : primes) primitive = primitive && slow_pow(x, (q - 1) / r) != 1;
    if (!primitive) continue;
    if (wanted-- == 0) {
      g = x;
      break;
    }
  }
  F.g_ = static_cast<int>(g);
  F.exp_.assign(static_cast<std::size_t>(q - 1), 0);
  F.log_.assign(static_cast<std::size_t>(q), -1);
  long x = 1;
  for (long k = 0; k < q - 1; ++k) {
    F.exp_[static_cast<std::size_t>(k)] = static_cast<int>(x);
    F.log_[static_cast<std::size_t>(x)] = static_cast<int>(k);
    x = slow_mul(x, g);
  }
  F.zeta_ = F.exp_[static_cast<std::size_t>(((q - 1) / n) % (q - 1))];
  return F;
}

long primitive_element_count(const FqField& F) { return totient(F.q() - 1); }

FqModule::FqModule(const Generator& gen, const FqField& F)
    : field_(&F), group_(&gen.group()), L_(gen.subgroup()), chi_(gen.character()), label_(gen.group().order(), -1) {
  const FiniteGroup& G = *group_;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (label_[g] >= 0) continue;
    const int id = static_cast<int>(reps_.size());
    reps_.push_back(static_cast<Elem>(g));
    for (Elem l : L_.elements()) label_[static_cast<std::size_t>(G.mul(static_cast<Elem>(g), l))] = id;
  }
}

Monomial FqModule::action(Elem g) const {
  const FiniteGroup& G = *group_;
  Monomial out;
  out.target.resize(reps_.size());
  out.scalar.resize(reps_.size());
  for (std::size_t k = 0; k < reps_.size(); ++k) {
    const Elem h = G.mul(g, reps_[k]);
    const int t = label_[static_cast<std::size_t>(h)];
    const Elem l = G.mul(G.inv(reps_[static_cast<std::size_t>(t)]), h);
    out.target[k] = t;
    out.scalar[k] = field_->zeta_power(chi_(l));
  }
  return out;
}

std::vector<int> FqModule::apply(Elem g, const std::vector<int>& v) const {
  const Monomial a = action(g);
  std::vector<int> w(v.size(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto t = static_cast<std::size_t>(a.target[k]);
    w[t] = field_->add(w[t], field_->mul(a.scalar[k], v[k]));
  }
  return w;
}

FqModule realize_generator(const Generator& gen, const FqField& F, std::size_t dim_cap) {
  if (gen.character().conductor() != F.conductor()) {
    throw Error(ErrorCode::ConductorMismatch, "field and character conductors differ");
  }
  const std::size_t dim = gen.group().order() / gen.subgroup().order();
  if (dim > dim_cap) throw Error(ErrorCode::CapExceeded, "module dimension exceeds the oracle cap");
  return FqModule(gen, F);
}

OracleResult oracle_detail(const SpeciesPair& pair, const Generator& gen, const FqField& F, std::size_t dim_cap) {
  if (!same_group(pair.group(), gen.group())) throw Error(ErrorCode::GroupMismatch, "generator over another group");
  if (F.p() != pair.prime()) throw Error(ErrorCode::NotPPrime, "field characteristic differs from the pair's prime");
  const FqModule M = realize_generator(gen, F, dim_cap);
  const FiniteGroup& G = pair.group();
  const Subgroup P(G, pair.P().elements());
  const std::size_t d = M.dimension();
  const int n = F.conductor();
  const int r_order = pair.s_order();
  if (n % r_order != 0) throw Error(ErrorCode::ConductorMismatch, "|s| does not divide the conductor");

  OracleResult out{Cyclotomic(n), 0, 0, 0, 0};
  const std::vector<Vec> fixed = fixed_space(M, P);
  out.fixed_dim = fixed.size();

  // Σ over maximal Q < P of tr_Q^P(M^Q).
  std::vector<Vec> trace_vectors;
  const SubgroupLattice& lat = G.lattice();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const Subgroup& Q = lat[i];
    if (Q.order() * static_cast<std::size_t>(pair.prime()) != P.order() || !Q.is_subgroup_of(P)) continue;
    std::vector<Elem> transversal;
    std::vector<bool> covered(G.order(), false);
    for (Elem x : P.elements()) {
      if (covered[static_cast<std::size_t>(x)]) continue;
      transversal.push_back(x);
      for (Elem y : Q.elements()) covered[static_cast<std::size_t>(G.mul(x, y))] = true;
    }
    for (const Vec& v : fixed_space(M, Q)) {
      Vec acc(d, 0);
      for (Elem x : transversal) acc = add_vec(F, std::move(acc), M.apply(x, v));
      trace_vectors.push_back(std::move(acc));
    }
  }
  out.trace_dim = rank_of(F, trace_vectors, d);

  // Complement of the trace image inside M^P.
  std::vector<Vec> complement;
  {
    Echelon probe(F, d);
    for (const Vec& v : trace_vectors) probe.insert(v);
    for (const Vec& v : fixed) {
      if (probe.insert(v)) complement.push_back(v);
    }
  }
  const std::size_t r = complement.size();
  out.brauer_dim = r;

  // Rows carry a tail of length r: zero for trace vectors, unit vectors for the complement.
  Echelon quotient_basis(F, d);
  for (Vec v : trace_vectors) {
    v.resize(d + r, 0);
    quotient_basis.insert(std::move(v));
  }
  for (std::size_t i = 0; i < r; ++i) {
    Vec v = complement[i];
    v.resize(d + r, 0);
    v[d + i] = 1;
    quotient_basis.insert(std::move(v));
  }

  // Matrix of the lift on M[P]: column i holds the complement coordinates of t·b_i.
  std::vector<Vec> T(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    Vec w = M.apply(pair.lift(), complement[i]);
    w.resize(d + r, 0);
    if (quotient_basis.reduce(w)) throw Error(ErrorCode::ShapeMismatch, "lift does not preserve M^P");
    // After reduction w = v - Σ c_k row_k with head zero, so the tail holds minus the coordinates.
    for (std::size_t j = 0; j < r; ++j) T[j][i] = F.neg(w[d + j]);
  }

  std::vector<long long> counts(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < r_order; ++j) {
    const int e = j * (n / r_order);
    const int lambda = F.zeta_power(e);
    std::vector<Vec> shifted = T;
    for (std::size_t k = 0; k < r; ++k) shifted[k][k] = F.sub(shifted[k][k], lambda);
    const std::size_t mult = r - rank_of(F, shifted, r);
    out.eigen_total += mult;
    counts[static_cast<std::size_t>(F.theta(lambda))] += static_cast<long long>(mult);
  }
  out.value = Cyclotomic::from_exponent_counts(n, counts);
  return out;
}

Cyclotomic oracle_tau(const SpeciesPair& pair, const Generator& gen, const FqField& F, std::size_t dim_cap) {
  return oracle_detail(pair, gen, F, dim_cap).value;
}

}  // namespace ppring
