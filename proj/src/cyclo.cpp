#include "ppring/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "ppring/error.hpp"

namespace ppring {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact division of integer polynomials, divisor monic.
std::vector<long long> poly_div_exact(std::vector<long long> num, const std::vector<long long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long long c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

struct Basis {
  int n;
  int phi;
  // reduce[k] = ζ^k on the power basis, k in [0, n).
  std::vector<std::vector<long long>> reduce;
};

const Basis& basis_for(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Basis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto b = std::make_unique<Basis>();
    b->n = n;
    const std::vector<long long> phi_n = cyclotomic_polynomial(n);
    b->phi = static_cast<int>(phi_n.size()) - 1;
    const std::size_t d = static_cast<std::size_t>(b->phi);
    std::vector<long long> cur(d, 0);
    cur[0] = 1;
    if (d == 0) cur.clear();
    for (int k = 0; k < n; ++k) {
      b->reduce.push_back(cur);
      // Multiply by x and reduce with the monic Φ_n.
      std::vector<long long> next(d, 0);
      const long long top = d ? cur[d - 1] : 0;
      for (std::size_t i = d; i-- > 1;) next[i] = cur[i - 1];
      for (std::size_t i = 0; i < d; ++i) next[i] -= top * phi_n[i];
      cur = std::move(next);
    }
    slot = std::move(b);
  }
  return *slot;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorCode::BadIndex, "cyclotomic polynomial needs n >= 1");
  std::vector<long long> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

Cyclotomic::Cyclotomic(int conductor) : n_(conductor), c_(static_cast<std::size_t>(basis_for(conductor).phi)) {}

Cyclotomic::Cyclotomic(int conductor, const Rational& value) : Cyclotomic(conductor) { c_[0] = value; }

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs) : n_(conductor), c_(std::move(coeffs)) {
  if (c_.size() != static_cast<std::size_t>(basis_for(conductor).phi)) {
    throw Error(ErrorCode::ConductorMismatch, "coefficient vector length must equal phi(n)");
  }
}

Cyclotomic Cyclotomic::zeta_power(int n, long long k) {
  const Basis& b = basis_for(n);
  k %= n;
  if (k < 0) k += n;
  Cyclotomic z(n);
  const auto& r = b.reduce[static_cast<std::size_t>(k)];
  for (std::size_t i = 0; i < r.size(); ++i) z.c_[i] = static_cast<long>(r[i]);
  return z;
}

Cyclotomic Cyclotomic::from_exponent_counts(int n, std::span<const long long> counts) {
  const Basis& b = basis_for(n);
  std::vector<long long> acc(static_cast<std::size_t>(b.phi), 0);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0) continue;
    const auto& r = b.reduce[k % static_cast<std::size_t>(n)];
    for (std::size_t i = 0; i < r.size(); ++i) acc[i] += counts[k] * r[i];
  }
  Cyclotomic z(n);
  for (std::size_t i = 0; i < acc.size(); ++i) z.c_[i] = static_cast<long>(acc[i]);
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0] == 1; }

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

void Cyclotomic::check_conductor(const Cyclotomic& rhs) const {
  if (rhs.n_ != n_) {
    throw Error(ErrorCode::ConductorMismatch,
                "conductors " + std::to_string(n_) + " and " + std::to_string(rhs.n_) + " differ");
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  check_conductor(rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  check_conductor(rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  check_conductor(rhs);
  const Basis& b = basis_for(n_);
  const std::size_t d = c_.size();
  if (is_rational()) {
    Rational r = d ? c_[0] : Rational(0);
    *this = rhs;
    return *this *= r;
  }
  if (rhs.is_rational()) return *this *= (d ? rhs.c_[0] : Rational(0));
  std::vector<Rational> raw(d ? 2 * d - 1 : 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (rhs.c_[j] != 0) raw[i + j] += c_[i] * rhs.c_[j];
    }
  }
  std::vector<Rational> out(d);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    const auto& r = b.reduce[k % static_cast<std::size_t>(n_)];
    for (std::size_t i = 0; i < d; ++i) {
      if (r[i] != 0) out[i] += raw[k] * static_cast<long>(r[i]);
    }
  }
  c_ = std::move(out);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(*this);
  for (auto& x : out.c_) x = -x;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  a.check_conductor(b);
  return a.c_ == b.c_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational mag = abs(c_[i]);
    const bool neg = c_[i] < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << "E(" << n_ << ')';
    if (i > 1) os << '^' << i;
  }
  return first ? "0" : os.str();
}

Cyclotomic zeta_power(int n, long long k) { return Cyclotomic::zeta_power(n, k); }

}  // namespace ppring
