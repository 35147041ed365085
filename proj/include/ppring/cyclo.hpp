/**
 * @file cyclo.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(ζ_n).
 *
 * An element is stored as its coefficient vector on the power basis
 * 1, ζ, ..., ζ^(φ(n)-1), i.e. reduced modulo the n-th cyclotomic polynomial,
 * so equality is coefficient-wise. Every computation in this library fixes a
 * single conductor n; mixing conductors is an error.
 */
#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace ppring {

using Rational = mpq_class;

/// a/b in lowest terms.
inline Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

int euler_phi(int n);

/// Φ_n with integer coefficients, lowest degree first.
std::vector<long long> cyclotomic_polynomial(int n);

class Cyclotomic {
 public:
  /// Zero of Q(ζ_n).
  explicit Cyclotomic(int conductor);
  Cyclotomic(int conductor, const Rational& value);
  /// Takes coefficients on the power basis; length must be φ(n).
  Cyclotomic(int conductor, std::vector<Rational> coeffs);

  static Cyclotomic zeta_power(int n, long long k);
  /// Σ_k counts[k]·ζ_n^k, for counts of length n.
  static Cyclotomic from_exponent_counts(int n, std::span<const long long> counts);

  int conductor() const noexcept { return n_; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Rational& r);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// GAP-style text, e.g. "1/2 - E(3)^2".
  std::string to_string() const;

 private:
  void check_conductor(const Cyclotomic& rhs) const;

  int n_;
  std::vector<Rational> c_;
};

Cyclotomic zeta_power(int n, long long k);

}  // namespace ppring
