/**
 * @file ffq.hpp
 * @brief Brauer quotients and Brauer characters by linear algebra over F_q.
 *
 * An independent route to the species: the monomial module Ind_L^G k_χ is
 * realized over F_q = F_p[x]/(f) with q = p^m minimal such that n | q - 1,
 * its Brauer quotient M[P] = M^P / Σ_{Q<P} tr_Q^P M^Q is formed explicitly,
 * and the lift of s is diagonalized on it.
 *
 * Field elements are integers 0..q-1 holding the base-p digits of the
 * polynomial coefficients, low degree first.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ppring/cyclo.hpp"
#include "ppring/ppelem.hpp"
#include "ppring/species.hpp"

namespace ppring {

inline constexpr int kDefaultOracleConductorCap = 32;
inline constexpr std::size_t kDefaultOracleDimensionCap = 200;
inline constexpr long kMaxFieldSize = 1L << 24;

class FqField {
 public:
  int p() const noexcept { return p_; }
  int degree() const noexcept { return m_; }
  long q() const noexcept { return q_; }
  int conductor() const noexcept { return n_; }
  /// Monic irreducible modulus, coefficients low degree first.
  const std::vector<int>& modulus() const noexcept { return modulus_; }
  /// The primitive element used for logarithms.
  int generator() const noexcept { return g_; }
  /// zeta_q = g^{(q-1)/n}, of exact order n.
  int zeta() const noexcept { return zeta_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  /// Throws BadIndex on 0.
  int inv(int a) const;
  int pow(int a, long long e) const;
  /// zeta_q^e for any integer e.
  int zeta_power(long long e) const;
  /// j in [0, n) with x = zeta_q^j, or -1 when x is not an n-th root of unity.
  int theta(int x) const;
  std::string to_string(int x) const;

 private:
  friend FqField build_field(int p, int n, int generator_choice, int conductor_cap);
  FqField() = default;

  int p_ = 2;
  int m_ = 1;
  long q_ = 2;
  int n_ = 1;
  std::vector<int> modulus_;
  int g_ = 1;
  int zeta_ = 1;
  std::vector<int> exp_;  // exp_[k] = g^k, k < q - 1
  std::vector<int> log_;  // log_[x] for x != 0
};

/// F_{p^m} with m the order of p mod n. generator_choice selects among the
/// primitive elements in increasing encoding (modulo their count).
/// Throws NotPPrime if p is not prime or divides n, CapExceeded if n exceeds
/// the cap or q exceeds kMaxFieldSize.
FqField build_field(int p, int n, int generator_choice = 0, int conductor_cap = kDefaultOracleConductorCap);

/// Number of primitive elements of F_q^×, i.e. φ(q - 1).
long primitive_element_count(const FqField& F);

/// g·e_k = scalar[k]·e_{target[k]} on the coset basis of G/L.
struct Monomial {
  std::vector<int> target;
  std::vector<int> scalar;
};

class FqModule {
 public:
  std::size_t dimension() const noexcept { return reps_.size(); }
  const FqField& field() const noexcept { return *field_; }
  /// Left coset representatives; basis vector k is reps()[k] ⊗ 1.
  const std::vector<Elem>& reps() const noexcept { return reps_; }
  Monomial action(Elem g) const;
  std::vector<int> apply(Elem g, const std::vector<int>& v) const;

 private:
  friend FqModule realize_generator(const Generator& gen, const FqField& F, std::size_t dim_cap);
  FqModule(const Generator& gen, const FqField& F);

  const FqField* field_;
  const FiniteGroup* group_;
  Subgroup L_;
  LinChar chi_;
  std::vector<Elem> reps_;
  std::vector<int> label_;
};

/// Ind_L^G k_χ over F with χ(l) = zeta_q^{χ-exponent}. The field must outlive
/// the module. Throws ConductorMismatch, CapExceeded above dim_cap.
FqModule realize_generator(const Generator& gen, const FqField& F, std::size_t dim_cap = kDefaultOracleDimensionCap);

struct OracleResult {
  Cyclotomic value;
  std::size_t fixed_dim = 0;       ///< dim M^P
  std::size_t trace_dim = 0;       ///< dim Σ tr_Q^P M^Q
  std::size_t brauer_dim = 0;      ///< dim M[P]
  std::size_t eigen_total = 0;     ///< Σ over λ ∈ μ_|s| of dim ker(t - λ) on M[P]
};

OracleResult oracle_detail(const SpeciesPair& pair, const Generator& gen, const FqField& F,
                           std::size_t dim_cap = kDefaultOracleDimensionCap);
Cyclotomic oracle_tau(const SpeciesPair& pair, const Generator& gen, const FqField& F,
                      std::size_t dim_cap = kDefaultOracleDimensionCap);

}  // namespace ppring
