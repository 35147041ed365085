/**
 * @file checks.hpp
 * @brief The identity suite run by `ppring verify` and the acceptance gate.
 *
 * Every check compares two independently computed sides exactly and counts
 * the cases it examined. Random checks draw from a caller-supplied engine so
 * that a fixed seed reproduces the same cases.
 */
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ppring/burnside.hpp"
#include "ppring/ffq.hpp"
#include "ppring/idem.hpp"

namespace ppring {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> failed;  ///< short descriptions of the first failures

  bool passed() const noexcept { return failures == 0; }
  void record(bool ok, const std::string& what);
  CheckResult& merge(const CheckResult& other);
};

using Rng = std::mt19937_64;

/// One generator Ind_L^G k_χ per conjugacy class of (L, χ), χ : L → μ_n.
std::vector<Generator> standard_generators(const GroupPtr& G, ModularSetting setting);

CheckResult check_delta(const GroupPtr& G, int p);
CheckResult check_partition_of_unity(const GroupPtr& G, int p);
CheckResult check_route_agreement(const GroupPtr& G, int p);
CheckResult check_orthogonality(const GroupPtr& G, int p);
CheckResult check_E_decomposition(const GroupPtr& G, int p);
/// Restriction law for every subgroup class representative H and every pair.
CheckResult check_restriction(const GroupPtr& G, int p);
/// Induction law for every pair of every subgroup class representative.
CheckResult check_induction(const GroupPtr& G, int p);

CheckResult check_marks_delta(const GroupPtr& G);
CheckResult check_gy_idempotent(const GroupPtr& G);
/// linearize∘Res = Res∘linearize and linearize∘Ind = Ind∘linearize on transitive sets.
CheckResult check_commute_res_ind(const GroupPtr& G, int p);
/// linearize∘Φ_P = Br_P∘linearize on transitive sets, for every p-subgroup class.
CheckResult check_commute_brauer(const GroupPtr& G, int p);
/// Φ_N(e_G^G) = e_{G/N}^{G/N} for every normal N.
CheckResult check_points_fixes(const GroupPtr& G);

/// τ(x⊗y) = τ(x)τ(y) on random generator pairs.
CheckResult check_species_multiplicative(const GroupPtr& G, int p, std::size_t samples, Rng& rng);
/// Species of Br_P(x⊗y) = species of Br_P(x)·Br_P(y) on random (P, x, y).
CheckResult check_brauer_multiplicative(const GroupPtr& G, int p, std::size_t samples, Rng& rng);
/// τ^G_{P,s} = τ^{<Ps>/P}_{1,s}∘Br_P∘Res_{<Ps>} on every (pair, generator).
CheckResult check_factor_tau(const GroupPtr& G, int p);
/// τ^G_{P,s}(x) = τ^{<Ps>}_{P,s}(Res x) on every (pair, generator).
CheckResult check_tau_res(const GroupPtr& G, int p);

/// tau_generator = oracle_tau on random (pair, generator) cells.
CheckResult check_oracle(const GroupPtr& G, int p, std::size_t samples, Rng& rng,
                         int conductor_cap = kDefaultOracleConductorCap,
                         std::size_t dim_cap = kDefaultOracleDimensionCap);

/// Every deterministic check above, plus the random ones with the given sample count.
std::vector<CheckResult> full_suite(const GroupPtr& G, int p, std::size_t samples, std::uint64_t seed);

}  // namespace ppring
