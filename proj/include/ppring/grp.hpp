/**
 * @file grp.hpp
 * @brief Fully enumerated permutation groups.
 *
 * Groups are small enough to be stored element by element together with a
 * multiplication table. Elements are addressed by their index in the
 * canonical (lexicographic on image arrays) element list, so the identity is
 * always index 0 and "choose a representative" means "take the smallest index".
 *
 * Permutations act on the right: i^(ab) = (i^a)^b, and conjugation is
 * x^g = g^-1 x g.
 */
#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ppring/error.hpp"

namespace ppring {

inline constexpr std::size_t kDefaultOrderCap = 384;

class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutation unless images is a bijection on {0..d-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// Cycles are lists of points, [a, b, c] meaning a -> b -> c -> a.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  /// Product applying *this first, then rhs.
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::vector<std::vector<int>> cycles() const;
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

using Elem = int;

class FiniteGroup;
class SubgroupLattice;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  int degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(Elem x) const { return elements_[static_cast<std::size_t>(x)]; }

  static constexpr Elem identity() noexcept { return 0; }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * order() + static_cast<std::size_t>(b)]; }
  Elem inv(Elem a) const { return inv_[static_cast<std::size_t>(a)]; }
  /// g^-1 x g
  Elem conj(Elem x, Elem g) const { return mul(mul(inv(g), x), g); }
  Elem pow(Elem x, long long k) const;
  int element_order(Elem x) const { return elem_order_[static_cast<std::size_t>(x)]; }
  int exponent() const noexcept { return exponent_; }

  std::optional<Elem> find(const Permutation& perm) const;
  /// Throws NotSubgroup if perm is not an element.
  Elem index_of(const Permutation& perm) const;

  bool is_abelian() const;

  /// Full subgroup lattice, computed on first use and then shared.
  const SubgroupLattice& lattice() const;

  GroupPtr shared() const { return shared_from_this(); }

  ~FiniteGroup();

 private:
  friend GroupPtr close_generators(int degree, std::vector<Permutation> gens, std::size_t cap);
  FiniteGroup() = default;

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<int> elem_order_;
  int exponent_ = 1;

  mutable std::once_flag lattice_once_;
  mutable std::unique_ptr<SubgroupLattice> lattice_;
};

/// Closes the generating set; throws OrderCapExceeded once the closure passes cap.
GroupPtr close_generators(int degree, std::vector<Permutation> gens, std::size_t cap = kDefaultOrderCap);

/// A subgroup of a FiniteGroup, stored as the sorted list of element indices.
/// Holds a non-owning reference: the parent group must outlive it.
class Subgroup {
 public:
  /// elems must be closed under the group law; only sortedness is normalized.
  Subgroup(const FiniteGroup& parent, std::vector<Elem> elems);

  static Subgroup trivial(const FiniteGroup& parent);
  static Subgroup whole(const FiniteGroup& parent);

  const FiniteGroup& group() const noexcept { return *group_; }
  std::size_t order() const noexcept { return elems_.size(); }
  const std::vector<Elem>& elements() const noexcept { return elems_; }
  bool contains(Elem x) const { return member_[static_cast<std::size_t>(x)]; }
  bool is_subgroup_of(const Subgroup& other) const;
  /// Position of x in elements(); x must be a member.
  std::size_t position(Elem x) const;

  Subgroup conjugate(Elem g) const;
  /// A small generating set, chosen greedily in canonical order.
  std::vector<Elem> generators() const;

  /// Canonical order: by order, then lexicographically on element indices.
  friend bool operator<(const Subgroup& a, const Subgroup& b);
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elems_ == b.elems_; }

 private:
  const FiniteGroup* group_;
  std::vector<Elem> elems_;
  std::vector<bool> member_;
};

Subgroup generate(const FiniteGroup& G, std::span<const Elem> gens);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

bool is_prime(long long n);
/// Returns the prime p when n = p^k with k >= 1, 1 when n = 1, 0 otherwise.
long long prime_power_base(long long n);
bool is_p_group(const Subgroup& H, int p);
/// p-part of n.
long long p_part(long long n, int p);

Subgroup sylow(const FiniteGroup& G, int p);
Elem p_prime_part(const FiniteGroup& G, Elem x, int p);
Permutation p_prime_part(const FiniteGroup& G, const Permutation& x, int p);

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H);
Subgroup centralizer(const FiniteGroup& G, Elem x);
bool is_normal(const Subgroup& H, const Subgroup& in);
bool is_normal(const Subgroup& H);

/// Minimal representatives of the left cosets gL, in increasing order.
std::vector<Elem> left_transversal(const Subgroup& L);
/// One representative (the minimal element) per double coset AgB.
std::vector<Elem> double_coset_reps(const Subgroup& A, const Subgroup& B);
std::optional<Elem> subgroup_conjugacy(const Subgroup& H1, const Subgroup& H2);

struct QuotientGroup {
  GroupPtr parent;
  Subgroup kernel;
  GroupPtr group;
  std::vector<Elem> project;  // parent element -> quotient element
  std::vector<Elem> lift;     // quotient element -> minimal parent element of the coset
  std::vector<Elem> cosets;   // minimal coset representatives

  Subgroup image(const Subgroup& H) const;
  Subgroup preimage(const Subgroup& Hbar) const;
};

/// Quotient by a normal subgroup, realized on the right cosets. Throws NotNormal.
QuotientGroup quotient(const GroupPtr& G, const Subgroup& N);

/// H realized as a group in its own right; element i of the result is
/// H.elements()[i] of the parent.
GroupPtr subgroup_group(const Subgroup& H);
/// Index map from the elements of sub into G (matching permutations).
/// Throws NotSubgroup when sub does not sit inside G.
std::vector<Elem> embedding(const FiniteGroup& sub, const FiniteGroup& G);
/// Structural equality: same degree and same elements.
bool same_group(const FiniteGroup& a, const FiniteGroup& b);

/// N_G(P) realized as a group, together with N_G(P)/P.
struct NormalizerQuotient {
  GroupPtr normalizer;           // as a group embedded in G
  std::vector<Elem> to_parent;   // normalizer element -> G element
  QuotientGroup quotient;        // normalizer / P
};
NormalizerQuotient normalizer_quotient(const Subgroup& P);

// Named constructors.
GroupPtr cyclic(int n, std::size_t cap = kDefaultOrderCap);
/// Dihedral group of the given order (D8 has order 8).
GroupPtr dihedral(int order, std::size_t cap = kDefaultOrderCap);
GroupPtr symmetric(int n, std::size_t cap = kDefaultOrderCap);
GroupPtr alternating(int n, std::size_t cap = kDefaultOrderCap);
GroupPtr quaternion8();
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap = kDefaultOrderCap);
/// "C6", "D8", "S4", "A4", "Q8", "V4", and products such as "C2xS3". Throws UnknownName.
GroupPtr named_group(const std::string& name, std::size_t cap = kDefaultOrderCap);

}  // namespace ppring
