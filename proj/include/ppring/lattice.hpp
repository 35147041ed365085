#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <vector>

#include "ppring/grp.hpp"

namespace ppring {

/// Every subgroup of a finite group, in canonical order (by order, then
/// element indices), with containment, conjugacy classes and the Möbius
/// function of the poset.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(const FiniteGroup& G);

  const FiniteGroup& group() const noexcept { return *group_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }
  const Subgroup& operator[](std::size_t i) const { return subgroups_[i]; }

  /// Throws NotSubgroup if H is not a subgroup of group().
  std::size_t index_of(const Subgroup& H) const;
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }

  /// Index of the canonical (minimal) member of the conjugacy class of i.
  std::size_t class_rep(std::size_t i) const { return class_rep_[i]; }
  const Subgroup& class_rep(const Subgroup& H) const { return subgroups_[class_rep(index_of(H))]; }
  /// Canonical class representatives, in canonical order.
  std::vector<std::size_t> class_reps() const;

  /// μ(A, B); throws NotComparable unless A ≤ B.
  long long moebius(std::size_t a, std::size_t b) const;
  long long moebius(const Subgroup& A, const Subgroup& B) const;

 private:
  const std::vector<long long>& moebius_row(std::size_t a) const;

  const FiniteGroup* group_;
  std::vector<Subgroup> subgroups_;
  std::map<std::vector<Elem>, std::size_t> index_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::size_t> class_rep_;

  mutable std::mutex moebius_mutex_;
  mutable std::map<std::size_t, std::vector<long long>> moebius_rows_;
};

/// The cached lattice of G.
const SubgroupLattice& all_subgroups(const FiniteGroup& G);
long long moebius(const SubgroupLattice& lattice, const Subgroup& A, const Subgroup& B);

}  // namespace ppring
