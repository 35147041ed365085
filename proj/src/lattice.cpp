#include "ppring/lattice.hpp"

#include <algorithm>
#include <set>

namespace ppring {

SubgroupLattice::SubgroupLattice(const FiniteGroup& G) : group_(&G) {
  // Seed with cyclic subgroups, then close under joins with cyclic subgroups.
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> cyclics;
  for (std::size_t x = 0; x < G.order(); ++x) {
    const Elem e = static_cast<Elem>(x);
    Subgroup C = generate(G, std::span<const Elem>(&e, 1));
    if (seen.insert(C.elements()).second) cyclics.push_back(C);
  }
  std::vector<Subgroup> all = cyclics;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const Subgroup& C : cyclics) {
      if (C.is_subgroup_of(all[i])) continue;
      Subgroup J = join(all[i], C);
      if (seen.insert(J.elements()).second) all.push_back(std::move(J));
    }
  }
  std::sort(all.begin(), all.end());
  subgroups_ = std::move(all);

  const std::size_t n = subgroups_.size();
  for (std::size_t i = 0; i < n; ++i) index_.emplace(subgroups_[i].elements(), i);
  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      if (subgroups_[b].order() % subgroups_[a].order() == 0 && subgroups_[a].is_subgroup_of(subgroups_[b])) {
        leq_[a][b] = true;
      }
    }
  }

  class_rep_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (class_rep_[i] != n) continue;
    // i is the smallest member of its class because indices follow canonical order.
    for (std::size_t g = 0; g < G.order(); ++g) {
      class_rep_[index_.at(subgroups_[i].conjugate(static_cast<Elem>(g)).elements())] = i;
    }
  }
}

std::size_t SubgroupLattice::index_of(const Subgroup& H) const {
  if (&H.group() != group_) throw Error(ErrorCode::NotSubgroup, "subgroup belongs to another group");
  auto it = index_.find(H.elements());
  if (it == index_.end()) throw Error(ErrorCode::NotSubgroup, "element set is not a subgroup");
  return it->second;
}

std::vector<std::size_t> SubgroupLattice::class_reps() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (class_rep_[i] == i) out.push_back(i);
  }
  return out;
}

const std::vector<long long>& SubgroupLattice::moebius_row(std::size_t a) const {
  std::lock_guard lock(moebius_mutex_);
  auto it = moebius_rows_.find(a);
  if (it != moebius_rows_.end()) return it->second;
  // μ(A,A) = 1 and μ(A,B) = -Σ_{A≤M<B} μ(A,M); canonical order is a linear extension of ≤.
  std::vector<long long> row(size(), 0);
  row[a] = 1;
  for (std::size_t b = a + 1; b < size(); ++b) {
    if (!leq_[a][b]) continue;
    long long s = 0;
    for (std::size_t m = a; m < b; ++m) {
      if (leq_[a][m] && leq_[m][b]) s += row[m];
    }
    row[b] = -s;
  }
  return moebius_rows_.emplace(a, std::move(row)).first->second;
}

long long SubgroupLattice::moebius(std::size_t a, std::size_t b) const {
  if (!leq_[a][b]) throw Error(ErrorCode::NotComparable, "moebius(A, B) needs A <= B");
  return moebius_row(a)[b];
}

long long SubgroupLattice::moebius(const Subgroup& A, const Subgroup& B) const {
  return moebius(index_of(A), index_of(B));
}

const SubgroupLattice& all_subgroups(const FiniteGroup& G) { return G.lattice(); }

long long moebius(const SubgroupLattice& lattice, const Subgroup& A, const Subgroup& B) {
  return lattice.moebius(A, B);
}

}  // namespace ppring
