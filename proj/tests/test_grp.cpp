#include <doctest.h>

#include <algorithm>
#include <set>

#include "ppring/grp.hpp"
#include "ppring/lattice.hpp"
#include "support.hpp"

using namespace ppring;
using testing::elem;
using testing::gen_sub;

TEST_SUITE("grp") {
  TEST_CASE("close_generators") {
    SUBCASE("empty generating set gives the trivial group") {
      const GroupPtr G = close_generators(1, {});
      CHECK(G->order() == 1);
      CHECK(G->element(0).is_identity());
    }
    SUBCASE("a 3-cycle generates a group of order 3") {
      const GroupPtr G = close_generators(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
      CHECK(G->order() == 3);
    }
    SUBCASE("a transposition and a 3-cycle generate order 6") {
      const GroupPtr G =
          close_generators(3, {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})});
      CHECK(G->order() == 6);
    }
    SUBCASE("elements are sorted lexicographically with the identity first") {
      const GroupPtr G = symmetric(4);
      CHECK(G->element(0).is_identity());
      CHECK(std::is_sorted(G->elements().begin(), G->elements().end()));
    }
    SUBCASE("closure of the element list is the same group") {
      for (const auto& name : {"S4", "D12", "Q8", "A4"}) {
        const GroupPtr G = named_group(name);
        const GroupPtr H = close_generators(G->degree(), G->elements());
        CHECK(H->elements() == G->elements());
      }
    }
    SUBCASE("errors") {
      CHECK_THROWS_CODE(close_generators(5, {Permutation::from_cycles(5, {{0, 1}}),
                                             Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})},
                                         60),
                        ErrorCode::OrderCapExceeded);
      CHECK_THROWS_CODE(Permutation({0, 0, 1}), ErrorCode::InvalidPermutation);
      CHECK_THROWS_CODE(Permutation::from_cycles(3, {{0, 5}}), ErrorCode::InvalidPermutation);
      CHECK_THROWS_CODE(symmetric(5, 100), ErrorCode::OrderCapExceeded);
    }
  }

  TEST_CASE("group law tables agree with permutation products") {
    const GroupPtr G = symmetric(4);
    for (std::size_t a = 0; a < G->order(); ++a) {
      for (std::size_t b = 0; b < G->order(); ++b) {
        const Elem ab = G->mul(static_cast<Elem>(a), static_cast<Elem>(b));
        CHECK(G->element(ab) == G->element(static_cast<Elem>(a)) * G->element(static_cast<Elem>(b)));
      }
      CHECK(G->mul(static_cast<Elem>(a), G->inv(static_cast<Elem>(a))) == 0);
    }
  }

  TEST_CASE("named groups") {
    const std::vector<std::pair<std::string, std::size_t>> orders = {
        {"C2", 2}, {"C3", 3}, {"C4", 4}, {"C6", 6}, {"S3", 6}, {"D8", 8}, {"Q8", 8},
        {"A4", 12}, {"D12", 12}, {"S4", 24}, {"V4", 4}, {"C2xS3", 12}, {"A5", 60}};
    for (const auto& [name, order] : orders) {
      CAPTURE(name);
      CHECK(named_group(name)->order() == order);
    }
    CHECK(named_group("Q8")->is_abelian() == false);
    CHECK(named_group("V4")->exponent() == 2);
    CHECK(named_group("Q8")->exponent() == 4);
    CHECK_THROWS_CODE(named_group("Z7"), ErrorCode::UnknownName);
  }

  TEST_CASE("sylow") {
    const GroupPtr S3 = symmetric(3);
    CHECK(sylow(*S3, 3).order() == 3);
    CHECK(sylow(*S3, 5).order() == 1);
    const GroupPtr S4 = symmetric(4);
    const Subgroup S = sylow(*S4, 2);
    CHECK(S.order() == 8);
    CHECK(is_p_group(S, 2));
    // No 2-subgroup of S4 is larger: brute force over subsets closed under the law.
    std::size_t largest = 0;
    for (const auto& H : S4->lattice().subgroups()) {
      if (is_p_group(H, 2)) largest = std::max(largest, H.order());
    }
    CHECK(largest == 8);
    for (const auto& name : {"C6", "D8", "Q8", "A4", "D12", "S4", "C2xS3"}) {
      const GroupPtr G = named_group(name);
      for (int p : {2, 3, 5}) {
        CAPTURE(name);
        CAPTURE(p);
        CHECK(static_cast<long long>(sylow(*G, p).order()) == p_part(static_cast<long long>(G->order()), p));
      }
    }
  }

  TEST_CASE("p_prime_part") {
    const GroupPtr C6 = cyclic(6);
    const Elem x = elem(*C6, {{0, 1, 2, 3, 4, 5}});
    CHECK(p_prime_part(*C6, x, 2) == C6->pow(x, 4));
    CHECK(C6->element_order(p_prime_part(*C6, x, 2)) == 3);
    const GroupPtr C3 = cyclic(3);
    const Elem y = elem(*C3, {{0, 1, 2}});
    CHECK(p_prime_part(*C3, y, 2) == y);
    const GroupPtr C4 = cyclic(4);
    CHECK(p_prime_part(*C4, elem(*C4, {{0, 1, 2, 3}}), 2) == 0);
    CHECK(p_prime_part(*C6, C6->element(x), 2) == C6->element(C6->pow(x, 4)));

    SUBCASE("decomposition into commuting p and p' parts") {
      for (const auto& name : {"S4", "D12", "C2xS3", "Q8"}) {
        const GroupPtr G = named_group(name);
        for (int p : {2, 3}) {
          for (std::size_t i = 0; i < G->order(); ++i) {
            const Elem g = static_cast<Elem>(i);
            const Elem r = p_prime_part(*G, g, p);
            const Elem u = G->mul(g, G->inv(r));
            CHECK(G->mul(u, r) == g);
            CHECK(G->mul(u, r) == G->mul(r, u));
            CHECK(prime_power_base(G->element_order(u)) != 0);
            CHECK((G->element_order(u) == 1 || prime_power_base(G->element_order(u)) == p));
            CHECK(G->element_order(r) % p != 0);
          }
        }
      }
    }
  }

  TEST_CASE("normalizer and centralizer") {
    const GroupPtr S3 = symmetric(3);
    CHECK(normalizer(*S3, sylow(*S3, 3)).order() == 6);
    const Subgroup T = gen_sub(*S3, {{{0, 1}}});
    CHECK(normalizer(*S3, T) == T);
    const Elem c = elem(*S3, {{0, 1, 2}});
    CHECK(centralizer(*S3, c) == gen_sub(*S3, {{{0, 1, 2}}}));
    CHECK(centralizer(*S3, 0).order() == 6);
  }

  TEST_CASE("subgroups obey Lagrange") {
    for (const auto& name : {"S4", "D12", "Q8", "A4", "C2xS3"}) {
      const GroupPtr G = named_group(name);
      for (const auto& H : G->lattice().subgroups()) CHECK(G->order() % H.order() == 0);
    }
  }

  TEST_CASE("quotient") {
    const GroupPtr C2 = cyclic(2);
    CHECK(quotient(C2, Subgroup::whole(*C2)).group->order() == 1);
    const GroupPtr S3 = symmetric(3);
    CHECK(quotient(S3, sylow(*S3, 3)).group->order() == 2);
    const GroupPtr C6 = cyclic(6);
    const QuotientGroup Q = quotient(C6, sylow(*C6, 2));
    CHECK(Q.group->order() == 3);
    CHECK(Q.group->element_order(Q.project[static_cast<std::size_t>(elem(*C6, {{0, 1, 2, 3, 4, 5}}))]) == 3);

    SUBCASE("project is a homomorphism and lift is a section") {
      for (const auto& name : {"S4", "D8", "Q8", "A4", "D12"}) {
        const GroupPtr G = named_group(name);
        for (const auto& N : G->lattice().subgroups()) {
          if (!is_normal(N)) continue;
          const QuotientGroup q = quotient(G, N);
          CHECK(q.group->order() * N.order() == G->order());
          for (std::size_t a = 0; a < G->order(); ++a) {
            for (std::size_t b = 0; b < G->order(); ++b) {
              const Elem ab = G->mul(static_cast<Elem>(a), static_cast<Elem>(b));
              CHECK(q.project[static_cast<std::size_t>(ab)] == q.group->mul(q.project[a], q.project[b]));
            }
          }
          for (std::size_t x = 0; x < q.group->order(); ++x) {
            const Elem l = q.lift[x];
            CHECK(q.project[static_cast<std::size_t>(l)] == static_cast<Elem>(x));
            // The lift is the smallest element of its coset.
            for (std::size_t g = 0; g < static_cast<std::size_t>(l); ++g) CHECK(q.project[g] != static_cast<Elem>(x));
          }
        }
      }
    }
    CHECK_THROWS_CODE(quotient(S3, gen_sub(*S3, {{{0, 1}}})), ErrorCode::NotNormal);
  }

  TEST_CASE("double cosets") {
    const GroupPtr S3 = symmetric(3);
    const Subgroup all = Subgroup::whole(*S3);
    CHECK(double_coset_reps(all, all) == std::vector<Elem>{0});
    const Subgroup P = sylow(*S3, 3);
    CHECK(double_coset_reps(P, P).size() == 2);
    const Subgroup one = Subgroup::trivial(*S3);
    CHECK(double_coset_reps(one, one).size() == 6);

    SUBCASE("double cosets partition the group") {
      const GroupPtr G = symmetric(4);
      const auto& subs = G->lattice().subgroups();
      for (std::size_t i = 0; i < subs.size(); i += 5) {
        for (std::size_t j = 0; j < subs.size(); j += 7) {
          std::vector<int> hits(G->order(), 0);
          for (Elem g : double_coset_reps(subs[i], subs[j])) {
            std::set<Elem> dc;
            for (Elem a : subs[i].elements()) {
              for (Elem b : subs[j].elements()) dc.insert(G->mul(G->mul(a, g), b));
            }
            for (Elem x : dc) ++hits[static_cast<std::size_t>(x)];
          }
          CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        }
      }
    }
  }

  TEST_CASE("subgroup_conjugacy") {
    const GroupPtr S3 = symmetric(3);
    const Subgroup A = gen_sub(*S3, {{{0, 1}}});
    const Subgroup B = gen_sub(*S3, {{{1, 2}}});
    CHECK(subgroup_conjugacy(A, A) == Elem{0});
    const auto g = subgroup_conjugacy(A, B);
    REQUIRE(g.has_value());
    CHECK(A.conjugate(*g) == B);
    CHECK(S3->element_order(*g) == 3);
    const GroupPtr C6 = cyclic(6);
    CHECK_FALSE(subgroup_conjugacy(sylow(*C6, 2), sylow(*C6, 3)).has_value());
  }

  TEST_CASE("subgroup_group and embedding") {
    const GroupPtr S4 = symmetric(4);
    const Subgroup D = sylow(*S4, 2);
    const GroupPtr H = subgroup_group(D);
    CHECK(H->order() == 8);
    const auto emb = embedding(*H, *S4);
    for (std::size_t i = 0; i < H->order(); ++i) CHECK(emb[i] == D.elements()[i]);
    CHECK_THROWS_CODE(embedding(*symmetric(3), *cyclic(6)), ErrorCode::NotSubgroup);
    CHECK_THROWS_CODE(S4->index_of(Permutation::from_cycles(5, {{0, 4}})), ErrorCode::NotSubgroup);
  }

  TEST_CASE("normalizer_quotient") {
    const GroupPtr S4 = symmetric(4);
    const Subgroup C3 = gen_sub(*S4, {{{0, 1, 2}}});
    const NormalizerQuotient nq = normalizer_quotient(C3);
    CHECK(nq.normalizer->order() == 6);
    CHECK(nq.quotient.group->order() == 2);
    for (std::size_t i = 0; i < nq.to_parent.size(); ++i) {
      CHECK(S4->element(nq.to_parent[i]) == nq.normalizer->element(static_cast<Elem>(i)));
    }
  }
}
