#include <doctest.h>

#include "ppring/burnside.hpp"
#include "ppring/checks.hpp"
#include "ppring/lattice.hpp"
#include "ppring/species.hpp"
#include "support.hpp"

using namespace ppring;
using testing::gen_sub;

namespace {

// |(G/L)^H| by letting H act on explicitly listed cosets.
long long fixed_cosets(const Subgroup& L, const Subgroup& H) {
  const FiniteGroup& G = L.group();
  std::vector<std::vector<Elem>> cosets;
  std::vector<bool> seen(G.order(), false);
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    std::vector<Elem> c;
    for (Elem l : L.elements()) {
      const Elem x = G.mul(static_cast<Elem>(g), l);
      seen[static_cast<std::size_t>(x)] = true;
      c.push_back(x);
    }
    std::sort(c.begin(), c.end());
    cosets.push_back(c);
  }
  long long count = 0;
  for (const auto& c : cosets) {
    bool fixed = true;
    for (Elem h : H.elements()) {
      std::vector<Elem> hc;
      for (Elem x : c) hc.push_back(G.mul(h, x));
      std::sort(hc.begin(), hc.end());
      fixed = fixed && hc == c;
    }
    if (fixed) ++count;
  }
  return count;
}

std::vector<Subgroup> reps_of(const FiniteGroup& G) {
  std::vector<Subgroup> out;
  for (std::size_t i : G.lattice().class_reps()) out.push_back(G.lattice()[i]);
  return out;
}

}  // namespace

TEST_SUITE("burnside") {
  TEST_CASE("marks") {
    const GroupPtr S3 = symmetric(3);
    const Subgroup C2 = gen_sub(*S3, {{{0, 1}}});
    const Subgroup C3 = sylow(*S3, 3);
    for (const auto& H : S3->lattice().subgroups()) CHECK(mark(Subgroup::whole(*S3), H) == 1);
    CHECK(mark(C2, C2) == 1);
    CHECK(mark(C3, C2) == 0);

    SUBCASE("agree with explicit fixed-coset counts") {
      for (const auto& name : {"S4", "D8", "Q8", "D12"}) {
        const GroupPtr G = named_group(name);
        for (const auto& L : reps_of(*G)) {
          for (const auto& H : G->lattice().subgroups()) CHECK(mark(L, H) == fixed_cosets(L, H));
        }
      }
    }
  }

  TEST_CASE("products") {
    const GroupPtr C2 = cyclic(2);
    const BurnsideElement reg = BurnsideElement::transitive(C2, Subgroup::trivial(*C2));
    BurnsideElement twice = reg;
    twice *= Rational(2);
    CHECK(burnside_product(reg, reg) == twice);
    CHECK(burnside_product(BurnsideElement::transitive(C2, Subgroup::whole(*C2)), reg) == reg);

    const GroupPtr S3 = symmetric(3);
    const BurnsideElement x = BurnsideElement::transitive(S3, sylow(*S3, 3));
    BurnsideElement x2 = x;
    x2 *= Rational(2);
    CHECK(burnside_product(x, x) == x2);

    SUBCASE("marks are multiplicative") {
      const GroupPtr G = symmetric(4);
      const auto reps = reps_of(*G);
      for (const auto& A : reps) {
        for (const auto& B : reps) {
          const BurnsideElement ab =
              burnside_product(BurnsideElement::transitive(G, A), BurnsideElement::transitive(G, B));
          for (const auto& K : reps) CHECK(mark(ab, K) == Rational(static_cast<long>(mark(A, K) * mark(B, K))));
        }
      }
    }
    CHECK_THROWS_CODE(burnside_product(reg, x), ErrorCode::GroupMismatch);
  }

  TEST_CASE("Gluck-Yoshida idempotents") {
    const GroupPtr C2 = cyclic(2);
    BurnsideElement expect(C2);
    expect.add(Subgroup::whole(*C2), Rational(1));
    expect.add(Subgroup::trivial(*C2), frac(-1, 2));
    CHECK(gluck_yoshida(C2, Subgroup::whole(*C2)) == expect);

    const GroupPtr C3 = cyclic(3);
    BurnsideElement e3(C3);
    e3.add(Subgroup::whole(*C3), Rational(1));
    e3.add(Subgroup::trivial(*C3), frac(-1, 3));
    CHECK(gluck_yoshida(C3, Subgroup::whole(*C3)) == e3);

    const GroupPtr S4 = symmetric(4);
    BurnsideElement e1(S4);
    e1.add(Subgroup::trivial(*S4), frac(1, 24));
    CHECK(gluck_yoshida(S4, Subgroup::trivial(*S4)) == e1);

    for (const auto& name : {"S3", "D8", "A4", "S4", "Q8"}) {
      CAPTURE(name);
      const GroupPtr G = named_group(name);
      CHECK(check_marks_delta(G).passed());
      CHECK(check_gy_idempotent(G).passed());
    }
  }

  TEST_CASE("fixed point functor") {
    const GroupPtr S3 = symmetric(3);
    const Subgroup C3 = sylow(*S3, 3);
    const BurnsideElement x = BurnsideElement::transitive(S3, C3);
    CHECK(fixed_point_functor(Subgroup::trivial(*S3), x).coeffs().size() == 1);
    const NormalizerQuotient nq = normalizer_quotient(C3);
    const BurnsideElement fx = fixed_point_functor(C3, x, nq);
    CHECK(fx == BurnsideElement::transitive(nq.quotient.group, Subgroup::trivial(*nq.quotient.group)));

    const GroupPtr C2 = cyclic(2);
    const BurnsideElement reg = BurnsideElement::transitive(C2, Subgroup::trivial(*C2));
    CHECK(fixed_point_functor(Subgroup::whole(*C2), reg).coeffs().empty());

    SUBCASE("P = 1 is the identity up to relabelling") {
      const GroupPtr G = symmetric(4);
      for (const auto& L : reps_of(*G)) {
        const BurnsideElement y = BurnsideElement::transitive(G, L);
        const BurnsideElement fy = fixed_point_functor(Subgroup::trivial(*G), y);
        REQUIRE(fy.coeffs().size() == 1);
        CHECK(fy.coeffs().begin()->first.order() == L.order());
      }
    }
    SUBCASE("marks of Φ_P(X) at K/P equal marks of X at K") {
      const GroupPtr G = symmetric(4);
      for (const auto& P : reps_of(*G)) {
        if (!is_p_group(P, 2)) continue;
        const NormalizerQuotient q = normalizer_quotient(P);
        for (const auto& L : reps_of(*G)) {
          const BurnsideElement fy = fixed_point_functor(P, BurnsideElement::transitive(G, L), q);
          for (const auto& Kbar : q.quotient.group->lattice().subgroups()) {
            const Subgroup Kn = q.quotient.preimage(Kbar);
            std::vector<Elem> inG;
            for (Elem k : Kn.elements()) inG.push_back(q.to_parent[static_cast<std::size_t>(k)]);
            CHECK(mark(fy, Kbar) == Rational(static_cast<long>(mark(L, Subgroup(*G, inG)))));
          }
        }
      }
    }
  }

  TEST_CASE("restriction and induction of G-sets") {
    const GroupPtr G = symmetric(4);
    for (const auto& H : reps_of(*G)) {
      const GroupPtr Hg = subgroup_group(H);
      for (const auto& L : reps_of(*G)) {
        const BurnsideElement r = burnside_res(BurnsideElement::transitive(G, L), Hg);
        // marks of the restriction at K ≤ H are marks of G/L at K.
        for (const auto& K : Hg->lattice().subgroups()) {
          std::vector<Elem> inG;
          for (Elem k : K.elements()) inG.push_back(H.elements()[static_cast<std::size_t>(k)]);
          CHECK(mark(r, K) == Rational(static_cast<long>(mark(L, Subgroup(*G, inG)))));
        }
      }
    }
  }

  TEST_CASE("linearization") {
    const GroupPtr C2 = cyclic(2);
    const ModularSetting s = setting_for(*C2, 2);
    const PPElement one = linearize(BurnsideElement::transitive(C2, Subgroup::whole(*C2)), s);
    CHECK(equal_elements(one, PPElement::one(C2, s)));
    const PPElement e = linearize(gluck_yoshida(C2, Subgroup::whole(*C2)), s);
    PPElement expect = PPElement::one(C2, s);
    expect -= frac(1, 2) * PPElement::generator(C2, s, Subgroup::trivial(*C2), LinChar::trivial(Subgroup::trivial(*C2), 1));
    CHECK(e.terms().size() == 2);
    CHECK(equal_elements(e, expect));

    const GroupPtr S3 = symmetric(3);
    const ModularSetting s3 = setting_for(*S3, 3);
    const Subgroup C3 = sylow(*S3, 3);
    const PPElement l = linearize(BurnsideElement::transitive(S3, C3), s3);
    REQUIRE(l.terms().size() == 1);
    CHECK(l.terms().begin()->first.subgroup() == C3);
    CHECK(l.terms().begin()->first.character().is_trivial());
  }

  TEST_CASE("commutation squares and the fixed points of the top idempotent") {
    for (const auto& name : {"S3", "D8", "A4"}) {
      CAPTURE(name);
      const GroupPtr G = named_group(name);
      for (int p : {2, 3}) {
        CAPTURE(p);
        CHECK(check_commute_res_ind(G, p).passed());
        CHECK(check_commute_brauer(G, p).passed());
      }
      CHECK(check_points_fixes(G).passed());
    }
  }
}
