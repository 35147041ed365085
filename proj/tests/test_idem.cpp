#include <doctest.h>

#include "ppring/checks.hpp"
#include "ppring/idem.hpp"
#include "ppring/lattice.hpp"
#include "support.hpp"

using namespace ppring;
using testing::elem;
using testing::gen_sub;

namespace {

PPElement gen_elt(const GroupPtr& G, ModularSetting s, const Subgroup& L) {
  return PPElement::generator(G, s, L, LinChar::trivial(L, s.conductor));
}

const SpeciesPair& find_pair(const std::vector<SpeciesPair>& pairs, std::size_t P_order, int s_order) {
  for (const auto& pr : pairs) {
    if (pr.P().order() == P_order && pr.s_order() == s_order) return pr;
  }
  throw std::runtime_error("no such pair");
}

bool is_idempotent(const PPElement& x) { return equal_elements(tensor_elt(x, x), x); }

}  // namespace

TEST_SUITE("idem") {
  TEST_CASE("cyclic idempotents") {
    const GroupPtr C3 = cyclic(3);
    const ModularSetting s = setting_for(*C3, 2);
    const Elem z = elem(*C3, {{0, 1, 2}});
    const Subgroup all = Subgroup::whole(*C3);
    const PPElement f = cyclic_idempotent(C3, z, s);
    // (1/3) Σ_j ζ^{-j} [k_{φ_j}] with φ_j(z) = ζ^j.
    PPElement expect(C3, s);
    for (const auto& chi : linear_characters(all, 3)) {
      Cyclotomic c = Cyclotomic::zeta_power(3, -chi(z));
      c *= frac(1, 3);
      expect += PPElement::generator(C3, s, all, chi, c);
    }
    CHECK(equal_elements(f, expect));
    CHECK(f.terms().size() == 3);
    CHECK(is_idempotent(f));

    const PPElement f1 = cyclic_idempotent(C3, 0, s);
    for (const auto& [gen, c] : f1.terms()) CHECK(c == Cyclotomic(3, frac(1, 3)));
    CHECK(equal_elements(f + cyclic_idempotent(C3, C3->pow(z, 2), s) + f1, PPElement::one(C3, s)));

    CHECK_THROWS_CODE(cyclic_idempotent(C3, z, setting_for(*C3, 3)), ErrorCode::NotPPrime);
    const GroupPtr V4 = named_group("V4");
    CHECK_THROWS_CODE(cyclic_idempotent(V4, 0, setting_for(*V4, 3)), ErrorCode::NotCyclic);
  }

  TEST_CASE("linearized top Burnside idempotent") {
    const GroupPtr C2 = cyclic(2);
    const ModularSetting s2 = setting_for(*C2, 2);
    PPElement e2 = PPElement::one(C2, s2);
    e2 -= frac(1, 2) * gen_elt(C2, s2, Subgroup::trivial(*C2));
    CHECK(equal_elements(top_E(C2, s2), e2));

    // e_{S3} = [S3/S3] - 1/2 [S3/C3] - [S3/C2] + 1/2 [S3/1], by Möbius inversion on the lattice.
    const GroupPtr S3 = symmetric(3);
    const ModularSetting s = setting_for(*S3, 3);
    PPElement e = PPElement::one(S3, s);
    e -= frac(1, 2) * gen_elt(S3, s, sylow(*S3, 3));
    e -= gen_elt(S3, s, gen_sub(*S3, {{{0, 1}}}));
    e += frac(1, 2) * gen_elt(S3, s, Subgroup::trivial(*S3));
    CHECK(equal_elements(top_E(S3, s), e));

    for (const auto& name : {"S3", "D8", "A4", "S4"}) {
      const GroupPtr G = named_group(name);
      for (int p : {2, 3}) CHECK(is_idempotent(top_E(G, setting_for(*G, p))));
    }
  }

  TEST_CASE("normal case") {
    const GroupPtr C6 = cyclic(6);
    const ModularSetting s = setting_for(*C6, 2);
    const Elem c = elem(*C6, {{0, 1, 2, 3, 4, 5}});
    const Elem t = C6->pow(c, 2);
    const PPElement f = idempotent_normal_case(C6, t, s);
    const auto pairs = enumerate_pairs(C6, 2);
    const SpeciesPair pair = SpeciesPair::make(C6, sylow(*C6, 2), t, 2);
    CHECK(delta_holds(pair, species_vector(f, pairs)));
    CHECK(equal_elements(f, idempotent_theorem(pair)));

    const GroupPtr C2 = cyclic(2);
    const PPElement g = idempotent_normal_case(C2, 0, setting_for(*C2, 2));
    PPElement expect = PPElement::one(C2, setting_for(*C2, 2));
    expect -= frac(1, 2) * gen_elt(C2, setting_for(*C2, 2), Subgroup::trivial(*C2));
    CHECK(equal_elements(g, expect));

    const GroupPtr S3 = symmetric(3);
    CHECK_THROWS_CODE(idempotent_normal_case(S3, 0, setting_for(*S3, 2)), ErrorCode::ShapeMismatch);
    CHECK_THROWS_CODE(idempotent_normal_case(C6, 0, s), ErrorCode::ShapeMismatch);
  }

  TEST_CASE("closed formula examples") {
    const GroupPtr C2 = cyclic(2);
    const ModularSetting s2 = setting_for(*C2, 2);
    const auto pairs = enumerate_pairs(C2, 2);
    const PPElement f1 = idempotent_theorem(find_pair(pairs, 1, 1));
    const PPElement reg = gen_elt(C2, s2, Subgroup::trivial(*C2));
    CHECK(equal_elements(f1, frac(1, 2) * reg));
    const PPElement fp = idempotent_theorem(find_pair(pairs, 2, 1));
    CHECK(equal_elements(fp, PPElement::one(C2, s2) - frac(1, 2) * reg));

    // S3, p = 3, pair (C3, 1): 1/(3·2) (3 [S3/C3] - [S3/1]).
    const GroupPtr S3 = symmetric(3);
    const ModularSetting s3 = setting_for(*S3, 3);
    const auto p3 = enumerate_pairs(S3, 3);
    const PPElement fc3 = idempotent_theorem(find_pair(p3, 3, 1));
    PPElement expect = frac(1, 2) * gen_elt(S3, s3, sylow(*S3, 3));
    expect -= frac(1, 6) * gen_elt(S3, s3, Subgroup::trivial(*S3));
    CHECK(equal_elements(fc3, expect));
    // Pair (1, 1): 1/6 [S3/1].
    CHECK(equal_elements(idempotent_theorem(find_pair(p3, 1, 1)), frac(1, 6) * gen_elt(S3, s3, Subgroup::trivial(*S3))));
  }

  TEST_CASE("reduction route examples") {
    const GroupPtr S3 = symmetric(3);
    const ModularSetting s3 = setting_for(*S3, 3);
    const auto p3 = enumerate_pairs(S3, 3);
    const PPElement r = idempotent_via_reduction(find_pair(p3, 3, 1));
    // (|s|/|C|) Ind_{C3}^{S3}(E_{C3}) with E_{C3} = 1 - 1/3 [C3/1].
    PPElement expect = frac(1, 2) * gen_elt(S3, s3, sylow(*S3, 3));
    expect -= frac(1, 6) * gen_elt(S3, s3, Subgroup::trivial(*S3));
    CHECK(equal_elements(r, expect));
    for (const auto& pr : p3) CHECK(equal_elements(idempotent_via_reduction(pr), idempotent_theorem(pr)));
  }

  TEST_CASE("delta, idempotence and orthogonality") {
    for (const auto& name : {"C2", "C4", "C6", "S3", "D8", "Q8", "A4"}) {
      const GroupPtr G = named_group(name);
      for (int p : {2, 3}) {
        CAPTURE(name);
        CAPTURE(p);
        const auto pairs = enumerate_pairs(G, p);
        std::vector<PPElement> fs;
        PPElement sum(G, setting_for(*G, p));
        for (const auto& pr : pairs) {
          fs.push_back(idempotent_theorem(pr));
          sum += fs.back();
          CHECK(delta_holds(pr, species_vector(fs.back(), pairs)));
        }
        CHECK(equal_elements(sum, PPElement::one(G, setting_for(*G, p))));
        for (std::size_t i = 0; i < fs.size(); ++i) {
          for (std::size_t j = i; j < fs.size(); ++j) {
            const PPElement prod = tensor_elt(fs[i], fs[j]);
            if (i == j) {
              CHECK(equal_elements(prod, fs[i]));
            } else {
              CHECK(species_vector(prod, pairs).values == species_vector(PPElement(G, setting_for(*G, p)), pairs).values);
            }
          }
        }
      }
    }
  }

  TEST_CASE("every coefficient lives on subgroups of a conjugate of <Ps>") {
    for (const auto& name : {"S3", "D8", "A4", "S4"}) {
      const GroupPtr G = named_group(name);
      for (int p : {2, 3}) {
        for (const auto& pr : enumerate_pairs(G, p)) {
          const PPElement f = idempotent_theorem(pr);
          for (const auto& [gen, c] : f.terms()) {
            bool inside = false;
            for (std::size_t g = 0; g < G->order() && !inside; ++g) {
              inside = gen.subgroup().is_subgroup_of(pr.ps().conjugate(static_cast<Elem>(g)));
            }
            CHECK(inside);
          }
        }
      }
    }
  }

  TEST_CASE("restriction law examples") {
    const GroupPtr S3 = symmetric(3);
    const ModularSetting s = setting_for(*S3, 2);
    const auto pairs = enumerate_pairs(S3, 2);
    const Subgroup C3 = sylow(*S3, 3);
    const Subgroup T = gen_sub(*S3, {{{0, 1}}});
    for (const auto& pr : pairs) {
      CHECK(verify_restriction(pr, C3, s));
      CHECK(verify_restriction(pr, T, s));
      CHECK(verify_restriction(pr, Subgroup::whole(*S3), s));
    }
    // Res_{C3} F^{S3}_{1,(012)} = F^{C3}_{1,z} + F^{C3}_{1,z^2}, written out.
    const GroupPtr H = subgroup_group(C3);
    const Elem z = H->index_of(Permutation::from_cycles(3, {{0, 1, 2}}));
    const PPElement lhs = res_elt(idempotent_theorem(find_pair(pairs, 1, 3)), C3);
    const PPElement rhs = cyclic_idempotent(H, z, s) + cyclic_idempotent(H, H->pow(z, 2), s);
    CHECK(equal_elements(lhs, rhs));
    // A pair with no conjugate inside H restricts to zero.
    const PPElement zero = res_elt(idempotent_theorem(find_pair(pairs, 2, 1)), C3);
    CHECK(species_vector(zero).values == species_vector(PPElement(H, s)).values);
  }

  TEST_CASE("induction law examples") {
    const GroupPtr S3 = symmetric(3);
    const ModularSetting s = setting_for(*S3, 2);
    const GroupPtr H = subgroup_group(sylow(*S3, 3));
    const Elem z = H->index_of(Permutation::from_cycles(3, {{0, 1, 2}}));
    const auto hpairs = enumerate_pairs(H, 2);
    // (1, 1): N_{S3} = S3, N_{C3} = C3, so the factor is 2.
    const SpeciesPair one = find_pair(hpairs, 1, 1);
    CHECK(equal_elements(ind_elt(idempotent_theorem(one, s), S3),
                         frac(2, 1) * idempotent_theorem(pair_in_overgroup(one, S3), s)));
    // (1, z): N_{S3}(1, z) = C3, factor 1.
    const SpeciesPair pz = SpeciesPair::make(H, Subgroup::trivial(*H), z, 2);
    CHECK(equal_elements(ind_elt(idempotent_theorem(pz, s), S3), idempotent_theorem(pair_in_overgroup(pz, S3), s)));
    for (const auto& pr : hpairs) CHECK(verify_induction(pr, S3, s));
  }

  TEST_CASE("decomposition of E for groups cyclic modulo p") {
    CHECK(verify_E_decomposition(cyclic(6), setting_for(*cyclic(6), 2)));
    CHECK(verify_E_decomposition(cyclic(6), setting_for(*cyclic(6), 3)));
    const GroupPtr S3 = symmetric(3);
    CHECK(verify_E_decomposition(S3, setting_for(*S3, 3)));
    const GroupPtr A4 = named_group("A4");
    CHECK(verify_E_decomposition(A4, setting_for(*A4, 2)));
  }

  TEST_CASE("law suites on the small corpus") {
    for (const auto& name : {"S3", "D8", "A4"}) {
      for (int p : {2, 3}) {
        CAPTURE(name);
        CAPTURE(p);
        const GroupPtr G = named_group(name);
        CHECK(check_route_agreement(G, p).passed());
        CHECK(check_restriction(G, p).passed());
        CHECK(check_induction(G, p).passed());
        CHECK(check_E_decomposition(G, p).passed());
      }
    }
  }
}
