// Structural properties of symmetrized polynomials, each checked exactly.

#include <gtest/gtest.h>

#include "brauer/polyspace.hpp"

using namespace brauer;

namespace {

struct Case {
  Family family;
  int param;
  int prime;
};

const Case kCases[] = {{Family::Semidihedral, 2, 3}, {Family::Semidihedral, 3, 3}, {Family::Semidihedral, 3, 5},
                       {Family::Dihedral, 6, 5},     {Family::Dihedral, 8, 3},     {Family::Dihedral, 12, 2}};

}  // namespace

// sigma . X^{alpha,*} = X^{alpha sigma^-1,*}
TEST(Property, Equivariance) {
  for (const auto& c : kCases) {
    const Group g = Group::build(c.family, c.param);
    for (const auto& phi : brauer_table(g, c.prime).rows)
      for (const auto& alpha : orbit_reps(g, 2, 2)) {
        const SymPoly q = symmetrize(g, phi, alpha);
        for (int s = 0; s < g.order(); s += 3) {
          const SymPoly lhs = apply_element(g, q, s);
          const SymPoly rhs = symmetrize_monomial(g, phi, alpha, g.inv(s));
          ASSERT_EQ(lhs.coeffs(), rhs.coeffs()) << phi.label << " s=" << g.render(s);
        }
      }
  }
}

// alpha in the nonvanishing set <=> orbital subspace nonzero <=> every generator nonzero
TEST(Property, NonvanishingEquivalences) {
  int vanishing = 0;
  for (const auto& c : kCases) {
    const Group g = Group::build(c.family, c.param);
    const CharTable irr = ordinary_table(g);
    for (const auto& phi : brauer_table(g, c.prime).rows)
      for (const auto& alpha : orbit_reps(g, 2, 2)) {
        const bool in_bar = !nonvanishing_reps(g, phi, {alpha}, irr).empty();
        const auto gens = orbital_generators(g, phi, alpha);
        bool any = false, every = true;
        for (const auto& q : gens) {
          any = any || !q.is_zero();
          every = every && !q.is_zero();
        }
        ASSERT_EQ(in_bar, any) << phi.label;
        ASSERT_EQ(in_bar, every) << phi.label;
        vanishing += !in_bar;
      }
  }
  EXPECT_GT(vanishing, 0);  // the equivalence is exercised in both directions
}

// S = S^-1 and G = S.S: for linear phi and a free orbit all inner products are nonzero.
TEST(Property, NonzeroProductsForLinearBrauerCharacters) {
  for (int n : {2, 3, 4})
    for (int p : {3, 5}) {
      const Group g = Group::build(Family::Semidihedral, n);
      if (g.rotation_order() % p != 0) continue;
      for (const auto& phi : brauer_table(g, p).rows) {
        if (!phi.linear()) continue;
        const auto alpha = concentrated(g, 1);
        const auto stab = g.stabilizer(alpha);
        ASSERT_EQ(stab.size(), 1u);
        for (int i = 0; i < g.order(); ++i)
          for (int j = 0; j < g.order(); ++j)
            ASSERT_FALSE(inner_product_closed(g, phi, stab, i, j).is_zero()) << "n=" << n << " p=" << p << " " << phi.label;
      }
    }
  // the SD_24, p = 3 instance, by direct expansion
  const Group g = Group::build(Family::Semidihedral, 3);
  for (const auto& phi : brauer_table(g, 3).rows) {
    const auto gens = orbital_generators(g, phi, concentrated(g, 2));
    for (int i = 0; i < g.order(); ++i)
      for (int j = 0; j < g.order(); ++j) ASSERT_FALSE(inner_product_direct(gens[i], gens[j]).is_zero());
  }
}

// <X^{gamma sigma,*}, X^{gamma,*}> over W = <a^{p^t}> from the eta1 + eta2 split
TEST(Property, SubgroupPairFormula) {
  int checked = 0;
  for (int n : {2, 3, 4, 6})
    for (int p : {3, 5}) {
      const Group g = Group::build(Family::Semidihedral, n);
      const int step = split_prime(g.rotation_order(), p).pt;
      for (const auto& phi : brauer_table(g, p).rows) {
        if (phi.linear()) continue;
        const RotationSplit rs = split_on_rotations(g, phi, step);
        Multidegree two_points(g.degree(), 0);
        two_points[0] = 1;
        two_points[g.rotation(step)] = 1;
        for (const auto& gamma : {concentrated(g, 1), concentrated(g, 2), two_points})
          for (int w : rs.subgroup) {
            ASSERT_EQ(subgroup_pair_inner_product(g, phi, step, gamma, w),
                      subgroup_pair_inner_direct(g, phi, step, gamma, w))
                << "n=" << n << " p=" << p << " " << phi.label;
            ++checked;
          }
      }
    }
  EXPECT_GT(checked, 0);
}
