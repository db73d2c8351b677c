#include <set>

#include <gtest/gtest.h>

#include "brauer/tensorspace.hpp"
#include "brauer/verdicts.hpp"

using namespace brauer;

TEST(Tensorspace, OneDimensionalV) {
  const Group g = Group::build(Family::Dihedral, 6, Action::Natural);
  const TensorIndex ones(g.degree(), 1);
  for (const auto& phi : brauer_table(g, 3).rows) {
    const SymTensor e = tensor_symmetrize(g, phi, ones, 1);
    CycNum total;
    for (int s : phi.support()) total += phi(s);
    EXPECT_EQ(e.coefficient(ones), CycNum(ratio(phi.degree, static_cast<long>(phi.support().size()))) * total);
  }
  EXPECT_THROW(tensor_symmetrize(g, trivial_character(g), TensorIndex(g.degree(), 2), 1), GroupError);
}

TEST(Tensorspace, TrivialCharacterIsOrbitAverage) {
  const Group g = Group::build(Family::Semidihedral, 2, Action::Natural);
  TensorIndex gamma(g.degree(), 1);
  gamma[0] = 2;
  const SymTensor e = tensor_symmetrize(g, trivial_character(g), gamma, 2);
  const auto orbit = g.orbit(gamma);
  EXPECT_EQ(e.support_size(), orbit.size());
  for (const auto& [idx, c] : e.coeffs()) EXPECT_EQ(c, CycNum(ratio(1, static_cast<long>(orbit.size()))));
}

TEST(Tensorspace, SupportBoundedByOrbit) {
  const Group g = Group::build(Family::Semidihedral, 3, Action::Natural);
  EXPECT_EQ(g.degree(), 12);
  TensorIndex gamma(12, 1);
  gamma[0] = 2;
  gamma[5] = 2;
  for (const auto& phi : brauer_table(g, 5).rows) {
    if (phi.linear()) continue;
    EXPECT_LE(tensor_symmetrize(g, phi, gamma, 2).support_size(), std::min<std::size_t>(24, g.orbit(gamma).size()));
  }
}

TEST(Tensorspace, KernelFormEqualsDirectEverywhereOnSD16) {
  const Group g = Group::build(Family::Semidihedral, 2, Action::Natural);
  for (int p : {3, 5}) {
    for (const auto& phi : brauer_table(g, p).rows) {
      const SymmetrizerKernel kernel(g, phi);
      for (const auto& gamma : tensor_stabilizer_representatives(g, 2)) {
        const auto stab = g.stabilizer(gamma);
        const auto gens = tensor_orbital_generators(g, phi, gamma, 2);
        for (int i = 0; i < g.order(); ++i)
          for (int j = 0; j < g.order(); ++j)
            ASSERT_EQ(estar_inner_closed(g, kernel, stab, i, j), inner_product_direct(gens[i], gens[j]))
                << phi.label;
      }
    }
  }
}

TEST(Tensorspace, ProjectionFormForOrdinaryCharacters) {
  const Group g = Group::build(Family::Dihedral, 8, Action::Natural);
  for (const auto& chi : ordinary_table(g).rows) {
    for (const auto& gamma : tensor_stabilizer_representatives(g, 2)) {
      const auto stab = g.stabilizer(gamma);
      const auto gens = tensor_orbital_generators(g, chi, gamma, 2);
      for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j)
          ASSERT_EQ(estar_inner_projection(g, chi, stab, i, j), inner_product_direct(gens[i], gens[j]));
    }
  }
}

TEST(Tensorspace, TrivialStabilizerDiagonal) {
  const Group g = Group::build(Family::Dihedral, 8, Action::Natural);
  TensorIndex gamma(8, 1);
  gamma[0] = 2;
  gamma[1] = 3;
  gamma[3] = 3;
  ASSERT_EQ(g.stabilizer(gamma).size(), 1u);
  for (const auto& chi : ordinary_table(g).rows)
    EXPECT_EQ(estar_inner_closed(g, chi, gamma, 0, 0), CycNum(ratio(chi.degree * chi.degree, g.order())));
}

TEST(Tensorspace, DifferentOrbitsAreOrthogonal) {
  const Group g = Group::build(Family::Dihedral, 6, Action::Natural);
  const Character& phi = ordinary_table(g).find("chi1");
  TensorIndex a(6, 1), b(6, 1);
  a[0] = 2;
  b[0] = 2;
  b[1] = 2;
  ASSERT_EQ(g.orbit(a).count(b), 0u);
  EXPECT_TRUE(inner_product_direct(tensor_symmetrize(g, phi, a, 2), tensor_symmetrize(g, phi, b, 2)).is_zero());
}

TEST(Tensorspace, DimensionFormulaAndRank) {
  for (auto [f, param, p] : {std::tuple{Family::Semidihedral, 2, 3}, {Family::Semidihedral, 3, 5}, {Family::Dihedral, 12, 5}}) {
    const Group g = Group::build(f, param, Action::Natural);
    const CharTable irr = ordinary_table(g);
    for (const auto& phi : brauer_table(g, p).rows)
      for (const auto& gamma : tensor_stabilizer_representatives(g, 2)) {
        const auto stab = g.stabilizer(gamma);
        std::vector<int> idx(g.order());
        for (int i = 0; i < g.order(); ++i) idx[i] = i;
        const long rank = exact_rank(gram_from_vectors(tensor_orbital_generators(g, phi, gamma, 2), idx).entries);
        EXPECT_EQ(tensor_orbital_dim(g, phi, stab, irr), rank) << phi.label;
        if (phi.linear()) {
          EXPECT_LE(rank, 1);
        }
        if (stab.size() == 1) {
          EXPECT_EQ(rank, phi.degree * phi.degree);
        }
      }
  }
  // the chi(1)/|G_a| sum form agrees for ordinary characters
  const Group g = Group::build(Family::Dihedral, 6, Action::Natural);
  const CharTable irr = ordinary_table(g);
  for (const auto& chi : irr.rows)
    for (const auto& gamma : tensor_stabilizer_representatives(g, 3)) {
      const auto stab = g.stabilizer(gamma);
      EXPECT_EQ(tensor_orbital_dim_formula(g, chi, stab), tensor_orbital_dim(g, chi, stab, irr));
    }
}

TEST(Tensorspace, NonzeroIffInOmega) {
  // e*_a != 0 exactly when sum over G_a of chi is nonzero; exhaustive for n = 2
  for (auto [f, param] : {std::pair{Family::Dihedral, 6}, {Family::Semidihedral, 2}, {Family::Dihedral, 12}}) {
    const Group g = Group::build(f, param, Action::Natural);
    for (const auto& chi : ordinary_table(g).rows)
      for (const auto& gamma : all_tensor_indices(g.degree(), 2)) {
        CycNum s;
        for (int x : g.stabilizer(gamma)) s += chi(x);
        ASSERT_EQ(tensor_symmetrize(g, chi, gamma, 2).is_zero(), s.is_zero());
      }
  }
}

TEST(Tensorspace, StabilizerRepresentativesCoverAllSubgroups) {
  const Group g = Group::build(Family::Dihedral, 6, Action::Natural);
  std::set<std::vector<int>> stabs;
  for (const auto& gamma : all_tensor_indices(6, 3)) stabs.insert(g.stabilizer(gamma));
  std::set<std::vector<int>> from_reps;
  for (const auto& gamma : tensor_stabilizer_representatives(g, 3)) from_reps.insert(g.stabilizer(gamma));
  EXPECT_EQ(stabs, from_reps);
  EXPECT_THROW(tensor_stabilizer_representatives(g, 5), GuardError);
}
