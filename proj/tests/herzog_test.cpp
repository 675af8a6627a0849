#include "numsemi/herzog.hpp"

#include <gtest/gtest.h>

#include "catalog.hpp"
#include "numsemi/invariants.hpp"

using numsemi::Error;
using numsemi::Errc;
using numsemi::HerzogData;
using numsemi::Int;
using numsemi::make_semigroup;
using numsemi::RelativeIdeal;

TEST(StructureMatrix, Frozen345) {
  HerzogData t = numsemi::structure_matrix(make_semigroup({3, 4, 5}));
  EXPECT_EQ(t.ordering, (std::array<Int, 3>{3, 4, 5}));
  EXPECT_EQ(t.alpha, 1);
  EXPECT_EQ(t.beta, 1);
  EXPECT_EQ(t.gamma, 1);
  EXPECT_EQ(t.alpha_prime, 2);
  EXPECT_EQ(t.beta_prime, 1);
  EXPECT_EQ(t.gamma_prime, 1);
  EXPECT_EQ(t.c, (std::array<Int, 3>{3, 2, 2}));
  EXPECT_EQ(t.d, (std::array<Int, 3>{10, 9, 8}));
  EXPECT_EQ(t.m_deg, 13);
  EXPECT_EQ(t.n_deg, 14);
}

TEST(StructureMatrix, Frozen357) {
  HerzogData t = numsemi::structure_matrix(make_semigroup({3, 5, 7}));
  EXPECT_EQ(t.ordering, (std::array<Int, 3>{3, 5, 7}));
  EXPECT_EQ(t.alpha, 1);
  EXPECT_EQ(t.beta, 1);
  EXPECT_EQ(t.gamma, 1);
  EXPECT_EQ(t.alpha_prime, 3);
  EXPECT_EQ(t.beta_prime, 1);
  EXPECT_EQ(t.gamma_prime, 1);
  EXPECT_EQ(t.c, (std::array<Int, 3>{4, 2, 2}));
  EXPECT_EQ(t.d, (std::array<Int, 3>{14, 12, 10}));
  EXPECT_EQ(t.m_deg, 17);
  EXPECT_EQ(t.n_deg, 19);
}

TEST(StructureMatrix, Frozen378) {
  HerzogData t = numsemi::structure_matrix(make_semigroup({3, 7, 8}));
  EXPECT_EQ(t.ordering, (std::array<Int, 3>{3, 7, 8}));
  EXPECT_EQ(t.alpha, 2);
  EXPECT_EQ(t.beta, 1);
  EXPECT_EQ(t.gamma, 1);
  EXPECT_EQ(t.alpha_prime, 3);
  EXPECT_EQ(t.beta_prime, 1);
  EXPECT_EQ(t.gamma_prime, 1);
  EXPECT_EQ(t.c, (std::array<Int, 3>{5, 2, 2}));
  EXPECT_EQ(t.m_deg, 22);
  EXPECT_EQ(t.n_deg, 23);
}

TEST(StructureMatrix, InputOrderDoesNotMatter) {
  HerzogData a = numsemi::structure_matrix(make_semigroup({3, 4, 5}));
  HerzogData b = numsemi::structure_matrix(make_semigroup({5, 3, 4}));
  HerzogData c = numsemi::structure_matrix(make_semigroup({4, 5, 3, 8, 9}));
  EXPECT_EQ(a.ordering, b.ordering);
  EXPECT_EQ(a.m_deg, b.m_deg);
  EXPECT_EQ(a.ordering, c.ordering);
  EXPECT_EQ(a.n_deg, c.n_deg);
}

TEST(StructureMatrix, Errors) {
  try {
    (void)numsemi::structure_matrix(make_semigroup({4, 5, 6}));
    FAIL() << "expected SymmetricSemigroup";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::symmetric_semigroup);
  }
  try {
    (void)numsemi::structure_matrix(make_semigroup({2, 3}));
    FAIL() << "expected NotThreeGenerated";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_three_generated);
  }
  EXPECT_THROW(numsemi::structure_matrix(make_semigroup({4, 5, 6, 7})), Error);
}

TEST(StructureMatrix, ConsecutiveFamily) {
  for (Int n = 1; n <= 5; ++n) {
    auto H = make_semigroup({2 * n + 1, 2 * n + 2, 2 * n + 3});
    HerzogData t = numsemi::structure_matrix(H);
    EXPECT_EQ(t.ordering, (std::array<Int, 3>{2 * n + 1, 2 * n + 2, 2 * n + 3}));
    EXPECT_EQ(t.alpha, 1);
    EXPECT_EQ(t.beta, 1);
    EXPECT_EQ(t.gamma, n);
    EXPECT_EQ(t.alpha_prime, n + 1);
    EXPECT_EQ(t.beta_prime, 1);
    EXPECT_EQ(t.gamma_prime, 1);
    EXPECT_EQ(numsemi::h_omega_formula(H), n + 1);
  }
}

TEST(HOmegaFormula, Frozen) {
  EXPECT_EQ(numsemi::h_omega_formula(make_semigroup({3, 4, 5})), 2);
  EXPECT_EQ(numsemi::h_omega_formula(make_semigroup({3, 5, 7})), 2);
  EXPECT_EQ(numsemi::h_omega_formula(make_semigroup({3, 7, 8})), 4);
}

TEST(CanonicalPairs, NormalizeToCanonicalIdeal) {
  for (const auto& H : catalog::three_gen_nonsymmetric(21)) {
    auto pairs = numsemi::canonical_pairs(H);
    RelativeIdeal K = numsemi::canonical_ideal(H);
    const auto& pf = H->pseudo_frobenius();
    for (const auto& P : pairs) {
      RelativeIdeal normalized = numsemi::shift(P, -P.value());
      EXPECT_EQ(normalized, numsemi::shift(K, -K.value()));
      EXPECT_EQ(normalized.min_gens(), (std::vector<Int>{0, pf[1] - pf[0]}));
    }
    HerzogData t = numsemi::structure_matrix(H);
    EXPECT_EQ(std::abs(t.n_deg - t.m_deg), pf[1] - pf[0]);
  }
}

TEST(HOmegaFormula, MatchesCanonicalRouteOnCatalog) {
  for (const auto& H : catalog::three_gen_nonsymmetric(25)) {
    ASSERT_EQ(numsemi::h_omega_formula(H), numsemi::h_omega(H))
        << ::testing::PrintToString(H->minimal_generators());
  }
}
