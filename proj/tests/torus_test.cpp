#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "quotcoh/errors.hpp"
#include "quotcoh/torus.hpp"

using namespace quotcoh;

namespace {

// T^3 foliated by the x-circle; a dense subgroup translates y.
TorusSpec nondense_example() { return TorusSpec{3, {{ExtScalar{1}, ExtScalar{0}, ExtScalar{0}}}, {1}, 3}; }

// T^2 with the irrational line of slope alpha.
TorusSpec kronecker() { return TorusSpec{2, {{ExtScalar{1}, ExtScalar{0, 1}}}, {}, 3}; }

TorusSpec plain_torus(std::size_t n) { return TorusSpec{n, {}, {}, 3}; }

Mode mode(std::vector<std::int64_t> m) { return Mode{std::move(m)}; }

} // namespace

TEST(Survives, Examples) {
  EXPECT_TRUE(survives(mode({0, 0, 5}), nondense_example()));
  EXPECT_FALSE(survives(mode({0, 3, 1}), nondense_example()));
  EXPECT_FALSE(survives(mode({1, 0, 0}), nondense_example()));
  EXPECT_FALSE(survives(mode({2, -1}), kronecker()));
  EXPECT_TRUE(survives(mode({0, 0}), kronecker()));
}

TEST(Survives, RationalResonanceSurvivesButIrrationalDoesNot) {
  // Direction (1, 1 + alpha, 0): m.v = m0 + m1 + m1 alpha, so m1 = 0 and m0 = 0.
  TorusSpec spec{3, {{ExtScalar{1}, ExtScalar{1, 1}, ExtScalar{0}}}, {}, 2};
  EXPECT_FALSE(survives(mode({1, -1, 0}), spec));
  EXPECT_TRUE(survives(mode({0, 0, 2}), spec));
  // Rational direction (1, -1): the resonant mode (1, 1) survives.
  TorusSpec rational{2, {{ExtScalar{1}, ExtScalar{-1}}}, {}, 2};
  EXPECT_TRUE(survives(mode({1, 1}), rational));
}

TEST(TransverseFrame, ComplementsThePivots) {
  EXPECT_EQ(transverse_frame(nondense_example()).coords, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(transverse_frame(kronecker()).coords, (std::vector<std::size_t>{1}));
  TorusSpec dependent{2, {{ExtScalar{1}, ExtScalar{0, 1}}, {ExtScalar{2}, ExtScalar{0, 2}}}, {}, 3};
  EXPECT_THROW(transverse_frame(dependent), InvalidSpec);
  TorusSpec bad_invariance{2, {}, {5}, 3};
  EXPECT_THROW(transverse_frame(bad_invariance), InvalidSpec);
  TorusSpec ragged{3, {{ExtScalar{1}}}, {}, 3};
  EXPECT_THROW(transverse_frame(ragged), InvalidSpec);
}

TEST(ModeComplex, ZeroModeHasZeroDifferentials) {
  const ModeComplex mc = build_mode_complex(mode({0, 0, 0}), nondense_example());
  EXPECT_EQ(mc.complex.dims, (std::vector<std::size_t>{1, 2, 1}));
  for (const auto &d : mc.complex.d)
    EXPECT_TRUE(is_zero(d));
}

TEST(ModeComplex, UnitZModeMatchesTheExplicitDifferential) {
  // Basis: {1}, {dy, dz}, {dy^dz}. d f = f' dz and d(a dy) = a' dz^dy = -a' dy^dz.
  const ModeComplex mc = build_mode_complex(mode({0, 0, 1}), nondense_example());
  EXPECT_EQ(mc.transverse_coords, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(mc.complex.d[0], (Matrix{{0}, {1}}));
  EXPECT_EQ(mc.complex.d[1], (Matrix{{-1, 0}}));
}

TEST(ModeComplex, KilledModesAreRefused) {
  EXPECT_THROW(build_mode_complex(mode({0, 1, 0}), nondense_example()), ModeKilled);
  EXPECT_THROW(build_mode_complex(mode({1, 0}), kronecker()), ModeKilled);
}

TEST(ModeComplex, SquaresToZero) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const TorusSpec spec = gen::random_torus_spec(rng, trial % 2 == 0);
    std::uniform_int_distribution<std::int64_t> entry(-3, 3);
    for (int attempt = 0; attempt < 20; ++attempt) {
      Mode m{std::vector<std::int64_t>(spec.n)};
      for (auto &x : m.m)
        x = entry(rng);
      if (!survives(m, spec))
        continue;
      EXPECT_TRUE(squares_to_zero(build_mode_complex(m, spec).complex));
    }
  }
}

TEST(Koszul, Examples) {
  const KoszulCertificate c = koszul_certificate(build_mode_complex(mode({0, 0, 1}), nondense_example()));
  EXPECT_TRUE(c.acyclic);
  EXPECT_EQ(c.ranks, (std::vector<std::size_t>{1, 1}));

  const KoszulCertificate full = koszul_certificate(build_mode_complex(mode({1, 0}), plain_torus(2)));
  EXPECT_TRUE(full.acyclic);
  EXPECT_EQ(full.ranks, (std::vector<std::size_t>{1, 1}));

  EXPECT_THROW(koszul_certificate(build_mode_complex(mode({0, 0}), kronecker())), std::invalid_argument);
}

TEST(Koszul, ReportsFailureWhenTheCovectorVanishes) {
  // A hand-built mode complex with mu = 0 stands in for a broken frame.
  ModeComplex mc = build_mode_complex(mode({0, 0, 0}), nondense_example());
  mc.mode = mode({0, 0, 1});
  const KoszulCertificate c = koszul_certificate(mc);
  EXPECT_FALSE(c.acyclic);
  ASSERT_TRUE(c.failing_degree);
  EXPECT_EQ(*c.failing_degree, 0u);
}

TEST(TorusBetti, Examples) {
  const TorusBettiReport r = torus_betti(nondense_example());
  EXPECT_EQ(r.betti, (std::vector<std::size_t>{1, 2, 1}));
  ASSERT_EQ(r.mode_zero_generators.size(), 3u);
  EXPECT_EQ(r.mode_zero_generators[1], (std::vector<exterior::MultiIndex>{{1}, {2}}));
  EXPECT_EQ(r.mode_zero_generators[2], (std::vector<exterior::MultiIndex>{{1, 2}}));
  // Surviving nonzero modes: (0, 0, z), 0 < |z| <= 3.
  EXPECT_EQ(r.audited_modes, 6u);
  for (const auto &c : r.acyclicity_certificates)
    EXPECT_TRUE(c.acyclic);

  const TorusBettiReport k = torus_betti(kronecker());
  EXPECT_EQ(k.betti, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(k.audited_modes, 0u);

  EXPECT_EQ(torus_betti(plain_torus(2)).betti, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(torus_betti(plain_torus(2)).audited_modes, 48u);
}

TEST(TorusBetti, IrrationalLineInsideT3) {
  // Direction (1, alpha, 0): only modes (0, 0, z) survive; betti (1, 2, 1).
  TorusSpec spec{3, {{ExtScalar{1}, ExtScalar{0, 1}, ExtScalar{0}}}, {}, 3};
  const TorusBettiReport r = torus_betti(spec);
  EXPECT_EQ(r.betti, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(r.audited_modes, 6u);
}

TEST(TorusBetti, SpecializesToTheDeRhamCohomologyOfTheTorus) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto b = torus_betti(TorusSpec{n, {}, {}, 1}).betti;
    ASSERT_EQ(b.size(), n + 1);
    for (std::size_t k = 0; k <= n; ++k)
      EXPECT_EQ(b[k], exterior::binomial(n, k));
  }
}

TEST(TorusBetti, TruncationAndInvarianceDoNotChangeTheAnswer) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    TorusSpec spec = gen::random_torus_spec(rng, trial % 2 == 1);
    spec.truncation = 1;
    const auto base = torus_betti(spec).betti;
    for (int N : {2, 3}) {
      spec.truncation = N;
      EXPECT_EQ(torus_betti(spec).betti, base);
    }
    TorusSpec more = spec;
    more.truncation = 2;
    for (std::size_t j = 0; j < spec.n; ++j)
      if (j % 2 == 0)
        more.invariance_coords.insert(j);
    const TorusBettiReport r = torus_betti(more);
    EXPECT_EQ(r.betti, base);
    spec.truncation = 2;
    EXPECT_LE(r.audited_modes, torus_betti(spec).audited_modes);
  }
}

TEST(TorusBetti, RefusesDependentDirections) {
  TorusSpec dependent{3, {{ExtScalar{1}, ExtScalar{1}, ExtScalar{0}}, {ExtScalar{2}, ExtScalar{2}, ExtScalar{0}}}, {}, 3};
  EXPECT_THROW(torus_betti(dependent), InvalidSpec);
}

TEST(CrossCheck, Examples) {
  const CrossCheck a = cross_check_ce(nondense_example());
  EXPECT_TRUE(a);
  EXPECT_EQ(a.ce_betti, (std::vector<std::size_t>{1, 2, 1}));

  const CrossCheck b = cross_check_ce(kronecker());
  EXPECT_TRUE(b);
  EXPECT_EQ(b.ce_betti, (std::vector<std::size_t>{1, 1}));

  TorusSpec four{4, {{1, 0, 0, 0}, {0, 1, 0, 0}}, {2}, 3};
  const CrossCheck c = cross_check_ce(four);
  EXPECT_TRUE(c);
  EXPECT_EQ(c.torus_betti, (std::vector<std::size_t>{1, 2, 1}));
}

TEST(RationalSkeleton, SpecializesAlpha) {
  const Subspace s = rational_skeleton(kronecker());
  EXPECT_EQ(s.dim(), 1u);
  const Subspace r = rational_skeleton(nondense_example());
  EXPECT_TRUE(r.contains({1, 0, 0}));
  EXPECT_EQ(r.dim(), 1u);
}
