#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "rankmetric/code.hpp"
#include "rankmetric/errors.hpp"
#include "rankmetric/numtheory.hpp"

using namespace rankmetric;

namespace {

CodeSpec h_spec(FieldPtr F, int k, int s, const AdditiveMap& L1, const AdditiveMap& L2) {
  return CodeSpec{F, k, s, L1, L2, Family::CUSTOM};
}

AdditiveMap q_mono(const FieldPtr& F, Elem a, int i) { return AdditiveMap::monomial(F, a, i * F->lambda()); }

// Rank histogram by brute force over every codeword.
std::vector<std::uint64_t> oracle_distribution(const Code& c) {
  std::vector<std::uint64_t> h(c.field().n() + 1, 0);
  for (const auto& f : c.elements()) ++h[oracle::rank(f)];
  return h;
}

}  // namespace

TEST(Code, GabidulinSizeAndDistance) {
  auto F = Field::create(2, 1, 4);
  const Code G = build_h_code(gabidulin_spec(F, 2, 1));
  EXPECT_EQ(G.dimension(), 8u);
  EXPECT_EQ(G.elements().size(), 256u);
  EXPECT_EQ(min_distance_exhaustive(G), 3);
  EXPECT_TRUE(is_mrd(G));
  EXPECT_EQ(rank_distribution(G), oracle_distribution(G));
  EXPECT_TRUE(G.is_fq_linear());
  EXPECT_TRUE(G.contains(LinPoly(F)));
  for (const auto& b : G.basis()) EXPECT_TRUE(G.contains(b));
  EXPECT_FALSE(G.contains(LinPoly::monomial(F, Field::one(), 3)));
}

TEST(Code, DimensionCounts) {
  auto F = Field::create(3, 1, 4);
  const Code C = build_h_code(h_spec(F, 2, 1, AdditiveMap::identity(F), q_mono(F, F->generator(), 1)));
  EXPECT_EQ(C.dimension(), 8u);
  EXPECT_DOUBLE_EQ(C.log_q_size(), 8.0);
  auto F16 = Field::create(2, 1, 4);
  const Code K = build_h_code(h_spec(F16, 1, 1, AdditiveMap::identity(F16), AdditiveMap(F16)));
  EXPECT_EQ(K.dimension(), 4u);
  EXPECT_EQ(min_distance_exhaustive(K), 4);
  EXPECT_TRUE(is_mrd(K));
  auto F8 = Field::create(2, 2, 3);
  const Code T = build_h_code(h_spec(F8, 2, 2, AdditiveMap::identity(F8), q_mono(F8, F8->exp(3), 1)));
  EXPECT_EQ(T.dimension(), static_cast<std::size_t>(2 * 3 * 2));
}

TEST(Code, SpecValidation) {
  auto F = Field::create(2, 1, 4);
  auto id = AdditiveMap::identity(F);
  EXPECT_THROW(build_h_code(h_spec(F, 0, 1, id, id)), PreconditionError);
  EXPECT_THROW(build_h_code(h_spec(F, 4, 1, id, id)), PreconditionError);
  EXPECT_THROW(build_h_code(h_spec(F, 2, 2, id, id)), PreconditionError);
  EXPECT_THROW(build_h_code(h_spec(F, 2, 1, AdditiveMap(F), AdditiveMap(F))), PreconditionError);
}

TEST(Code, FullAndZeroSpaces) {
  auto F = Field::create(2, 1, 3);
  const Code full = Code::full_space(F);
  EXPECT_EQ(full.dimension(), 9u);
  EXPECT_EQ(min_distance_exhaustive(full), 1);
  EXPECT_TRUE(is_mrd(full));
  const Code zero = Code::zero(F);
  EXPECT_EQ(min_distance_exhaustive(zero), 4);
}

TEST(Code, NonMrdExample) {
  auto F = Field::create(2, 1, 4);
  const LinPoly f = LinPoly::monomial(F, Field::one(), 1) - LinPoly::identity(F);
  std::vector<LinPoly> gens;
  for (int j = 0; j < 4; ++j) gens.push_back(f.scaled(F->basis(j)));
  const Code C = Code::from_generators(F, gens);
  EXPECT_EQ(C.elements().size(), 16u);
  EXPECT_EQ(min_distance_exhaustive(C), 3);
  EXPECT_FALSE(is_mrd(C));
}

TEST(Code, BudgetIsExplicit) {
  auto F = Field::create(3, 1, 4);
  const Code C = build_h_code(gabidulin_spec(F, 2, 1));
  EXPECT_THROW(min_distance_exhaustive(C, 1000), BudgetError);
  EXPECT_THROW(C.elements(1000), BudgetError);
}

TEST(Code, RankDistributionMatchesOracle) {
  std::mt19937_64 rng(41);
  auto F = Field::create(3, 1, 3);
  for (int rep = 0; rep < 4; ++rep) {
    const Code C = build_h_code(
        h_spec(F, 1 + rep % 2, 1, AdditiveMap::identity(F), q_mono(F, oracle::random_elem(*F, rng), 1 + rep % 2)));
    EXPECT_EQ(rank_distribution(C), oracle_distribution(C));
  }
  auto G = Field::create(2, 2, 3);
  const Code D = build_h_code(h_spec(G, 1, 1, AdditiveMap::identity(G), AdditiveMap::monomial(G, G->exp(5), 1)));
  EXPECT_EQ(rank_distribution(D), oracle_distribution(D));
}

TEST(Code, FqLinearityDetection) {
  auto F = Field::create(2, 2, 3);
  const Code gtg = build_h_code(h_spec(F, 2, 1, AdditiveMap::identity(F), q_mono(F, F->exp(1), 1)));
  EXPECT_TRUE(gtg.is_fq_linear());
  const Code agtg = build_h_code(h_spec(F, 2, 1, AdditiveMap::identity(F), AdditiveMap::monomial(F, F->exp(1), 1)));
  EXPECT_FALSE(agtg.is_fq_linear());
}

TEST(Code, Presets) {
  auto F81 = Field::create(3, 1, 4);
  auto gtg = preset(F81, Family::GTG, PresetParams{2, 1, 1, std::nullopt, std::nullopt});
  ASSERT_TRUE(gtg.ok());
  const Elem eta = gtg.spec->L2.coeff(1);
  EXPECT_NE(F81->norm_rel(eta, 1), Field::one());
  // Deterministic choice: the first eta in dlog order with N(eta) != 1.
  for (std::uint32_t u = 0; u < F81->dlog(eta); ++u) EXPECT_EQ(F81->norm_rel(F81->exp(u), 1), Field::one());
  EXPECT_TRUE(mrd_norm_criterion(*gtg.spec));
  EXPECT_TRUE(is_mrd(build_h_code(*gtg.spec)));

  auto bad = preset(F81, Family::GTG, PresetParams{2, 1, 1, Field::one(), std::nullopt});
  EXPECT_FALSE(bad.ok());
  ASSERT_EQ(bad.violations.size(), 1u);
  EXPECT_EQ(bad.violations[0], "N_{q^n,q}(eta) != (-1)^{nk}");

  for (int n : {3, 4, 5}) {
    auto F2 = Field::create(2, 1, n);
    auto tg = preset(F2, Family::TG, PresetParams{2, 1, 1, std::nullopt, std::nullopt});
    EXPECT_FALSE(tg.ok());
  }

  auto tz_odd = preset(Field::create(3, 1, 3), Family::TZ, PresetParams{});
  ASSERT_FALSE(tz_odd.ok());
  EXPECT_EQ(tz_odd.violations[0], "n even");

  auto tz = preset(F81, Family::TZ, PresetParams{2, 1, 1, std::nullopt, std::nullopt});
  ASSERT_TRUE(tz.ok());
  EXPECT_TRUE(mrd_norm_criterion(*tz.spec));
  EXPECT_TRUE(is_mrd(build_h_code(*tz.spec)));

  auto tz2 = preset(Field::create(2, 1, 4), Family::TZ, PresetParams{});
  EXPECT_FALSE(tz2.ok());

  // Norms into F_2 are always 1, so AGTG needs odd p.
  EXPECT_FALSE(preset(Field::create(2, 2, 3), Family::AGTG, PresetParams{1, 1, 1, std::nullopt, std::nullopt}).ok());
  auto F9 = Field::create(3, 2, 2);
  auto agtg = preset(F9, Family::AGTG, PresetParams{1, 1, 1, std::nullopt, std::nullopt});
  ASSERT_TRUE(agtg.ok());
  EXPECT_FALSE(build_h_code(*agtg.spec).is_fq_linear());
  EXPECT_TRUE(mrd_norm_criterion(*agtg.spec));
  EXPECT_TRUE(is_mrd(build_h_code(*agtg.spec)));
}

TEST(Code, EveryAcceptedPresetPassesCriterion) {
  struct FieldCase { std::uint32_t p; int lambda, n; };
  int accepted = 0;
  for (auto fc : {FieldCase{3, 1, 4}, FieldCase{2, 2, 3}, FieldCase{3, 1, 3}, FieldCase{2, 1, 4},
                  FieldCase{5, 1, 2}, FieldCase{2, 2, 2}}) {
    auto F = Field::create(fc.p, fc.lambda, fc.n);
    for (Family fam : {Family::TG, Family::GTG, Family::AGTG, Family::TZ})
      for (int k = 1; k < fc.n; ++k)
        for (int h = 1; h < fc.n; ++h)
          for (std::uint32_t u = 0; u < F->order(); u += 1 + F->order() / 12) {
            auto r = preset(F, fam, PresetParams{k, 1, h, F->exp(u), std::nullopt});
            if (!r.ok()) continue;
            ++accepted;
            ASSERT_TRUE(mrd_norm_criterion(*r.spec)) << to_string(fam) << " k=" << k << " h=" << h << " u=" << u;
          }
  }
  EXPECT_GT(accepted, 50);
}

TEST(Code, CriterionImpliesMrd) {
  std::mt19937_64 rng(43);
  int positives = 0;
  for (auto F : {Field::create(2, 1, 4), Field::create(3, 1, 3), Field::create(2, 1, 5)}) {
    const int n = F->n();
    for (int rep = 0; rep < 12; ++rep) {
      const int k = 2 + rep % 2;
      if (k >= n) continue;
      std::vector<Elem> c2(F->degree());
      c2[1 + rng() % (n - 1)] = oracle::random_elem(*F, rng);
      if (rep % 3 == 0) c2[rng() % n] = oracle::random_elem(*F, rng);
      const CodeSpec sp = h_spec(F, k, 1, AdditiveMap::identity(F), AdditiveMap(F, c2));
      if (c2 == std::vector<Elem>(F->degree())) continue;
      if (!mrd_norm_criterion(sp)) continue;
      ++positives;
      EXPECT_TRUE(is_mrd(build_h_code(sp)));
    }
  }
  EXPECT_GT(positives, 0);
}

TEST(Code, CriterionExamples) {
  auto F = Field::create(3, 1, 4);
  auto id = AdditiveMap::identity(F);
  EXPECT_FALSE(mrd_norm_criterion(h_spec(F, 2, 1, id, id)));
}

TEST(Code, Proportionality) {
  auto F = Field::create(3, 1, 4);
  auto id = AdditiveMap::identity(F);
  auto r1 = proportionality_class(h_spec(F, 2, 1, id, id));
  EXPECT_EQ(r1.cls, Proportionality::PROP);
  EXPECT_EQ(*r1.gamma, Field::one());
  EXPECT_EQ(proportionality_class(h_spec(F, 2, 1, id, q_mono(F, F->exp(2), 1))).cls, Proportionality::NONE);
  EXPECT_EQ(proportionality_class(h_spec(F, 2, 1, id, q_mono(F, F->exp(2), 2))).cls, Proportionality::NONE);
  auto r3 = proportionality_class(h_spec(F, 2, 1, q_mono(F, Field::one(), 1), id));
  EXPECT_EQ(r3.cls, Proportionality::PROP_TWIST);
  EXPECT_EQ(*r3.gamma, Field::one());
  // L2 = eta x^{q^{n-s}} is the twisted-proportional boundary.
  EXPECT_EQ(proportionality_class(h_spec(F, 2, 1, id, q_mono(F, F->exp(5), 3))).cls,
            Proportionality::PROP_TWIST);
}

TEST(Code, FamilyNames) {
  for (Family f : {Family::GAB, Family::TG, Family::GTG, Family::AGTG, Family::TZ, Family::CUSTOM})
    EXPECT_EQ(family_from_string(to_string(f)), f);
  EXPECT_THROW(family_from_string("XYZ"), PreconditionError);
}
