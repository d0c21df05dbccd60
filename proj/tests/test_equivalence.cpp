#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "rankmetric/equivalence.hpp"
#include "rankmetric/errors.hpp"

using namespace rankmetric;

namespace {

AdditiveMap q_poly(const FieldPtr& F, const std::vector<std::pair<int, Elem>>& terms) {
  AdditiveMap m(F);
  for (auto [i, a] : terms) m = m + AdditiveMap::monomial(F, a, i * F->lambda());
  return m;
}

CodeSpec hx(const FieldPtr& F, int k, int s, const AdditiveMap& L) {
  return CodeSpec{F, k, s, AdditiveMap::identity(F), L, Family::CUSTOM};
}

std::vector<int> amap_support(const AdditiveMap& m) {
  std::vector<int> out;
  for (int j = 0; j < m.degree(); ++j)
    if (m.coeff(j).v) out.push_back(j);
  return out;
}

// Random q-linearized L with one to three terms and proportionality NONE.
CodeSpec random_spec(const FieldPtr& F, int k, int s, std::mt19937_64& rng) {
  const int n = F->n();
  for (;;) {
    std::vector<std::pair<int, Elem>> terms;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int c = 0; c < count; ++c)
      terms.emplace_back(static_cast<int>(rng() % n), oracle::random_elem(*F, rng, true));
    const CodeSpec spec = hx(F, k, s, q_poly(F, terms));
    if (spec.L2.is_zero()) continue;
    if (proportionality_class(spec).cls == Proportionality::NONE) return spec;
  }
}

// Independent decision: every monomial map, compared as element sets.
bool brute_monomial_equivalent(const Code& A, const Code& B) {
  const FieldPtr& Fp = A.field_ptr();
  const Field& F = *Fp;
  const auto target = oracle::element_set(B);
  for (std::uint32_t ia = 0; ia < F.order(); ++ia)
    for (std::uint32_t ib = 0; ib < F.order(); ++ib)
      for (int m = 0; m < F.n(); ++m)
        for (int j = 0; j < F.n(); ++j)
          for (int nu = 0; nu < F.degree(); ++nu) {
            const EquivMap w{LinPoly::monomial(Fp, F.exp(ia), m), LinPoly::monomial(Fp, F.exp(ib), j), nu};
            if (oracle::element_set(apply_equiv(w, A)) == target) return true;
          }
  return false;
}

}  // namespace

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma_enumerate(6, 1, 1, 3).members, (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(gamma_closed_form(6, 1, 1, 3).members, (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(gamma_enumerate(6, 5, 1, 3).members, (std::vector<int>{0, 1, 5}));
  EXPECT_EQ(gamma_closed_form(6, 5, 1, 3).members, (std::vector<int>{0, 1, 5}));
  EXPECT_EQ(gamma_enumerate(5, 2, 1, 3).members, (std::vector<int>{1, 2}));
  EXPECT_EQ(gamma_closed_form(5, 2, 1, 3).members, (std::vector<int>{1, 2}));
}

TEST(Gamma, ClosedFormMatchesEnumerationSweep) {
  int cases = 0;
  for (int n = 4; n <= 14; ++n)
    for (int r = 1; r < n; ++r)
      for (int s = 1; s < n; ++s) {
        if (std::gcd(n, r) != 1 || std::gcd(n, s) != 1) continue;
        for (int k = 2; k <= n - 2; ++k) {
          ++cases;
          const auto e = gamma_enumerate(n, r, s, k);
          const auto c = gamma_closed_form(n, r, s, k);
          EXPECT_EQ(e.members, c.members) << "n=" << n << " r=" << r << " s=" << s << " k=" << k << " rule " << c.rule;
        }
      }
  EXPECT_GT(cases, 1000);
}

TEST(Gamma, RejectsOutOfRange) {
  EXPECT_THROW(gamma_enumerate(6, 2, 1, 3), PreconditionError);
  EXPECT_THROW(gamma_closed_form(6, 1, 1, 1), PreconditionError);
  EXPECT_THROW(gamma_closed_form(3, 1, 1, 1), PreconditionError);
}

TEST(Equivalence, ComposeMapsMatchesSequentialApplication) {
  auto F = Field::create(2, 2, 3);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const EquivMap a{oracle::random_linpoly(F, rng), oracle::random_linpoly(F, rng), static_cast<int>(rng() % 6)};
    const EquivMap b{oracle::random_linpoly(F, rng), oracle::random_linpoly(F, rng), static_cast<int>(rng() % 6)};
    const LinPoly f = oracle::random_linpoly(F, rng);
    EXPECT_EQ(apply_equiv(compose_maps(a, b), f), apply_equiv(a, apply_equiv(b, f)));
  }
}

TEST(Equivalence, SelfGivesIdentityWitnessFirst) {
  auto F = Field::create(2, 1, 5);
  auto g = F->exp(1);
  const CodeSpec A = hx(F, 2, 1, q_poly(F, {{1, g}, {3, F->exp(4)}}));
  ASSERT_EQ(proportionality_class(A).cls, Proportionality::NONE);
  const auto w = equiv_closed_form(A, A);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->a, Field::one());
  EXPECT_EQ(w->b, Field::one());
  EXPECT_EQ(w->l, 0);
  EXPECT_EQ(w->nu, 0);
  EXPECT_FALSE(w->swapped);
  EXPECT_EQ(w->map.phi1, LinPoly::identity(F));
  EXPECT_EQ(w->map.phi2, LinPoly::identity(F));
  EXPECT_EQ(w->T, AdditiveMap::identity(F));
}

TEST(Equivalence, ManufacturedPositive) {
  auto F = Field::create(3, 1, 5);
  const Elem g = F->exp(1);
  const CodeSpec A = hx(F, 2, 1, q_poly(F, {{1, g}, {3, Field::one()}}));
  const CodeSpec B = normal_form_image(A, g, F->mul(g, g), 1, 1);
  // The normal-form image is the image under (a x^{q^l}, b x^{q^{n-l}}, p^nu).
  const EquivMap direct{LinPoly::monomial(F, g, 1), LinPoly::monomial(F, F->mul(g, g), 4), 1};
  EXPECT_TRUE(apply_equiv(direct, build_h_code(A)) == build_h_code(B));
  EXPECT_EQ(amap_support(B.L2), amap_support(A.L2));
  const auto w = equiv_closed_form(A, B);
  ASSERT_TRUE(w);
  EXPECT_TRUE(apply_equiv(w->map, build_h_code(A)) == build_h_code(B));
  EXPECT_TRUE(monomial_equiv_search(build_h_code(A), build_h_code(B)));
}

TEST(Equivalence, NegativeExample) {
  auto F = Field::create(3, 1, 5);
  const Elem g = F->exp(1);
  const CodeSpec A = hx(F, 2, 1, q_poly(F, {{1, g}}));
  const CodeSpec B = hx(F, 2, 1, q_poly(F, {{2, g}}));
  EXPECT_TRUE(equiv_closed_form_all(A, B, true).empty());
  EXPECT_TRUE(monomial_equiv_search_all(build_h_code(A), build_h_code(B), true).empty());
}

TEST(Equivalence, NormalFormImagesAreDetected) {
  std::mt19937_64 rng(2024);
  for (auto [p, lam, n] : std::vector<std::array<int, 3>>{{2, 1, 4}, {2, 1, 5}, {3, 1, 4}, {2, 2, 4}}) {
    auto F = Field::create(p, lam, n);
    for (int trial = 0; trial < 4; ++trial) {
      int s = 1 + static_cast<int>(rng() % (n - 1));
      while (std::gcd(s, n) != 1) s = 1 + static_cast<int>(rng() % (n - 1));
      const int k = 2 + static_cast<int>(rng() % (n - 3));
      const CodeSpec A = random_spec(F, k, s, rng);
      const Elem a = oracle::random_elem(*F, rng, true), b = oracle::random_elem(*F, rng, true);
      const int l = static_cast<int>(rng() % n), nu = static_cast<int>(rng() % F->degree());
      const CodeSpec B = normal_form_image(A, a, b, l, nu);
      ASSERT_EQ(proportionality_class(B).cls, Proportionality::NONE);
      const auto w = equiv_closed_form(A, B);
      ASSERT_TRUE(w) << "p=" << p << " lambda=" << lam << " n=" << n;
      EXPECT_TRUE(apply_equiv(w->map, build_h_code(A)) == build_h_code(B));
      EXPECT_TRUE(monomial_equiv_search(build_h_code(A), build_h_code(B)));
    }
  }
}

TEST(Equivalence, SwappedBranch) {
  // H_{k,s}(L1, L2) = H_{k,n-s}(L2, L1) o x^{q^{sk}}.
  auto F = Field::create(2, 1, 5);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const CodeSpec A = random_spec(F, 2, 1, rng);
    const CodeSpec img = normal_form_image(A, oracle::random_elem(*F, rng, true), oracle::random_elem(*F, rng, true),
                                         static_cast<int>(rng() % 5), static_cast<int>(rng() % 5));
    const CodeSpec B{F, 2, 4, img.L2, img.L1, Family::CUSTOM};
    ASSERT_EQ(proportionality_class(B).cls, Proportionality::NONE);
    const auto w = equiv_closed_form(A, B);
    ASSERT_TRUE(w);
    EXPECT_TRUE(w->swapped);
    EXPECT_TRUE(apply_equiv(w->map, build_h_code(A)) == build_h_code(B));
  }
}

TEST(Equivalence, PerturbedNegativesAreRejected) {
  auto F = Field::create(2, 1, 5);
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 6; ++trial) {
    const CodeSpec A = random_spec(F, 2, 1, rng);
    const CodeSpec img = normal_form_image(A, oracle::random_elem(*F, rng, true), oracle::random_elem(*F, rng, true),
                                         static_cast<int>(rng() % 5), 0);
    // Add a term outside the support, so no monomial map can carry A to it.
    const auto supp = amap_support(A.L2);
    int extra = -1;
    for (int i = 0; i < 5 && extra < 0; ++i)
      if (std::find(supp.begin(), supp.end(), i) == supp.end()) extra = i;
    if (extra < 0) continue;
    CodeSpec B = img;
    B.L2 = B.L2 + q_poly(F, {{extra, Field::one()}});
    if (proportionality_class(B).cls != Proportionality::NONE) continue;
    ++checked;
    EXPECT_TRUE(equiv_closed_form_all(A, B, true).empty());
    EXPECT_TRUE(monomial_equiv_search_all(build_h_code(A), build_h_code(B), true).empty());
  }
  EXPECT_GE(checked, 3);
}

TEST(Equivalence, ClosedFormAgreesWithBruteForce) {
  auto F = Field::create(2, 1, 4);
  std::mt19937_64 rng(3);
  int positives = 0;
  for (int trial = 0; trial < 8; ++trial) {
    const CodeSpec A = random_spec(F, 2, 1, rng);
    CodeSpec B = random_spec(F, 2, 1, rng);
    if (trial % 2 == 0)
      B = normal_form_image(A, oracle::random_elem(*F, rng, true), oracle::random_elem(*F, rng, true),
                          static_cast<int>(rng() % 4), static_cast<int>(rng() % 4));
    const bool brute = brute_monomial_equivalent(build_h_code(A), build_h_code(B));
    positives += brute;
    EXPECT_EQ(equiv_closed_form(A, B).has_value(), brute) << "trial " << trial;
    EXPECT_EQ(monomial_equiv_search(build_h_code(A), build_h_code(B)).has_value(), brute) << "trial " << trial;
  }
  EXPECT_GE(positives, 4);
}

TEST(Equivalence, AllWitnessesAreDistinctAndValid) {
  auto F = Field::create(2, 1, 4);
  const CodeSpec A = hx(F, 2, 1, q_poly(F, {{1, F->exp(3)}}));
  const auto ws = equiv_closed_form_all(A, A, true);
  const auto ms = monomial_equiv_search_all(build_h_code(A), build_h_code(A), true);
  ASSERT_FALSE(ws.empty());
  // Both enumerate the monomial self-equivalences; closed-form triples are
  // a subset because they fix phi2 = b^{q^{n-l}} x^{q^{n-l}}.
  EXPECT_LE(ws.size(), ms.size());
  for (const auto& w : ws) EXPECT_TRUE(apply_equiv(w.map, build_h_code(A)) == build_h_code(A));
}

TEST(Equivalence, PreconditionsAreChecked) {
  auto F = Field::create(2, 1, 5);
  const CodeSpec A = hx(F, 2, 1, q_poly(F, {{1, F->exp(1)}}));
  EXPECT_THROW(equiv_closed_form(A, hx(F, 3, 1, A.L2)), PreconditionError);
  EXPECT_THROW(equiv_closed_form(A, hx(F, 2, 2, A.L2)), PreconditionError);
  EXPECT_THROW(equiv_closed_form(A, hx(F, 2, 1, AdditiveMap::monomial(F, F->exp(3), 0))), PreconditionError);
  EXPECT_THROW(equiv_closed_form(A, hx(F, 2, 1, q_poly(F, {{2, F->exp(1)}})), 10), BudgetError);
  auto G = Field::create(2, 1, 6);
  EXPECT_THROW(full_equiv_search(build_h_code(hx(G, 2, 1, q_poly(G, {{1, G->exp(1)}}))),
                                 build_h_code(hx(G, 2, 1, q_poly(G, {{1, G->exp(1)}})))),
               PreconditionError);
}

TEST(Equivalence, FullSearchFindsOnlyMonomialMaps) {
  auto F = Field::create(2, 1, 4);
  const CodeSpec A = hx(F, 2, 1, q_poly(F, {{1, F->exp(1)}, {3, Field::one()}}));
  ASSERT_EQ(proportionality_class(A).cls, Proportionality::NONE);
  const CodeSpec B = normal_form_image(A, F->exp(2), F->exp(5), 1, 0);
  const Code cA = build_h_code(A), cB = build_h_code(B);
  const auto all = full_equiv_search_all(cA, cB, true);
  ASSERT_FALSE(all.empty());
  for (const auto& w : all) {
    EXPECT_TRUE(is_monomial(w.phi1));
    EXPECT_TRUE(is_monomial(w.phi2));
    EXPECT_TRUE(apply_equiv(w, cA) == cB);
  }
  EXPECT_EQ(all.size(), monomial_equiv_search_all(cA, cB, true).size());
}
