#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "rankmetric/errors.hpp"
#include "rankmetric/linpoly.hpp"
#include "rankmetric/numtheory.hpp"

using namespace rankmetric;

namespace {

std::vector<FieldPtr> small_fields() {
  return {Field::create(2, 1, 4), Field::create(3, 1, 4), Field::create(2, 2, 3), Field::create(2, 1, 5)};
}

LinPoly x_power(const FieldPtr& F, int i) { return LinPoly::monomial(F, Field::one(), i); }

}  // namespace

TEST(LinPoly, EvaluateBasics) {
  auto F = Field::create(2, 1, 4);
  const Elem g = F->generator();
  EXPECT_EQ(LinPoly::identity(F)(g), g);
  EXPECT_EQ(LinPoly(F)(g), Field::zero());
  EXPECT_EQ(x_power(F, 1)(g), F->mul(g, g));
  std::mt19937_64 rng(7);
  for (auto G : small_fields())
    for (int rep = 0; rep < 20; ++rep) {
      const LinPoly f = oracle::random_linpoly(G, rng);
      const Elem x = oracle::random_elem(*G, rng);
      EXPECT_EQ(f(x), oracle::eval(f, x));
    }
}

TEST(LinPoly, AdditiveMapEvaluateAndEmbedding) {
  std::mt19937_64 rng(11);
  for (auto F : small_fields()) {
    std::vector<Elem> pc(F->degree());
    for (auto& c : pc) c = oracle::random_elem(*F, rng);
    const AdditiveMap m(F, pc);
    for (std::uint32_t a = 0; a < F->size(); a += 3) {
      Elem acc{0};
      for (int j = 0; j < F->degree(); ++j)
        acc = oracle::add(*F, acc, oracle::mul(*F, pc[j], F->frobenius(Elem{a}, j)));
      ASSERT_EQ(m(Elem{a}), acc);
    }
    const LinPoly f = oracle::random_linpoly(F, rng);
    const AdditiveMap e = AdditiveMap::from_linpoly(f);
    EXPECT_TRUE(e.is_q_linear());
    EXPECT_EQ(*e.to_linpoly(), f);
    for (std::uint32_t a = 0; a < F->size(); a += 5) EXPECT_EQ(e(Elem{a}), f(Elem{a}));
    const AdditiveMap back = AdditiveMap::from_images(F, m.basis_images());
    EXPECT_EQ(back, m);
  }
}

TEST(LinPoly, ComposeMatchesPointwise) {
  std::mt19937_64 rng(3);
  for (auto F : small_fields()) {
    const int n = F->n();
    for (int rep = 0; rep < 10; ++rep) {
      const LinPoly f = oracle::random_linpoly(F, rng), g = oracle::random_linpoly(F, rng),
                    h = oracle::random_linpoly(F, rng);
      const LinPoly fg = compose(f, g);
      for (std::uint32_t a = 0; a < F->size(); a += 7) ASSERT_EQ(fg(Elem{a}), f(g(Elem{a})));
      EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
      EXPECT_EQ(compose(LinPoly::identity(F), f), f);
      EXPECT_EQ(compose(f, LinPoly::identity(F)), f);
    }
    EXPECT_EQ(compose(x_power(F, 1), x_power(F, n - 1)), LinPoly::identity(F));
    const Elem a = F->exp(5), b = F->exp(9);
    EXPECT_EQ(compose(LinPoly::monomial(F, a, 1), LinPoly::monomial(F, b, 1)),
              LinPoly::monomial(F, F->mul(a, F->frobenius_q(b, 1)), 2));
  }
}

TEST(LinPoly, AdditiveCompose) {
  std::mt19937_64 rng(5);
  auto F = Field::create(2, 2, 3);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<Elem> a(F->degree()), b(F->degree());
    for (auto& c : a) c = oracle::random_elem(*F, rng);
    for (auto& c : b) c = oracle::random_elem(*F, rng);
    const AdditiveMap f(F, a), g(F, b);
    const AdditiveMap fg = compose(f, g);
    for (std::uint32_t x = 0; x < F->size(); ++x) ASSERT_EQ(fg(Elem{x}), f(g(Elem{x})));
  }
}

TEST(LinPoly, RankMatchesKernelCount) {
  std::mt19937_64 rng(13);
  for (auto F : small_fields()) {
    const int n = F->n();
    EXPECT_EQ(rank(LinPoly::identity(F)), n);
    EXPECT_EQ(rank(LinPoly(F)), 0);
    const LinPoly frob_minus_id = x_power(F, 1) - LinPoly::identity(F);
    EXPECT_EQ(rank(frob_minus_id), n - 1);
    const auto ker = kernel(frob_minus_id);
    ASSERT_EQ(ker.size(), 1u);
    EXPECT_TRUE(F->in_subfield(ker[0], F->lambda()));
    for (int rep = 0; rep < 15; ++rep) {
      // Sparse polynomials reach every rank.
      LinPoly f(F);
      for (int i = 0; i < n; ++i)
        if (rng() % 2) f.set_coeff(i, oracle::random_elem(*F, rng));
      const int r = rank(f);
      ASSERT_EQ(r, oracle::rank(f));
      const auto kb = kernel(f);
      EXPECT_EQ(static_cast<int>(kb.size()) + r, n);
      for (Elem k : kb) EXPECT_EQ(f(k), Field::zero());
    }
  }
}

TEST(LinPoly, MatrixOf) {
  auto F = Field::create(3, 1, 4);
  const FqMatrix I = matrix_of(LinPoly::identity(F));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) EXPECT_EQ(I.at(r, c), r == c ? Field::one() : Field::zero());
  const FqMatrix Z = matrix_of(LinPoly(F));
  for (Elem e : Z.entries) EXPECT_EQ(e, Field::zero());
  // Columns reconstruct f(y^i) from the F_q basis.
  std::mt19937_64 rng(2);
  auto G = Field::create(2, 2, 3);
  const LinPoly f = oracle::random_linpoly(G, rng);
  const FqMatrix M = matrix_of(f);
  const auto B = fq_basis(*G);
  for (int c = 0; c < 3; ++c) {
    Elem acc{0};
    for (int r = 0; r < 3; ++r) {
      EXPECT_TRUE(G->in_subfield(M.at(r, c), G->lambda()));
      acc = G->add(acc, G->mul(M.at(r, c), B[r]));
    }
    EXPECT_EQ(acc, f(B[c]));
  }
}

TEST(LinPoly, NoNonzeroPolynomialVanishesOnABasis) {
  std::mt19937_64 rng(17);
  for (auto F : {Field::create(2, 1, 4), Field::create(3, 1, 4)}) {
    const auto B = fq_basis(*F);
    for (int rep = 0; rep < 200; ++rep) {
      const LinPoly f = oracle::random_linpoly(F, rng);
      bool vanishes = true;
      for (Elem b : B) vanishes = vanishes && f(b) == Field::zero();
      EXPECT_EQ(vanishes, f.is_zero());
    }
  }
}

TEST(LinPoly, AdjointPairing) {
  std::mt19937_64 rng(19);
  for (auto F : {Field::create(2, 1, 4), Field::create(2, 1, 5), Field::create(2, 2, 3)}) {
    const int n = F->n();
    const int lam = F->lambda();
    for (int s = 1; s < n; ++s) {
      if (std::gcd(s, n) != 1) {
        EXPECT_THROW(adjoint(LinPoly::identity(F), s), PreconditionError);
        continue;
      }
      const LinPoly L = oracle::random_linpoly(F, rng);
      const LinPoly Lh = adjoint(L, s);
      for (std::uint32_t a = 0; a < F->size(); ++a)
        for (std::uint32_t b = 0; b < F->size(); ++b)
          ASSERT_EQ(F->trace_rel(F->mul(Elem{b}, L(Elem{a})), lam),
                    F->trace_rel(F->mul(Elem{a}, Lh(Elem{b})), lam));
      EXPECT_EQ(adjoint(Lh, s), L);
      EXPECT_EQ(adjoint(LinPoly::identity(F), s), LinPoly::identity(F));
      // a x^{q^s}  ->  a^{q^{s(n-1)}} x^{q^{s(n-1)}}
      const Elem a = F->exp(7);
      EXPECT_EQ(adjoint(LinPoly::monomial(F, a, s), s),
                LinPoly::monomial(F, F->frobenius_q(a, s * (n - 1)), s * (n - 1)));
    }
  }
}

TEST(LinPoly, AdjointAntiHomomorphism) {
  std::mt19937_64 rng(23);
  for (auto F : small_fields())
    for (int rep = 0; rep < 20; ++rep) {
      const LinPoly f = oracle::random_linpoly(F, rng), g = oracle::random_linpoly(F, rng);
      EXPECT_EQ(adjoint(compose(f, g), 1), compose(adjoint(g, 1), adjoint(f, 1)));
      EXPECT_EQ(rank(adjoint(f, 1)), rank(f));
    }
}

TEST(LinPoly, RhoTwist) {
  std::mt19937_64 rng(29);
  for (auto F : small_fields()) {
    const LinPoly f = oracle::random_linpoly(F, rng), g = oracle::random_linpoly(F, rng);
    EXPECT_EQ(rho_twist(f, 0), f);
    LinPoly t = f;
    for (int i = 0; i < F->degree(); ++i) t = rho_twist(t, 1);
    EXPECT_EQ(t, f);
    EXPECT_EQ(rho_twist(f + g, 2), rho_twist(f, 2) + rho_twist(g, 2));
    const Elem a = F->exp(3);
    EXPECT_EQ(rho_twist(LinPoly::monomial(F, a, 0), 1), LinPoly::monomial(F, F->frobenius(a, 1), 0));
  }
}

TEST(LinPoly, RankInvariantUnderInvertibleMaps) {
  std::mt19937_64 rng(31);
  auto F = Field::create(3, 1, 4);
  auto random_invertible = [&] {
    for (;;) {
      LinPoly f = oracle::random_linpoly(F, rng);
      if (rank(f) == F->n()) return f;
    }
  };
  for (int rep = 0; rep < 20; ++rep) {
    LinPoly f(F);
    f.set_coeff(0, oracle::random_elem(*F, rng));
    f.set_coeff(2, oracle::random_elem(*F, rng));
    const LinPoly p1 = random_invertible(), p2 = random_invertible();
    EXPECT_EQ(rank(compose(p1, compose(f, p2))), rank(f));
  }
}

TEST(LinPoly, NormRelationForRankDeficientBinomials) {
  // f = a_0 x + ... + a_k x^{q^{sk}} of rank n-k forces N(a_k) = (-1)^{kn} N(a_0).
  for (auto F : {Field::create(2, 1, 4), Field::create(3, 1, 4)}) {
    const int n = F->n();
    const int lam = F->lambda();
    for (int k = 1; k <= 2; ++k) {
      const Elem sign = (k * n) % 2 ? F->minus_one() : Field::one();
      std::uint64_t checked = 0;
      const std::uint64_t total = nt::ipow(F->size(), k + 1);
      for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        LinPoly f(F);
        for (int i = 0; i <= k; ++i) {
          f.set_coeff(i, Elem{static_cast<std::uint32_t>(c % F->size())});
          c /= F->size();
        }
        if (f.coeff(0).v == 0 || f.coeff(k).v == 0) continue;
        if (rank(f) != n - k) continue;
        ++checked;
        ASSERT_EQ(F->norm_rel(f.coeff(k), lam), F->mul(sign, F->norm_rel(f.coeff(0), lam)));
      }
      EXPECT_GT(checked, 0u);
    }
  }
}

TEST(LinPoly, FactorThrough) {
  auto F = Field::create(2, 1, 4);
  const int n = F->n();
  const AdditiveMap id = AdditiveMap::identity(F);
  const AdditiveMap frob = AdditiveMap::monomial(F, Field::one(), 1);
  // factor_through(x^q, x) = x^{q^{n-1}}
  auto T = factor_through(frob, id);
  ASSERT_TRUE(T.has_value());
  EXPECT_EQ(*T, AdditiveMap::monomial(F, Field::one(), n - 1));
  auto self = factor_through(frob, frob);
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(compose(frob, *self), frob);
  // The trace map has image F_q, so it cannot factor the identity.
  std::vector<Elem> tr(F->degree(), Field::zero());
  for (int i = 0; i < n; ++i) tr[i * F->lambda()] = Field::one();
  EXPECT_FALSE(factor_through(AdditiveMap(F, tr), id).has_value());

  // Random degenerate pairs with equal image.
  std::mt19937_64 rng(37);
  for (auto G : {Field::create(3, 1, 3), Field::create(2, 2, 3)}) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<Elem> pc(G->degree());
      for (auto& c : pc) c = oracle::random_elem(*G, rng);
      pc[0] = Field::zero();
      if (rep % 2) pc.assign(G->degree(), Field::zero()), pc[1] = G->exp(rep), pc[2] = G->exp(2 * rep + 1);
      const AdditiveMap L(G, pc);
      std::vector<Elem> perm(G->degree());
      AdditiveMap S(G);
      do {
        for (auto& c : perm) c = oracle::random_elem(*G, rng);
        S = AdditiveMap(G, perm);
      } while (fp_rank(S) != G->degree());
      const AdditiveMap M = compose(L, S);
      auto U = factor_through(L, M);
      ASSERT_TRUE(U.has_value());
      EXPECT_EQ(fp_rank(*U), G->degree());
      EXPECT_EQ(compose(L, *U), M);
    }
  }
}
