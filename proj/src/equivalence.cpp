#include "rankmetric/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rankmetric/errors.hpp"
#include "rankmetric/numtheory.hpp"

namespace rankmetric {

// ------------------------------------------------------------------ Gamma

namespace {

void check_gamma_domain(int n, int r, int s, int k) {
  require(n >= 4, "n >= 4");
  require(r >= 1 && r < n && s >= 1 && s < n, "1 <= r, s < n");
  require(std::gcd(n, r) == 1 && std::gcd(n, s) == 1, "gcd(n, r) = gcd(n, s) = 1");
  require(k >= 2 && k <= n - 2, "2 <= k <= n-2");
}

GammaSet table_row(int n, int r, int s, int k) {
  auto m = [n](std::int64_t v) { return static_cast<int>(nt::mod(v, n)); };
  auto eq = [&](std::int64_t a, std::int64_t b) { return m(a) == m(b); };
  std::set<int> excluded;
  std::string rule;
  if (r == s) {
    excluded = {m(-s), 0, m(s)};
    rule = "r = s";
  } else if (r == n - s) {
    excluded = {m(-s * (k - 1)), m(-s * k), m(-s * (k + 1))};
    rule = "r = n-s";
  } else if (k + 1 == n - 3 && eq(r, 2 * s)) {
    excluded = {m(-2 * s)};
    rule = "k+1 = n-3, r = 2s";
  } else if (k + 1 == n - 3 && eq(r, -2 * s)) {
    excluded = {m(6 * s)};
    rule = "k+1 = n-3, r = -2s";
  } else if (k + 1 == n - 2 && eq(r, 2 * s)) {
    excluded = {m(-s), m(-2 * s)};
    rule = "k+1 = n-2, r = 2s";
  } else if (k + 1 == n - 2 && eq(r, -2 * s)) {
    excluded = {m(5 * s), m(4 * s)};
    rule = "k+1 = n-2, r = -2s";
  } else if (k + 1 == n - 2 && eq(r, 3 * s)) {
    excluded = {m(-3 * s)};
    rule = "k+1 = n-2, r = 3s";
  } else if (k + 1 == n - 2 && eq(r, -3 * s)) {
    excluded = {m(6 * s)};
    rule = "k+1 = n-2, r = -3s";
  } else if (k + 1 == n - 1) {
    excluded = {m(-r), m(-r + s), m(-r + 2 * s)};
    rule = "k+1 = n-1";
  } else {
    rule = "otherwise";
  }
  GammaSet g{n, r, s, k, {}, rule};
  for (int x = 0; x < n; ++x)
    if (!excluded.count(x)) g.members.push_back(x);
  return g;
}

}  // namespace

GammaSet gamma_enumerate(int n, int r, int s, int k) {
  check_gamma_domain(n, r, s, k);
  std::set<int> acc;
  for (int i = 1; i <= k - 1; ++i)
    for (int t = k + 1; t <= n - 1; ++t) acc.insert(static_cast<int>(nt::mod(static_cast<std::int64_t>(t) * r - i * s, n)));
  return GammaSet{n, r, s, k, {acc.begin(), acc.end()}, "enumeration"};
}

GammaSet gamma_closed_form(int n, int r, int s, int k) {
  check_gamma_domain(n, r, s, k);
  if (2 * k >= n) return table_row(n, r, s, k);
  GammaSet g = table_row(n, s, r, n - k);
  g.r = r;
  g.s = s;
  g.k = k;
  g.rule = "mirror of " + g.rule + " (r<->s, k->n-k)";
  return g;
}

// ------------------------------------------------------------------ maps

EquivMap identity_map(const FieldPtr& field) {
  return EquivMap{LinPoly::identity(field), LinPoly::identity(field), 0};
}

LinPoly apply_equiv(const EquivMap& map, const LinPoly& f) {
  return compose(map.phi1, compose(rho_twist(f, map.nu), map.phi2));
}

Code apply_equiv(const EquivMap& map, const Code& code) {
  const int n = code.field().n();
  require(rank(map.phi1) == n && rank(map.phi2) == n, "equivalence maps must be invertible");
  std::vector<LinPoly> gens;
  gens.reserve(code.basis().size());
  for (const auto& f : code.basis()) gens.push_back(apply_equiv(map, f));
  return Code::from_generators(code.field_ptr(), gens);
}

EquivMap compose_maps(const EquivMap& first, const EquivMap& second) {
  // first(second(f)) = A1 o (A2 o f^r2 o B2)^r1 o B1 = (A1 o A2^r1) o f^{r1 r2} o (B2^r1 o B1)
  const int D = first.phi1.field().degree();
  return EquivMap{compose(first.phi1, rho_twist(second.phi1, first.nu)),
                  compose(rho_twist(second.phi2, first.nu), first.phi2),
                  static_cast<int>((first.nu + second.nu) % D)};
}

bool is_monomial(const LinPoly& f) { return f.support().size() == 1; }

// ------------------------------------------------------------ closed form

namespace {

void check_closed_form_pre(const CodeSpec& A, const CodeSpec& B) {
  A.validate();
  B.validate();
  require(A.field->same_as(*B.field), "field mismatch");
  const int n = A.field->n();
  require(n >= 4, "n >= 4");
  require(A.k == B.k, "same k");
  require(A.k >= 2 && A.k <= n - 2, "2 <= k <= n-2");
  require(proportionality_class(A).cls == Proportionality::NONE &&
              proportionality_class(B).cls == Proportionality::NONE,
          "both specs must have proportionality class NONE");
  const auto sa = nt::mod(A.s, n), sb = nt::mod(B.s, n);
  require(sa == sb || sa == nt::mod(-sb, n), "s_B = s_A or s_B = n - s_A");
}

void charge(std::uint64_t& used, std::uint64_t amount, std::uint64_t budget) {
  used += amount;
  if (used > budget) throw BudgetError("equivalence search exceeds the configured budget");
}

// Coordinates of the pair (x, y) in F_p^{2D}.
FpVec pair_coords(const Field& F, Elem x, Elem y) {
  const int D = F.degree();
  FpVec v(2 * static_cast<std::size_t>(D));
  for (int t = 0; t < D; ++t) {
    v[t] = F.digit(x, t);
    v[D + t] = F.digit(y, t);
  }
  return v;
}

FpMatrix pair_matrix(const Field& F, const std::vector<Elem>& xs, const std::vector<Elem>& ys) {
  const int D = F.degree();
  FpMatrix m(F.p(), 2 * static_cast<std::size_t>(D), static_cast<std::size_t>(D));
  for (int j = 0; j < D; ++j) {
    const FpVec c = pair_coords(F, xs[j], ys[j]);
    for (int r = 0; r < 2 * D; ++r) m.at(r, j) = c[r];
  }
  return m;
}

}  // namespace

std::vector<ClosedFormWitness> equiv_closed_form_all(const CodeSpec& A, const CodeSpec& B, bool all_witnesses,
                                                     std::uint64_t budget) {
  check_closed_form_pre(A, B);
  const FieldPtr& Fp = A.field;
  const Field& F = *Fp;
  const int n = F.n();
  const int D = F.degree();
  const int lam = F.lambda();
  const int sk = static_cast<int>(nt::mod(static_cast<std::int64_t>(A.s) * A.k, n));
  const bool swapped = nt::mod(A.s, n) != nt::mod(B.s, n);

  const auto u = A.L1.basis_images();
  const auto v = A.L2.basis_images();
  const auto mu1 = B.L1.basis_images();
  const auto mu2 = B.L2.basis_images();

  FpSubspace WA(F.p(), 2 * D), WB(F.p(), 2 * D);
  for (int j = 0; j < D; ++j) {
    WA.insert(pair_coords(F, u[j], v[j]));
    WB.insert(pair_coords(F, mu1[j], mu2[j]));
  }
  std::vector<ClosedFormWitness> out;
  if (WA.dim() != WB.dim()) return out;

  std::uint64_t used = 0;
  std::vector<Elem> us(D), vs(D);
  for (std::uint32_t ia = 0; ia < F.order(); ++ia) {
    const Elem a = F.exp(ia);
    for (std::uint32_t ib = 0; ib < F.order(); ++ib) {
      const Elem b = F.exp(ib);
      // Multipliers of the two tied slots, already placed in B's slot order.
      // same branch:    slot 0 <- a b L1^sigma,          slot k <- a b^{q^{sk}} L2^sigma
      // swapped branch: slot 0 <- a b L2^sigma,          slot k <- a b^{q^{-sk}} L1^sigma
      const Elem c0 = F.mul(a, b);
      const Elem ck = F.mul(a, F.frobenius_q(b, swapped ? -sk : sk));
      for (int l = 0; l < n; ++l) {
        const int m = swapped ? static_cast<int>(nt::mod(l - sk, n)) : l;
        for (int nu = 0; nu < D; ++nu) {
          charge(used, 1, budget);
          const int e = (nu + lam * m) % D;
          bool ok = true;
          for (int j = 0; j < D && ok; ++j) {
            const Elem x = F.frobenius(swapped ? v[j] : u[j], e);
            const Elem y = F.frobenius(swapped ? u[j] : v[j], e);
            us[j] = F.mul(c0, x);
            vs[j] = F.mul(ck, y);
            ok = WB.contains(pair_coords(F, us[j], vs[j]));
          }
          if (!ok) continue;

          ClosedFormWitness w{EquivMap{LinPoly::monomial(Fp, a, m),
                                       LinPoly::monomial(Fp, F.frobenius_q(b, n - l), n - l), nu},
                              a, b, l, nu, swapped, AdditiveMap(Fp)};
          auto T = factor_through(pair_matrix(F, us, vs), pair_matrix(F, mu1, mu2));
          if (!T) throw std::logic_error("closed form: no bijective T although images agree");
          std::vector<Elem> images(D);
          for (int j = 0; j < D; ++j) {
            Elem acc{0};
            for (int i = 0; i < D; ++i) acc = F.add(acc, F.mul(F.scalar(T->at(i, j)), F.basis(i)));
            images[j] = acc;
          }
          w.T = AdditiveMap::from_images(Fp, images);
          // Witness is checked by applying it to the code.
          if (!(apply_equiv(w.map, build_h_code(A)) == build_h_code(B)))
            throw std::logic_error("closed form witness failed verification");
          out.push_back(std::move(w));
          if (!all_witnesses) return out;
        }
      }
    }
  }
  return out;
}

std::optional<ClosedFormWitness> equiv_closed_form(const CodeSpec& A, const CodeSpec& B, std::uint64_t budget) {
  auto all = equiv_closed_form_all(A, B, false, budget);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

CodeSpec normal_form_image(const CodeSpec& A, Elem a, Elem b, int l, int nu) {
  A.validate();
  require(A.has_identity_l1(), "normal-form image requires L1 = x");
  require(a.v != 0 && b.v != 0, "a, b nonzero");
  const FieldPtr& Fp = A.field;
  const Field& F = *Fp;
  const int n = F.n();
  const int D = F.degree();
  const int sk = static_cast<int>(nt::mod(static_cast<std::int64_t>(A.s) * A.k, n));
  l = static_cast<int>(nt::mod(l, n));
  nu = static_cast<int>(nt::mod(nu, D));
  const int e = (nu + F.lambda() * l) % D;  // rho q^l
  const int e_inv = (D - e) % D;            // p^{lambda n - nu} q^{n-l}
  const Elem c = F.mul(a, F.frobenius_q(b, l));
  // T(x) = (x / c)^{p^{e_inv}}
  const AdditiveMap T = AdditiveMap::monomial(Fp, F.frobenius(F.inv(c), e_inv), e_inv);
  const AdditiveMap outer = AdditiveMap::monomial(Fp, Field::one(), e);
  const Elem K = F.mul(a, F.frobenius_q(b, sk + l));
  const AdditiveMap M = compose(outer, compose(A.L2, T)).scaled(K);
  return CodeSpec{Fp, A.k, A.s, AdditiveMap::identity(Fp), M, Family::CUSTOM};
}

// ---------------------------------------------------------- search oracles

namespace {

std::vector<int> code_support(const Code& c) {
  std::set<int> s;
  for (const auto& f : c.basis())
    for (int i : f.support()) s.insert(i);
  return {s.begin(), s.end()};
}

// Fast membership against a fixed parity-check matrix.
class Membership {
 public:
  explicit Membership(const Code& c) : p_(c.field().p()), rows_(c.parity_check()) {}
  bool contains(const FpVec& v) const {
    for (const auto& h : rows_)
      if (fp_dot(h, v, p_) != 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
  const std::vector<FpVec>& rows_;
};

}  // namespace

std::vector<EquivMap> monomial_equiv_search_all(const Code& A, const Code& B, bool all_witnesses,
                                                std::uint64_t budget) {
  require(A.field().same_as(B.field()), "field mismatch");
  const FieldPtr& Fp = A.field_ptr();
  const Field& F = *Fp;
  const int n = F.n();
  const int D = F.degree();
  std::vector<EquivMap> out;
  if (A.dimension() != B.dimension()) return out;

  const auto SA = code_support(A);
  const auto SB = code_support(B);
  if (SA.size() != SB.size()) return out;
  std::vector<int> shifts;
  for (int t = 0; t < n; ++t) {
    std::vector<int> moved;
    for (int i : SA) moved.push_back((i + t) % n);
    std::sort(moved.begin(), moved.end());
    if (moved == SB) shifts.push_back(t);
  }
  const Membership inB(B);
  std::uint64_t used = 0;
  LinPoly img(Fp);
  for (int t : shifts) {
    for (std::uint32_t ia = 0; ia < F.order(); ++ia) {
      const Elem alpha = F.exp(ia);
      for (std::uint32_t ib = 0; ib < F.order(); ++ib) {
        const Elem beta = F.exp(ib);
        for (int m = 0; m < n; ++m) {
          const int j = static_cast<int>(nt::mod(t - m, n));
          // multiplier for source index i: alpha beta^{q^{i+m}}
          std::vector<Elem> mult(n);
          for (int i = 0; i < n; ++i) mult[i] = F.mul(alpha, F.frobenius_q(beta, i + m));
          for (int nu = 0; nu < D; ++nu) {
            charge(used, 1, budget);
            const int e = (nu + F.lambda() * m) % D;
            bool ok = true;
            for (const auto& f : A.basis()) {
              LinPoly g(Fp);
              for (int i : f.support()) g.set_coeff(i + t, F.mul(mult[i], F.frobenius(f.coeff(i), e)));
              if (!inB.contains(g.to_fp())) {
                ok = false;
                break;
              }
            }
            if (!ok) continue;
            EquivMap w{LinPoly::monomial(Fp, alpha, m), LinPoly::monomial(Fp, beta, j), nu};
            if (!(apply_equiv(w, A) == B)) throw std::logic_error("monomial witness failed verification");
            out.push_back(std::move(w));
            if (!all_witnesses) return out;
          }
        }
      }
    }
  }
  return out;
}

std::optional<EquivMap> monomial_equiv_search(const Code& A, const Code& B, std::uint64_t budget) {
  auto all = monomial_equiv_search_all(A, B, false, budget);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

std::vector<EquivMap> full_equiv_search_all(const Code& A, const Code& B, bool all_witnesses, std::uint64_t budget) {
  require(A.field().same_as(B.field()), "field mismatch");
  const FieldPtr& Fp = A.field_ptr();
  const Field& F = *Fp;
  const int n = F.n();
  const int D = F.degree();
  const std::size_t unknowns = static_cast<std::size_t>(D) * n;
  require(nt::ipow(F.p(), static_cast<unsigned>(unknowns)) <= (std::uint64_t{1} << 16),
          "full search is limited to q^{n^2} <= 2^16 candidate maps");
  std::vector<EquivMap> out;
  if (A.dimension() != B.dimension()) return out;

  const auto& parity = B.parity_check();
  const std::uint64_t total = nt::ipow(F.size(), n);
  std::uint64_t used = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    LinPoly phi2(Fp);
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i, c /= F.size()) phi2.set_coeff(i, Elem{static_cast<std::uint32_t>(c % F.size())});
    if (rank(phi2) != n) continue;
    for (int nu = 0; nu < D; ++nu) {
      charge(used, 1, budget);
      // h_j = f_j^rho o phi2; need phi1 o h_j in B.
      FpMatrix sys(F.p(), 0, unknowns);
      for (const auto& f : A.basis()) {
        const LinPoly h = compose(rho_twist(f, nu), phi2);
        std::vector<FpVec> cols(unknowns);
        for (int i = 0; i < n; ++i)
          for (int t = 0; t < D; ++t)
            cols[static_cast<std::size_t>(i) * D + t] = compose(LinPoly::monomial(Fp, F.basis(t), i), h).to_fp();
        for (const auto& row : parity) {
          FpVec r(unknowns);
          for (std::size_t u = 0; u < unknowns; ++u) r[u] = fp_dot(row, cols[u], F.p());
          sys.append_row(r);
        }
      }
      const auto basis = sys.nullspace();
      if (basis.empty()) continue;
      const std::uint64_t count = nt::ipow(F.p(), static_cast<unsigned>(basis.size()));
      charge(used, count, budget);
      std::vector<std::uint32_t> digits(basis.size(), 0);
      for (std::uint64_t idx = 1; idx < count; ++idx) {
        // next coefficient vector in base p
        for (std::size_t d = 0; d < digits.size(); ++d) {
          if (++digits[d] < F.p()) break;
          digits[d] = 0;
        }
        FpVec x(unknowns, 0);
        for (std::size_t d = 0; d < digits.size(); ++d)
          if (digits[d])
            for (std::size_t u = 0; u < unknowns; ++u) x[u] = (x[u] + digits[d] * basis[d][u]) % F.p();
        const LinPoly phi1 = LinPoly::from_fp(Fp, x);
        if (rank(phi1) != n) continue;
        out.push_back(EquivMap{phi1, phi2, nu});
        if (!all_witnesses) return out;
      }
    }
  }
  return out;
}

std::optional<EquivMap> full_equiv_search(const Code& A, const Code& B, std::uint64_t budget) {
  auto all = full_equiv_search_all(A, B, false, budget);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

}  // namespace rankmetric
