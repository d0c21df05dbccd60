#include "rankmetric/automorphism.hpp"

#include <algorithm>
#include <numeric>

#include "rankmetric/errors.hpp"
#include "rankmetric/numtheory.hpp"

namespace rankmetric {

EquivMap AutTriple::to_map(const FieldPtr& field) const {
  const int n = field->n();
  return EquivMap{LinPoly::monomial(field, a, l), LinPoly::monomial(field, b, (n - l) % n), nu};
}

std::uint64_t kappa(const std::vector<int>& support, int q, int n) {
  require(support.size() >= 2, "|I| >= 2");
  std::int64_t g = n;
  for (std::size_t x = 0; x < support.size(); ++x)
    for (std::size_t y = 0; y < support.size(); ++y)
      if (support[x] > support[y]) g = std::gcd(g, static_cast<std::int64_t>(support[x] - support[y]));
  return nt::ipow(static_cast<std::uint64_t>(q), static_cast<unsigned>(g)) - 1;
}

namespace {

struct AutContext {
  const Field* F = nullptr;
  int n = 0, sk = 0;
  std::vector<int> I;
  std::vector<Elem> eta;  // eta_i for i in I
};

AutContext make_context(const CodeSpec& spec) {
  spec.validate();
  const Field& F = *spec.field;
  const int n = F.n();
  require(spec.k >= 2 && spec.k <= n - 2, "2 <= k <= n-2");
  require(spec.has_identity_l1(), "automorphisms are computed for H(x, L) only");
  const auto L = spec.L2.to_linpoly();
  require(L.has_value() && !L->is_zero(), "L must be a nonzero q-linearized polynomial");
  require(proportionality_class(spec).cls == Proportionality::NONE, "proportionality class must be NONE");
  AutContext ctx;
  ctx.F = &F;
  ctx.n = n;
  ctx.sk = static_cast<int>(nt::mod(static_cast<std::int64_t>(spec.s) * spec.k, n));
  for (int i = 0; i < n; ++i)
    if (L->coeff(i).v) {
      ctx.I.push_back(i);
      ctx.eta.push_back(L->coeff(i));
    }
  return ctx;
}

bool member(const AutContext& c, Elem a, Elem b, int l, int nu) {
  const Field& F = *c.F;
  const int e = nu + F.lambda() * l;
  const Elem base = F.mul(a, F.frobenius_q(b, l));         // a b^{q^l}
  const Elem den = F.mul(a, F.frobenius_q(b, l + c.sk));   // a b^{q^{l+sk}}
  for (std::size_t x = 0; x < c.I.size(); ++x) {
    const Elem lhs = F.mul(F.div(F.frobenius(c.eta[x], e), c.eta[x]), den);
    if (lhs != F.frobenius_q(base, c.I[x])) return false;
  }
  return true;
}

void check_budget(const Field& F, std::uint64_t budget) {
  const std::uint64_t N = F.order();
  if (N * N * F.n() * F.degree() > budget)
    throw BudgetError("automorphism enumeration exceeds the configured budget");
}

bool stabilises(const Code& code, const EquivMap& m) {
  const std::uint32_t p = code.field().p();
  for (const auto& f : code.basis()) {
    const FpVec v = apply_equiv(m, f).to_fp();
    for (const auto& h : code.parity_check())
      if (fp_dot(h, v, p) != 0) return false;
  }
  return true;
}

std::uint64_t field_d(const Field& F, int k) {
  const std::uint64_t q = nt::ipow(F.p(), F.lambda());
  return std::gcd(nt::ipow(q, k) - 1, static_cast<std::uint64_t>(F.order()));
}

// Extended Euclid: inverse of a modulo m when gcd(a, m) = 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t0 = 0, t1 = 1;
  std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(a % m);
  while (r1) {
    const std::int64_t qt = r0 / r1;
    std::tie(t0, t1) = std::make_pair(t1, t0 - qt * t1);
    std::tie(r0, r1) = std::make_pair(r1, r0 - qt * r1);
  }
  return static_cast<std::uint64_t>(nt::mod(t0, static_cast<std::int64_t>(m)));
}

}  // namespace

std::vector<int> aut_support(const CodeSpec& spec) { return make_context(spec).I; }

bool aut_membership(const CodeSpec& spec, const AutTriple& t) {
  const AutContext c = make_context(spec);
  require(t.a.v != 0 && t.b.v != 0, "a, b must be nonzero");
  require(t.l >= 0 && t.l < c.n && t.nu >= 0 && t.nu < c.F->degree(), "0 <= l < n, 0 <= nu < lambda n");
  return member(c, t.a, t.b, t.l, t.nu);
}

std::vector<AutTriple> aut_enumerate(const CodeSpec& spec, std::uint64_t budget) {
  const AutContext c = make_context(spec);
  const Field& F = *c.F;
  check_budget(F, budget);
  const Code code = build_h_code(spec);
  std::vector<AutTriple> out;
  for (std::uint32_t ia = 0; ia < F.order(); ++ia)
    for (std::uint32_t ib = 0; ib < F.order(); ++ib)
      for (int l = 0; l < c.n; ++l)
        for (int nu = 0; nu < F.degree(); ++nu) {
          const AutTriple t{F.exp(ia), F.exp(ib), l, nu};
          if (!member(c, t.a, t.b, l, nu)) continue;
          if (!(apply_equiv(t.to_map(spec.field), code) == code))
            throw std::logic_error("membership condition accepted a triple that moves the code");
          out.push_back(t);
        }
  return out;
}

std::vector<AutTriple> aut_brute(const CodeSpec& spec, std::uint64_t budget) {
  const AutContext c = make_context(spec);
  const Field& F = *c.F;
  check_budget(F, budget);
  const Code code = build_h_code(spec);
  std::vector<AutTriple> out;
  for (std::uint32_t ia = 0; ia < F.order(); ++ia)
    for (std::uint32_t ib = 0; ib < F.order(); ++ib)
      for (int l = 0; l < c.n; ++l)
        for (int nu = 0; nu < F.degree(); ++nu) {
          const AutTriple t{F.exp(ia), F.exp(ib), l, nu};
          if (stabilises(code, t.to_map(spec.field))) out.push_back(t);
        }
  return out;
}

std::vector<int> tau_admissible_divisors(const CodeSpec& spec, TauMethod method) {
  const AutContext c = make_context(spec);
  require(c.I.size() >= 2, "|I| >= 2");
  const Field& F = *c.F;
  const std::uint64_t N = F.order();
  const std::uint64_t d = field_d(F, spec.k);
  const std::uint64_t q = nt::ipow(F.p(), F.lambda());

  // eta_i^{p^m - 1}
  auto powered = [&](int m) {
    std::vector<Elem> v;
    for (auto e : c.eta) v.push_back(F.div(F.frobenius(e, m), e));
    return v;
  };
  // Given beta, alpha is forced by the last index; check the rest and chi_d.
  auto works = [&](const std::vector<Elem>& rhs, Elem beta) {
    const std::size_t j = 0;
    const Elem alpha = F.div(rhs[j], F.frobenius_q(beta, c.I[j]));
    for (std::size_t x = 0; x < c.I.size(); ++x)
      if (F.mul(alpha, F.frobenius_q(beta, c.I[x])) != rhs[x]) return false;
    return F.chi_is_trivial(F.mul(alpha, beta), d);
  };

  std::vector<int> out;
  for (auto m64 : nt::divisors(static_cast<std::uint64_t>(F.degree()))) {
    const int m = static_cast<int>(m64);
    const auto rhs = powered(m);
    bool ok = false;
    if (method == TauMethod::Scan) {
      for (std::uint32_t ib = 0; ib < N && !ok; ++ib) ok = works(rhs, F.exp(ib));
    } else {
      // beta^{q^i - q^j} = rhs_i / rhs_j for i = max I, j = min I, solved on logarithms.
      const std::size_t i = c.I.size() - 1, j = 0;
      const std::uint64_t coef =
          (nt::powmod(q, c.I[i], N) + N - nt::powmod(q, c.I[j], N)) % N;
      const std::uint64_t r = F.dlog(F.div(rhs[i], rhs[j]));
      const std::uint64_t g = std::gcd(coef, N);
      if (r % g == 0) {
        const std::uint64_t Ng = N / g;
        const std::uint64_t x0 = Ng == 1 ? 0 : (r / g) % Ng * inv_mod(coef / g % Ng, Ng) % Ng;
        for (std::uint64_t t = 0; t < g && !ok; ++t) ok = works(rhs, F.exp(static_cast<std::int64_t>(x0 + t * Ng)));
      }
    }
    if (ok) out.push_back(m);
  }
  return out;
}

int tau_general(const CodeSpec& spec, TauMethod method) {
  const auto ms = tau_admissible_divisors(spec, method);
  if (ms.empty()) throw std::logic_error("lambda n is always admissible");
  return ms.front();
}

AutOrderReport aut_order_closed_form(const CodeSpec& spec) {
  const AutContext c = make_context(spec);
  require(c.I.size() >= 2, "|I| >= 2; use the monomial formula for |I| = 1");
  const Field& F = *c.F;
  const std::uint64_t N = F.order();
  const std::uint64_t q = nt::ipow(F.p(), F.lambda());
  AutOrderReport rep;
  rep.d = field_d(F, spec.k);
  rep.kappa = std::gcd(kappa(c.I, static_cast<int>(q), c.n), N / rep.d);
  rep.tau = tau_general(spec);
  const std::uint64_t ln2 = static_cast<std::uint64_t>(F.lambda()) * c.n * c.n;
  rep.order = rep.kappa * rep.d * ln2 / rep.tau;
  rep.boundary = spec.k == 2 || spec.k == c.n - 2;
  rep.formula = "kappa d lambda n^2 / tau(L)";
  return rep;
}

AutOrderReport aut_order_derived(const CodeSpec& spec) {
  AutOrderReport rep = aut_order_closed_form(spec);
  const AutContext c = make_context(spec);
  const Field& F = *c.F;
  const std::uint64_t N = F.order();
  const std::uint64_t q = nt::ipow(F.p(), F.lambda());
  const std::uint64_t K = kappa(c.I, static_cast<int>(q), c.n);
  // xi = g^{(N/K) t}; alpha beta moves by xi^{1 - q^{i_0}}, which must stay a d-th power.
  const std::uint64_t shift = (nt::powmod(q, c.I.front(), N) + N - 1) % N;
  std::uint64_t count = 0;
  for (std::uint64_t t = 0; t < K; ++t) {
    const unsigned __int128 e = static_cast<unsigned __int128>(N / K) * t % N * shift % N;
    if (static_cast<std::uint64_t>(e) % rep.d == 0) ++count;
  }
  rep.kappa = count;
  const std::uint64_t ln2 = static_cast<std::uint64_t>(F.lambda()) * c.n * c.n;
  rep.order = count * rep.d * ln2 / rep.tau;
  rep.formula = "|{xi in mu_kappa : xi^{1-q^{i0}} d-th power}| d lambda n^2 / tau(L)";
  return rep;
}

int tau_monomial(int p, int lambda, int n, int h, int sk, std::uint64_t u) {
  const std::uint64_t q = nt::ipow(p, lambda);
  const int g = std::gcd(std::gcd(n, h), static_cast<int>(nt::mod(sk - h, n)));
  const std::uint64_t D = nt::ipow(q, g) - 1;
  for (auto m : nt::divisors(static_cast<std::uint64_t>(lambda) * n)) {
    const std::uint64_t pm1 = (nt::powmod(p, m, D) + D - 1) % D;
    if (static_cast<unsigned __int128>(u % D) * pm1 % D == 0) return static_cast<int>(m);
  }
  return lambda * n;
}

AutOrderReport aut_order_monomial(const CodeSpec& spec) {
  const AutContext c = make_context(spec);
  require(c.I.size() == 1, "L must be a monomial eta x^{q^h}");
  const Field& F = *c.F;
  const int h = c.I.front();
  const int g = std::gcd(std::gcd(c.n, h), static_cast<int>(nt::mod(c.sk - h, c.n)));
  const std::uint64_t q = nt::ipow(F.p(), F.lambda());
  AutOrderReport rep;
  rep.d = nt::ipow(q, g) - 1;
  rep.tau = tau_monomial(F.p(), F.lambda(), c.n, h, c.sk, F.dlog(c.eta.front()));
  rep.order = rep.d * F.order() * static_cast<std::uint64_t>(F.lambda()) * c.n * c.n / rep.tau;
  rep.boundary = spec.k == 2 || spec.k == c.n - 2;
  rep.formula = "d (q^n-1) lambda n^2 / tau(g^u, h)";
  return rep;
}

DiophantineReport diophantine_counts(int q, int n, int h, int sk) {
  require(q >= 2 && n >= 1, "q >= 2, n >= 1");
  DiophantineReport rep{q, n, h, sk};
  const std::uint64_t N = nt::ipow(q, n) - 1;
  rep.modulus = N;
  const int e2 = static_cast<int>(nt::mod(sk - h, n));
  const std::uint64_t d1 = nt::ipow(q, static_cast<unsigned>(nt::mod(h, n))) - 1;
  const std::uint64_t d2abs = nt::ipow(q, e2) - 1;  // d2 = -d2abs
  const std::uint64_t d = std::gcd(N, std::gcd(d1, d2abs));
  const std::uint64_t c1 = d1 / d % N;
  const std::uint64_t c2 = (N - d2abs / d % N) % N;
  std::vector<std::uint64_t> hist(N, 0);
  for (std::uint64_t i = 0; i < N; ++i)
    for (std::uint64_t j = 0; j < N; ++j) ++hist[(i * c1 + j * c2) % N];
  rep.min_count = *std::min_element(hist.begin(), hist.end());
  rep.max_count = *std::max_element(hist.begin(), hist.end());
  rep.uniform = rep.min_count == rep.max_count;
  rep.equals_q_minus_1 = rep.uniform && rep.min_count == static_cast<std::uint64_t>(q - 1);
  rep.equals_modulus = rep.uniform && rep.min_count == N;
  return rep;
}

}  // namespace rankmetric
