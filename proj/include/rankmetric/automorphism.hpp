#pragma once

// Automorphisms of H_{k,s}(x, L) in the normal form (a x^{q^l}, b x^{q^{n-l}}, p^nu).

#include <optional>
#include <string>
#include <vector>

#include "rankmetric/equivalence.hpp"

namespace rankmetric {

struct AutTriple {
  Elem a, b;
  int l = 0;
  int nu = 0;

  EquivMap to_map(const FieldPtr& field) const;
  bool operator==(const AutTriple& o) const { return a == o.a && b == o.b && l == o.l && nu == o.nu; }
};

// q^{gcd(D(I) u {n})} - 1 with D(I) the positive differences of I. Requires |I| >= 2.
std::uint64_t kappa(const std::vector<int>& support, int q, int n);

// Coefficient support I of L (plain q-exponents). Requires L q-linearized.
std::vector<int> aut_support(const CodeSpec& spec);

// eta_i^{p^nu q^l - 1} = (a b^{q^l})^{q^i} / (a b^{q^{l+sk}}) for every i in I.
bool aut_membership(const CodeSpec& spec, const AutTriple& t);

inline constexpr std::uint64_t kAutBudget = std::uint64_t{1} << 26;

// All triples passing aut_membership, dlog-lexicographic on (a, b, l, nu); each
// one is also checked to fix the code setwise.
std::vector<AutTriple> aut_enumerate(const CodeSpec& spec, std::uint64_t budget = kAutBudget);
// Setwise stability only: phi1 o C^rho o phi2 = C, same order as aut_enumerate.
std::vector<AutTriple> aut_brute(const CodeSpec& spec, std::uint64_t budget = kAutBudget);

enum class TauMethod { Congruence, Scan };

// Divisors m of lambda*n admitting alpha, beta != 0 with chi_d(alpha beta) = 1 and
// eta_i^{p^m-1} = alpha beta^{q^i} for all i in I. Requires |I| >= 2.
std::vector<int> tau_admissible_divisors(const CodeSpec& spec, TauMethod method = TauMethod::Congruence);
int tau_general(const CodeSpec& spec, TauMethod method = TauMethod::Congruence);

struct AutOrderReport {
  std::uint64_t order = 0;
  std::uint64_t kappa = 0;  // gcd(kappa_{q^n}(I), (q^n-1)/d); 0 on the monomial path
  std::uint64_t d = 0;
  int tau = 0;
  bool boundary = false;  // k = 2 or k = n-2; the enumeration is authoritative there
  std::string formula;
};

// kappa d lambda n^2 / tau(L), for |I| >= 2.
AutOrderReport aut_order_closed_form(const CodeSpec& spec);
// Same count with the per-(nu, l) factor computed from the roots of unity xi in
// mu_{kappa_{q^n}(I)} whose xi^{1 - q^{i_0}} is a d-th power. Agrees with
// enumeration where the printed kappa does not.
AutOrderReport aut_order_derived(const CodeSpec& spec);
// L = eta x^{q^h}: d (q^n-1) lambda n^2 / tau(g^u, h), d = q^{gcd(n,h,sk-h)} - 1.
AutOrderReport aut_order_monomial(const CodeSpec& spec);
// min{m | lambda n : (q^{gcd(n,h,sk-h)} - 1) | u (p^m - 1)}
int tau_monomial(int p, int lambda, int n, int h, int sk, std::uint64_t u);

// Solution counts n_A of i (d1/d) + j (d2/d) = A over Z_{q^n-1}, d1 = q^h - 1,
// d2 = 1 - q^{sk-h}, d = gcd(q^n-1, d1, d2).
struct DiophantineReport {
  int q = 0, n = 0, h = 0, sk = 0;
  std::uint64_t modulus = 0;  // q^n - 1
  std::uint64_t min_count = 0, max_count = 0;
  bool uniform = false;
  bool equals_q_minus_1 = false;  // the printed claim n_A = q - 1
  bool equals_modulus = false;    // n_A = q^n - 1
};
DiophantineReport diophantine_counts(int q, int n, int h, int sk);

}  // namespace rankmetric
