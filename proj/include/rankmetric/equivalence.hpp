#pragma once

// Equivalence of rank-metric codes: f -> phi1 o f^rho o phi2, rho = p^nu.
//
// Three independent deciders of increasing generality:
//   equiv_closed_form      algebraic condition on (L1, L2) vs (M1, M2)
//   monomial_equiv_search  every monomial phi1, phi2 and nu, by set equality
//   full_equiv_search      every invertible phi2 and nu, phi1 solved linearly

#include <optional>
#include <string>
#include <vector>

#include "rankmetric/code.hpp"

namespace rankmetric {

struct GammaSet {
  int n = 0, r = 0, s = 0, k = 0;
  std::vector<int> members;  // ascending, in [0, n)
  std::string rule;          // which table row produced it ("enumeration" otherwise)
};

// {t r - i s mod n : 1 <= i <= k-1, k+1 <= t <= n-1}
GammaSet gamma_enumerate(int n, int r, int s, int k);
// Ten-row table for k >= n/2; for k < n/2 the same table with r, s swapped and
// k replaced by n-k (Gamma_{r,s,k} = Gamma_{s,r,n-k} after reindexing t <-> n-i).
GammaSet gamma_closed_form(int n, int r, int s, int k);

struct EquivMap {
  LinPoly phi1;
  LinPoly phi2;
  int nu = 0;
};

EquivMap identity_map(const FieldPtr& field);
LinPoly apply_equiv(const EquivMap& map, const LinPoly& f);
// Requires invertible phi1, phi2.
Code apply_equiv(const EquivMap& map, const Code& code);
// phi(f) = A o f^rho o B composed as maps: (first o second)(f) = first(second(f)).
EquivMap compose_maps(const EquivMap& first, const EquivMap& second);
bool is_monomial(const LinPoly& f);

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 28;

struct ClosedFormWitness {
  EquivMap map;     // phi1 = a x^{q^m}, phi2 = b^{q^{n-l}} x^{q^{n-l}}
  Elem a, b;
  int l = 0;
  int nu = 0;
  bool swapped = false;  // the s_B = n - s_A branch; then m = l - s k
  AdditiveMap T;    // bijective, with M_i = (transformed L_i) o T
};

// Decides equivalence of H_{k,s_A}(L1, L2) and H_{k,s_B}(M1, M2). Requires n >= 4,
// 2 <= k <= n-2, equal (field, k), proportionality NONE on both sides, and
// s_B = s_A or s_B = n - s_A. Scans (a, b, l, nu) with a outermost, each in dlog order.
std::vector<ClosedFormWitness> equiv_closed_form_all(const CodeSpec& A, const CodeSpec& B, bool all_witnesses,
                                                     std::uint64_t budget = kDefaultSearchBudget);
std::optional<ClosedFormWitness> equiv_closed_form(const CodeSpec& A, const CodeSpec& B,
                                                   std::uint64_t budget = kDefaultSearchBudget);

// Image of H_{k,s}(x, L) under (a x^{q^l}, b x^{q^{n-l}}, p^nu). Note the
// coefficient of phi2 here is b itself, while ClosedFormWitness::b enters as b^{q^{n-l}}.
// H_{k,s}(x, M) with M(x) = a b^{q^{sk+l}} L((x / a b^{q^l})^{p^{lambda n - nu} q^{n-l}})^{p^nu q^l}.
// Requires L1 = x in A.
CodeSpec normal_form_image(const CodeSpec& A, Elem a, Elem b, int l, int nu);

// Exhaustive over phi1 = alpha x^{q^m}, phi2 = beta x^{q^j}, nu, restricted to
// shifts m + j that carry the coefficient support of A onto that of B.
std::vector<EquivMap> monomial_equiv_search_all(const Code& A, const Code& B, bool all_witnesses,
                                                std::uint64_t budget = kDefaultSearchBudget);
std::optional<EquivMap> monomial_equiv_search(const Code& A, const Code& B,
                                              std::uint64_t budget = kDefaultSearchBudget);

// Every invertible phi2 and every nu; phi1 from the linear system phi1 o (A^rho o phi2) in B.
// Only for tiny fields: q^{n^2} <= 2^16.
std::vector<EquivMap> full_equiv_search_all(const Code& A, const Code& B, bool all_witnesses,
                                            std::uint64_t budget = kDefaultSearchBudget);
std::optional<EquivMap> full_equiv_search(const Code& A, const Code& B,
                                          std::uint64_t budget = kDefaultSearchBudget);

}  // namespace rankmetric
