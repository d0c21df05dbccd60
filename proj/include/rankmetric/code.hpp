#pragma once

// Rank-metric codes inside L_{n,q}[x], stored as F_p-spans so that codes that
// are only additive (AGTG) are first class.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rankmetric/fp_linalg.hpp"
#include "rankmetric/linpoly.hpp"

namespace rankmetric {

enum class Family { GAB, TG, GTG, AGTG, TZ, CUSTOM };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

inline constexpr std::uint64_t kDefaultCodeBudget = std::uint64_t{1} << 20;

// H_{k,s}(L1, L2) = { L1(a_0) x + a_1 x^{q^s} + ... + a_{k-1} x^{q^{s(k-1)}} + L2(a_0) x^{q^{sk}} }
struct CodeSpec {
  FieldPtr field;
  int k = 1;
  int s = 1;
  AdditiveMap L1;
  AdditiveMap L2;
  Family family = Family::CUSTOM;

  // 1 <= k <= n-1, gcd(s, n) = 1, L1 and L2 not both zero.
  void validate() const;
  // True when L1 is the identity map.
  bool has_identity_l1() const { return L1 == AdditiveMap::identity(field); }
};

class Code {
 public:
  // Span of the given generators; dependent generators are dropped.
  static Code from_generators(FieldPtr field, const std::vector<LinPoly>& generators,
                              std::optional<CodeSpec> spec = std::nullopt);
  static Code full_space(FieldPtr field);
  static Code zero(FieldPtr field);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const std::vector<LinPoly>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }  // over F_p
  // log_q |C|; may be fractional for codes that are not F_q-linear.
  double log_q_size() const;
  const std::optional<CodeSpec>& spec() const { return spec_; }
  const FpSubspace& span() const { return span_; }
  // Rows of a parity-check matrix: f is in C iff every row is orthogonal to to_fp(f).
  const std::vector<FpVec>& parity_check() const { return parity_; }

  bool contains(const LinPoly& f) const;
  bool is_fq_linear() const;
  bool operator==(const Code& o) const;

  // Every codeword (p^dim of them), in Gray-code order from zero.
  std::vector<LinPoly> elements(std::uint64_t budget = kDefaultCodeBudget) const;

 private:
  Code(FieldPtr field, std::size_t ambient);
  void add_generator(const LinPoly& f);
  void finalize();

  FieldPtr field_;
  FpSubspace span_;
  std::vector<LinPoly> basis_;
  std::vector<FpVec> parity_;
  std::optional<CodeSpec> spec_;
};

Code build_h_code(const CodeSpec& spec);
CodeSpec gabidulin_spec(FieldPtr field, int k, int s);

struct PresetParams {
  int k = 2;
  int s = 1;
  int h = 1;
  std::optional<Elem> eta;    // searched in dlog order when absent
  std::optional<Elem> theta;  // TZ only; searched in dlog order when absent
};

struct PresetResult {
  std::optional<CodeSpec> spec;
  std::vector<std::string> violations;
  bool ok() const { return spec.has_value(); }
};

// Table presets GAB / TG / GTG / AGTG / TZ with their admissibility conditions.
PresetResult preset(FieldPtr field, Family family, const PresetParams& params);

// Calls visit(rank) for every nonzero codeword until it returns false.
// Ranks are over F_q. Throws BudgetError when p^dim > budget.
void for_each_nonzero_rank(const Code& code, std::uint64_t budget,
                           const std::function<bool(int)>& visit);

// Minimum rank over nonzero codewords; n+1 for the zero code by convention.
int min_distance_exhaustive(const Code& code, std::uint64_t budget = kDefaultCodeBudget);
// Histogram: entry r counts codewords of rank r (including the zero word at 0).
std::vector<std::uint64_t> rank_distribution(const Code& code,
                                             std::uint64_t budget = kDefaultCodeBudget);
// |C| meets the Singleton-like bound q^{n(n-d+1)}.
bool is_mrd(const Code& code, std::uint64_t budget = kDefaultCodeBudget);

// N(L1(a)) != (-1)^{kn} N(L2(a)) for every nonzero a. Norm onto F_q, or onto
// F_p for the AGTG family.
bool mrd_norm_criterion(const CodeSpec& spec);

enum class Proportionality { NONE, PROP, PROP_TWIST };
std::string to_string(Proportionality p);

struct ProportionalityResult {
  Proportionality cls = Proportionality::NONE;
  std::optional<Elem> gamma;
};

// PROP: L1(c) = gamma L2(c) for all c. PROP_TWIST: L1(c) = gamma L2(c)^{q^s}.
ProportionalityResult proportionality_class(const CodeSpec& spec);

}  // namespace rankmetric
