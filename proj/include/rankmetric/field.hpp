#pragma once

// The field tower F_p <= F_q = F_{p^lambda} <= F_{q^n}, realised as a single
// concrete field F_{p^{lambda n}}. Subfields are identified by Frobenius fixed
// points, never constructed separately.
//
// Element encoding: an element is the polynomial sum c_j y^j (j < lambda*n)
// modulo the field modulus, stored as the integer sum c_j p^j. Orderings
// ("smallest modulus", "smallest generator") are the natural order on these
// integers, i.e. coordinate sequences compared from the highest power of y
// downward. For moduli this selects y^4+y+1 over y^4+y^3+1 in F_16.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rankmetric {

struct Elem {
  std::uint32_t v = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr std::uint64_t kDefaultFieldBudget = std::uint64_t{1} << 22;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  // Builds F_{p^{lambda n}}. Without a modulus the smallest monic irreducible
  // of degree lambda*n is used; the generator is always the smallest element
  // of full multiplicative order. Same inputs give a bit-identical field.
  static FieldPtr create(std::uint32_t p, int lambda, int n,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                         std::uint64_t budget = kDefaultFieldBudget);

  std::uint32_t p() const { return p_; }
  int lambda() const { return lambda_; }
  int n() const { return n_; }
  int degree() const { return degree_; }  // lambda * n
  std::uint64_t q() const { return q_; }
  std::uint32_t size() const { return size_; }    // p^{lambda n}
  std::uint32_t order() const { return order_; }  // size - 1

  // Monic modulus, coefficients ascending (length degree + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem generator() const { return generator_; }

  static constexpr Elem zero() { return Elem{0}; }
  static constexpr Elem one() { return Elem{1}; }
  // The prime-field element c (0 <= c < p).
  Elem scalar(std::uint32_t c) const { return Elem{c % p_}; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return Elem{0};
    return Elem{exp_[log_[a.v] + log_[b.v]]};
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;

  // g^k for any integer k.
  Elem exp(std::int64_t k) const;
  // Discrete logarithm to base the generator, in [0, order).
  std::uint32_t dlog(Elem x) const;

  // x^{p^e}; e is taken modulo lambda*n.
  Elem frobenius(Elem x, std::int64_t e) const;
  // x^{q^i}.
  Elem frobenius_q(Elem x, std::int64_t i) const { return frobenius(x, i * lambda_); }

  // Relative norm and trace onto the subfield with p^m elements (m | lambda*n).
  Elem norm_rel(Elem x, int m) const;
  Elem trace_rel(Elem x, int m) const;
  // x^{p^m} == x; m | lambda*n.
  bool in_subfield(Elem x, int m) const;
  // chi_d(x) == 1, with chi_d(0) = 0. d must divide the group order.
  bool chi_is_trivial(Elem x, std::uint64_t d) const;

  // F_p coordinates (ascending powers of y).
  std::uint32_t digit(Elem x, int j) const { return (x.v / pw_[j]) % p_; }
  std::vector<std::uint32_t> coords(Elem x) const;
  Elem from_coords(const std::vector<std::uint32_t>& c) const;
  // y^j, the j-th F_p basis element.
  Elem basis(int j) const { return Elem{pw_[j]}; }

  // -1 in the field (equals 1 in characteristic 2).
  Elem minus_one() const { return neg(one()); }

  std::string to_string(Elem x) const;  // "g^k" or "0"

  bool same_as(const Field& other) const {
    return p_ == other.p_ && lambda_ == other.lambda_ && n_ == other.n_ &&
           modulus_ == other.modulus_;
  }

 private:
  Field() = default;
  void build_tables();

  std::uint32_t p_ = 2;
  int lambda_ = 1;
  int n_ = 1;
  int degree_ = 1;
  std::uint64_t q_ = 2;
  std::uint32_t size_ = 2;
  std::uint32_t order_ = 1;
  std::vector<std::uint32_t> modulus_;
  Elem generator_{1};
  std::vector<std::uint32_t> pw_;      // p^j, j <= degree
  std::vector<std::uint32_t> ppow_;    // p^e mod order, e < degree
  std::vector<std::uint32_t> exp_;     // g^k, k < 2*order
  std::vector<std::uint32_t> log_;     // log_[0] unused
  std::vector<std::uint32_t> zech_;    // log(1 + g^t), odd p only
};

// Irreducibility over F_p by trial division; coefficients ascending.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace rankmetric
