#pragma once

// Linearized polynomials over F_{q^n}, always reduced modulo x^{q^n} - x.
//
// LinPoly:     sum_i c_i x^{q^i},  i < n        (F_q-linear maps)
// AdditiveMap: sum_j c_j x^{p^j},  j < lambda*n (F_p-linear maps)
//
// The q^s-flavoured view f = sum a_i x^{q^{si}} is index arithmetic only:
// a_i is coeff(s*i mod n).

#include <optional>
#include <vector>

#include "rankmetric/field.hpp"
#include "rankmetric/fp_linalg.hpp"

namespace rankmetric {

class LinPoly {
 public:
  explicit LinPoly(FieldPtr field);
  LinPoly(FieldPtr field, std::vector<Elem> coeffs);

  static LinPoly identity(FieldPtr field);
  // a x^{q^i}, i taken modulo n.
  static LinPoly monomial(FieldPtr field, Elem a, int i);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int n() const { return static_cast<int>(coeffs_.size()); }

  Elem coeff(int i) const;
  void set_coeff(int i, Elem a);
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  // Indices with a nonzero coefficient, ascending.
  std::vector<int> support() const;

  Elem operator()(Elem x) const;

  LinPoly operator+(const LinPoly& o) const;
  LinPoly operator-(const LinPoly& o) const;
  LinPoly operator-() const;
  // Left scalar multiple: x -> a f(x).
  LinPoly scaled(Elem a) const;

  bool operator==(const LinPoly& o) const;

  // F_p coordinates, length lambda*n*n: digit t of coefficient i sits at i*lambda*n + t.
  FpVec to_fp() const;
  static LinPoly from_fp(FieldPtr field, const FpVec& v);

 private:
  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

class AdditiveMap {
 public:
  explicit AdditiveMap(FieldPtr field);
  AdditiveMap(FieldPtr field, std::vector<Elem> pcoeffs);

  static AdditiveMap identity(FieldPtr field);
  static AdditiveMap monomial(FieldPtr field, Elem a, int j);  // a x^{p^j}
  static AdditiveMap from_linpoly(const LinPoly& f);
  // The unique p-polynomial taking y^j to images[j].
  static AdditiveMap from_images(FieldPtr field, const std::vector<Elem>& images);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()); }

  Elem coeff(int j) const;
  const std::vector<Elem>& pcoeffs() const { return coeffs_; }
  bool is_zero() const;
  // True when only indices divisible by lambda carry coefficients.
  bool is_q_linear() const;
  std::optional<LinPoly> to_linpoly() const;

  Elem operator()(Elem x) const;
  AdditiveMap operator+(const AdditiveMap& o) const;
  AdditiveMap operator-(const AdditiveMap& o) const;
  AdditiveMap scaled(Elem a) const;
  bool operator==(const AdditiveMap& o) const;

  // Images of the F_p basis y^j.
  std::vector<Elem> basis_images() const;
  // lambda*n x lambda*n matrix over F_p; column j holds the coordinates of f(y^j).
  FpMatrix fp_matrix() const;

 private:
  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

// f o g.
LinPoly compose(const LinPoly& f, const LinPoly& g);
AdditiveMap compose(const AdditiveMap& f, const AdditiveMap& g);

// n x n matrix over F_q, entries stored as (subfield) field elements, row-major.
struct FqMatrix {
  int n = 0;
  std::vector<Elem> entries;
  Elem at(int r, int c) const { return entries[static_cast<std::size_t>(r) * n + c]; }
};

// The F_q basis used for matrix_of: 1, y, ..., y^{n-1}.
std::vector<Elem> fq_basis(const Field& field);
// Coordinates of x over F_q in fq_basis().
std::vector<Elem> fq_coordinates(const Field& field, Elem x);

// Column i holds the F_q coordinates of f(y^i).
FqMatrix matrix_of(const LinPoly& f);
// Rank of the induced F_q-linear map (via Gaussian elimination over F_p).
int rank(const LinPoly& f);
int fp_rank(const AdditiveMap& f);
// An F_q basis of the kernel.
std::vector<Elem> kernel(const LinPoly& f);

// Adjoint with respect to the trace form: coefficient a_i of x^{q^{si}} moves to
// x^{q^{s(n-i)}} and is raised to q^{s(n-i)}. Requires gcd(s, n) = 1.
LinPoly adjoint(const LinPoly& f, int s);

// Coefficient-wise p^nu power: f^rho for rho = p^nu.
LinPoly rho_twist(const LinPoly& f, int nu);
AdditiveMap rho_twist(const AdditiveMap& f, int nu);

// An invertible T with M = L o T, when image(L) == image(M); otherwise none.
std::optional<AdditiveMap> factor_through(const AdditiveMap& L, const AdditiveMap& M);
// Matrix form over F_p: L and M are w x v; returns an invertible v x v T with L T = M.
std::optional<FpMatrix> factor_through(const FpMatrix& L, const FpMatrix& M);

}  // namespace rankmetric
