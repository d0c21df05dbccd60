#include "rankmetric/linpoly.hpp"

#include <numeric>

#include "rankmetric/errors.hpp"
#include "rankmetric/numtheory.hpp"

namespace rankmetric {

namespace {

void check_same(const Field& a, const Field& b) {
  require(&a == &b || a.same_as(b), "field mismatch");
}

// Solves A x = b over the field (A square, invertible). A is row-major.
std::vector<Elem> solve_square(const Field& F, std::vector<Elem> A, std::vector<Elem> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && A[sel * n + c].v == 0) ++sel;
    require(sel < n, "singular system over the field");
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A[sel * n + j], A[c * n + j]);
      std::swap(b[sel], b[c]);
    }
    const Elem inv = F.inv(A[c * n + c]);
    for (std::size_t j = 0; j < n; ++j) A[c * n + j] = F.mul(A[c * n + j], inv);
    b[c] = F.mul(b[c], inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || A[i * n + c].v == 0) continue;
      const Elem f = A[i * n + c];
      for (std::size_t j = 0; j < n; ++j)
        A[i * n + j] = F.sub(A[i * n + j], F.mul(f, A[c * n + j]));
      b[i] = F.sub(b[i], F.mul(f, b[c]));
    }
  }
  return b;
}

FpMatrix images_to_matrix(const Field& F, const std::vector<Elem>& images) {
  const int d = F.degree();
  FpMatrix m(F.p(), d, images.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (int t = 0; t < d; ++t) m.at(t, j) = F.digit(images[j], t);
  return m;
}

// An F_p basis of F_q: powers of a generator of F_q^*.
std::vector<Elem> fq_over_fp_basis(const Field& F) {
  const Elem zeta = F.exp(static_cast<std::int64_t>(F.order() / (F.q() - 1)));
  std::vector<Elem> out;
  Elem cur = Field::one();
  for (int t = 0; t < F.lambda(); ++t) {
    out.push_back(cur);
    cur = F.mul(cur, zeta);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- LinPoly

LinPoly::LinPoly(FieldPtr field) : field_(std::move(field)) {
  coeffs_.assign(field_->n(), Elem{0});
}

LinPoly::LinPoly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  require(static_cast<int>(coeffs_.size()) == field_->n(), "LinPoly needs exactly n coefficients");
  for (auto c : coeffs_) require(c.v < field_->size(), "coefficient outside the field");
}

LinPoly LinPoly::identity(FieldPtr field) { return monomial(std::move(field), Field::one(), 0); }

LinPoly LinPoly::monomial(FieldPtr field, Elem a, int i) {
  LinPoly f(std::move(field));
  f.set_coeff(i, a);
  return f;
}

Elem LinPoly::coeff(int i) const { return coeffs_[nt::mod(i, n())]; }
void LinPoly::set_coeff(int i, Elem a) { coeffs_[nt::mod(i, n())] = a; }

bool LinPoly::is_zero() const {
  for (auto c : coeffs_)
    if (c.v) return false;
  return true;
}

std::vector<int> LinPoly::support() const {
  std::vector<int> s;
  for (int i = 0; i < n(); ++i)
    if (coeffs_[i].v) s.push_back(i);
  return s;
}

Elem LinPoly::operator()(Elem x) const {
  const Field& F = *field_;
  Elem acc{0};
  for (int i = 0; i < n(); ++i)
    if (coeffs_[i].v) acc = F.add(acc, F.mul(coeffs_[i], F.frobenius_q(x, i)));
  return acc;
}

LinPoly LinPoly::operator+(const LinPoly& o) const {
  check_same(*field_, *o.field_);
  LinPoly r(field_);
  for (int i = 0; i < n(); ++i) r.coeffs_[i] = field_->add(coeffs_[i], o.coeffs_[i]);
  return r;
}

LinPoly LinPoly::operator-(const LinPoly& o) const {
  check_same(*field_, *o.field_);
  LinPoly r(field_);
  for (int i = 0; i < n(); ++i) r.coeffs_[i] = field_->sub(coeffs_[i], o.coeffs_[i]);
  return r;
}

LinPoly LinPoly::operator-() const {
  LinPoly r(field_);
  for (int i = 0; i < n(); ++i) r.coeffs_[i] = field_->neg(coeffs_[i]);
  return r;
}

LinPoly LinPoly::scaled(Elem a) const {
  LinPoly r(field_);
  for (int i = 0; i < n(); ++i) r.coeffs_[i] = field_->mul(a, coeffs_[i]);
  return r;
}

bool LinPoly::operator==(const LinPoly& o) const {
  return field_->same_as(*o.field_) && coeffs_ == o.coeffs_;
}

FpVec LinPoly::to_fp() const {
  const int d = field_->degree();
  FpVec v(static_cast<std::size_t>(d) * n());
  for (int i = 0; i < n(); ++i)
    for (int t = 0; t < d; ++t) v[static_cast<std::size_t>(i) * d + t] = field_->digit(coeffs_[i], t);
  return v;
}

LinPoly LinPoly::from_fp(FieldPtr field, const FpVec& v) {
  const int d = field->degree();
  const int n = field->n();
  require(static_cast<int>(v.size()) == d * n, "coordinate vector has wrong length");
  std::vector<Elem> c(n);
  for (int i = 0; i < n; ++i) {
    std::uint64_t x = 0;
    for (int t = d; t-- > 0;) x = x * field->p() + v[static_cast<std::size_t>(i) * d + t];
    c[i] = Elem{static_cast<std::uint32_t>(x)};
  }
  return LinPoly(std::move(field), std::move(c));
}

// ------------------------------------------------------------ AdditiveMap

AdditiveMap::AdditiveMap(FieldPtr field) : field_(std::move(field)) {
  coeffs_.assign(field_->degree(), Elem{0});
}

AdditiveMap::AdditiveMap(FieldPtr field, std::vector<Elem> pcoeffs)
    : field_(std::move(field)), coeffs_(std::move(pcoeffs)) {
  require(static_cast<int>(coeffs_.size()) == field_->degree(),
          "AdditiveMap needs exactly lambda*n coefficients");
  for (auto c : coeffs_) require(c.v < field_->size(), "coefficient outside the field");
}

AdditiveMap AdditiveMap::identity(FieldPtr field) { return monomial(std::move(field), Field::one(), 0); }

AdditiveMap AdditiveMap::monomial(FieldPtr field, Elem a, int j) {
  AdditiveMap f(std::move(field));
  f.coeffs_[nt::mod(j, f.degree())] = a;
  return f;
}

AdditiveMap AdditiveMap::from_linpoly(const LinPoly& f) {
  AdditiveMap m(f.field_ptr());
  for (int i = 0; i < f.n(); ++i) m.coeffs_[i * f.field().lambda()] = f.coeff(i);
  return m;
}

AdditiveMap AdditiveMap::from_images(FieldPtr field, const std::vector<Elem>& images) {
  const Field& F = *field;
  const int d = F.degree();
  require(static_cast<int>(images.size()) == d, "need one image per F_p basis element");
  // Moore system: sum_j a_j (y^i)^{p^j} = images[i].
  std::vector<Elem> A(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) A[static_cast<std::size_t>(i) * d + j] = F.frobenius(F.basis(i), j);
  auto coeffs = solve_square(F, std::move(A), images);
  return AdditiveMap(std::move(field), std::move(coeffs));
}

Elem AdditiveMap::coeff(int j) const { return coeffs_[nt::mod(j, degree())]; }

bool AdditiveMap::is_zero() const {
  for (auto c : coeffs_)
    if (c.v) return false;
  return true;
}

bool AdditiveMap::is_q_linear() const {
  for (int j = 0; j < degree(); ++j)
    if (coeffs_[j].v && j % field_->lambda() != 0) return false;
  return true;
}

std::optional<LinPoly> AdditiveMap::to_linpoly() const {
  if (!is_q_linear()) return std::nullopt;
  LinPoly f(field_);
  for (int i = 0; i < field_->n(); ++i) f.set_coeff(i, coeffs_[i * field_->lambda()]);
  return f;
}

Elem AdditiveMap::operator()(Elem x) const {
  const Field& F = *field_;
  Elem acc{0};
  for (int j = 0; j < degree(); ++j)
    if (coeffs_[j].v) acc = F.add(acc, F.mul(coeffs_[j], F.frobenius(x, j)));
  return acc;
}

AdditiveMap AdditiveMap::operator+(const AdditiveMap& o) const {
  check_same(*field_, *o.field_);
  AdditiveMap r(field_);
  for (int j = 0; j < degree(); ++j) r.coeffs_[j] = field_->add(coeffs_[j], o.coeffs_[j]);
  return r;
}

AdditiveMap AdditiveMap::operator-(const AdditiveMap& o) const {
  check_same(*field_, *o.field_);
  AdditiveMap r(field_);
  for (int j = 0; j < degree(); ++j) r.coeffs_[j] = field_->sub(coeffs_[j], o.coeffs_[j]);
  return r;
}

AdditiveMap AdditiveMap::scaled(Elem a) const {
  AdditiveMap r(field_);
  for (int j = 0; j < degree(); ++j) r.coeffs_[j] = field_->mul(a, coeffs_[j]);
  return r;
}

bool AdditiveMap::operator==(const AdditiveMap& o) const {
  return field_->same_as(*o.field_) && coeffs_ == o.coeffs_;
}

std::vector<Elem> AdditiveMap::basis_images() const {
  std::vector<Elem> out(degree());
  for (int j = 0; j < degree(); ++j) out[j] = (*this)(field_->basis(j));
  return out;
}

FpMatrix AdditiveMap::fp_matrix() const { return images_to_matrix(*field_, basis_images()); }

// ------------------------------------------------------------ operations

LinPoly compose(const LinPoly& f, const LinPoly& g) {
  check_same(f.field(), g.field());
  const Field& F = f.field();
  const int n = f.n();
  std::vector<Elem> c(n, Elem{0});
  for (int m = 0; m < n; ++m) {
    const Elem fm = f.coeff(m);
    if (!fm.v) continue;
    for (int j = 0; j < n; ++j) {
      const Elem gj = g.coeff(j);
      if (!gj.v) continue;
      const int t = (m + j) % n;
      c[t] = F.add(c[t], F.mul(fm, F.frobenius_q(gj, m)));
    }
  }
  return LinPoly(f.field_ptr(), std::move(c));
}

AdditiveMap compose(const AdditiveMap& f, const AdditiveMap& g) {
  check_same(f.field(), g.field());
  const Field& F = f.field();
  const int d = f.degree();
  std::vector<Elem> c(d, Elem{0});
  for (int m = 0; m < d; ++m) {
    const Elem fm = f.coeff(m);
    if (!fm.v) continue;
    for (int j = 0; j < d; ++j) {
      const Elem gj = g.coeff(j);
      if (!gj.v) continue;
      const int t = (m + j) % d;
      c[t] = F.add(c[t], F.mul(fm, F.frobenius(gj, m)));
    }
  }
  return AdditiveMap(f.field_ptr(), std::move(c));
}

std::vector<Elem> fq_basis(const Field& field) {
  std::vector<Elem> b;
  Elem cur = Field::one();
  const Elem y = field.degree() > 1 ? field.basis(1) : Field::one();
  for (int i = 0; i < field.n(); ++i) {
    b.push_back(cur);
    cur = field.mul(cur, y);
  }
  return b;
}

std::vector<Elem> fq_coordinates(const Field& F, Elem x) {
  const auto omega = fq_over_fp_basis(F);
  const auto beta = fq_basis(F);
  // Column (i*lambda + t) holds omega_t * beta_i.
  std::vector<Elem> cols;
  for (auto b : beta)
    for (auto w : omega) cols.push_back(F.mul(w, b));
  const FpMatrix B = images_to_matrix(F, cols);
  const auto sol = B.solve(F.coords(x));
  require(sol.has_value(), "F_q basis does not span the field");
  std::vector<Elem> c(F.n(), Elem{0});
  for (int i = 0; i < F.n(); ++i)
    for (int t = 0; t < F.lambda(); ++t)
      c[i] = F.add(c[i], F.mul(F.scalar((*sol)[static_cast<std::size_t>(i) * F.lambda() + t]), omega[t]));
  return c;
}

FqMatrix matrix_of(const LinPoly& f) {
  const Field& F = f.field();
  const int n = F.n();
  FqMatrix M{n, std::vector<Elem>(static_cast<std::size_t>(n) * n)};
  const auto beta = fq_basis(F);
  for (int col = 0; col < n; ++col) {
    const auto c = fq_coordinates(F, f(beta[col]));
    for (int row = 0; row < n; ++row) M.entries[static_cast<std::size_t>(row) * n + col] = c[row];
  }
  return M;
}

int fp_rank(const AdditiveMap& f) { return static_cast<int>(f.fp_matrix().rank()); }

int rank(const LinPoly& f) { return fp_rank(AdditiveMap::from_linpoly(f)) / f.field().lambda(); }

std::vector<Elem> kernel(const LinPoly& f) {
  const Field& F = f.field();
  const auto null = AdditiveMap::from_linpoly(f).fp_matrix().nullspace();
  const auto omega = fq_over_fp_basis(F);
  FpSubspace span(F.p(), F.degree());
  std::vector<Elem> out;
  for (const auto& v : null) {
    const Elem x = F.from_coords(v);
    if (span.contains(F.coords(x))) continue;
    out.push_back(x);
    for (auto w : omega) span.insert(F.coords(F.mul(w, x)));
  }
  return out;
}

LinPoly adjoint(const LinPoly& f, int s) {
  const int n = f.n();
  require(std::gcd(nt::mod(s, n), static_cast<std::int64_t>(n)) == 1, "adjoint requires gcd(s, n) = 1");
  const Field& F = f.field();
  LinPoly r(f.field_ptr());
  for (int i = 0; i < n; ++i) {
    const Elem a = f.coeff(s * i);
    const std::int64_t e = static_cast<std::int64_t>(s) * (n - i);
    r.set_coeff(static_cast<int>(nt::mod(e, n)), F.frobenius_q(a, e));
  }
  return r;
}

LinPoly rho_twist(const LinPoly& f, int nu) {
  LinPoly r(f.field_ptr());
  for (int i = 0; i < f.n(); ++i) r.set_coeff(i, f.field().frobenius(f.coeff(i), nu));
  return r;
}

AdditiveMap rho_twist(const AdditiveMap& f, int nu) {
  std::vector<Elem> c(f.degree());
  for (int j = 0; j < f.degree(); ++j) c[j] = f.field().frobenius(f.coeff(j), nu);
  return AdditiveMap(f.field_ptr(), std::move(c));
}

std::optional<FpMatrix> factor_through(const FpMatrix& L, const FpMatrix& M) {
  require(L.rows() == M.rows() && L.cols() == M.cols(), "shape mismatch");
  const std::uint32_t p = L.p();
  const std::size_t v = L.cols();

  // image(L) == image(M)  <=>  rank L == rank M == rank [L | M]
  FpMatrix joint(p, L.rows(), 2 * v);
  for (std::size_t i = 0; i < L.rows(); ++i)
    for (std::size_t j = 0; j < v; ++j) {
      joint.at(i, j) = L.at(i, j);
      joint.at(i, v + j) = M.at(i, j);
    }
  const std::size_t r = L.rank();
  if (M.rank() != r || joint.rank() != r) return std::nullopt;

  // Basis of the domain: a complement U of ker M followed by ker M itself.
  // T sends u to some L-preimage of M u, and ker M onto ker L.
  const auto ker_m = M.nullspace();
  const auto ker_l = L.nullspace();
  FpSubspace span(p, v);
  for (const auto& w : ker_m) span.insert(w);
  std::vector<FpVec> domain, targets;
  for (std::size_t j = 0; j < v && span.dim() < v; ++j) {
    FpVec e(v, 0);
    e[j] = 1;
    if (!span.insert(e)) continue;
    const auto pre = L.solve(M.apply(e));
    domain.push_back(e);
    targets.push_back(*pre);
  }
  for (std::size_t i = 0; i < ker_m.size(); ++i) {
    domain.push_back(ker_m[i]);
    targets.push_back(ker_l[i]);
  }

  // T = targets * domain^{-1}: solve for the coordinates of each e_j in `domain`.
  FpMatrix D(p, v, v);
  for (std::size_t c = 0; c < v; ++c)
    for (std::size_t i = 0; i < v; ++i) D.at(i, c) = domain[c][i];
  FpMatrix T(p, v, v);
  for (std::size_t j = 0; j < v; ++j) {
    FpVec e(v, 0);
    e[j] = 1;
    const auto coords = *D.solve(e);
    for (std::size_t c = 0; c < v; ++c) {
      if (!coords[c]) continue;
      for (std::size_t i = 0; i < v; ++i)
        T.at(i, j) = static_cast<std::uint32_t>((T.at(i, j) + std::uint64_t{coords[c]} * targets[c][i]) % p);
    }
  }
  return T;
}

std::optional<AdditiveMap> factor_through(const AdditiveMap& L, const AdditiveMap& M) {
  check_same(L.field(), M.field());
  const auto T = factor_through(L.fp_matrix(), M.fp_matrix());
  if (!T) return std::nullopt;
  const Field& F = L.field();
  std::vector<Elem> images(F.degree());
  for (int j = 0; j < F.degree(); ++j) {
    FpVec col(F.degree());
    for (int t = 0; t < F.degree(); ++t) col[t] = T->at(t, j);
    images[j] = F.from_coords(col);
  }
  return AdditiveMap::from_images(L.field_ptr(), images);
}

}  // namespace rankmetric
