#include "rankmetric/field.hpp"

#include <algorithm>

#include "rankmetric/errors.hpp"
#include "rankmetric/numtheory.hpp"

namespace rankmetric {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_rem_monic(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j)
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - c) * b[j]) % p);
    trim(a);
  }
  return a;
}

Poly decode(std::uint64_t x, std::uint32_t p, int len) {
  Poly c(len);
  for (int j = 0; j < len; ++j) {
    c[j] = static_cast<std::uint32_t>(x % p);
    x /= p;
  }
  return c;
}

std::uint64_t encode(const Poly& c, std::uint32_t p) {
  std::uint64_t x = 0;
  for (std::size_t j = c.size(); j-- > 0;) x = x * p + c[j];
  return x;
}

// Product of two encoded elements modulo a monic modulus (table-free).
std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b, const Poly& modulus, std::uint32_t p) {
  const int d = static_cast<int>(modulus.size()) - 1;
  Poly x = decode(a, p, d), y = decode(b, p, d);
  Poly prod(2 * d, 0);
  for (int i = 0; i < d; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < d; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p);
  }
  Poly r = poly_rem_monic(prod, modulus, p);
  r.resize(d, 0);
  return encode(r, p);
}

std::uint64_t slow_pow(std::uint64_t a, std::uint64_t e, const Poly& modulus, std::uint32_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = slow_mul(r, a, modulus, p);
    a = slow_mul(a, a, modulus, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  if (d == 1) return true;
  // Normalize to monic so that remainders by monic divisors are meaningful.
  const std::uint32_t lead_inv = nt::inv_mod_prime(f.back(), p);
  for (auto& c : f) c = static_cast<std::uint32_t>(std::uint64_t{c} * lead_inv % p);
  for (int e = 1; e <= d / 2; ++e) {
    const std::uint64_t count = nt::ipow(p, e);
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly div = decode(low, p, e);
      div.push_back(1);
      if (poly_rem_monic(f, div, p).empty()) return false;
    }
  }
  return true;
}

FieldPtr Field::create(std::uint32_t p, int lambda, int n,
                       std::optional<std::vector<std::uint32_t>> modulus, std::uint64_t budget) {
  require(nt::is_prime(p), "p must be prime");
  require(lambda >= 1 && n >= 1, "lambda and n must be positive");
  const int d = lambda * n;
  long double approx = 1;
  for (int i = 0; i < d; ++i) approx *= p;
  if (approx > static_cast<long double>(budget) || approx > 2147483648.0L)
    throw BudgetError("field size p^(lambda n) exceeds the configured budget");

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->lambda_ = lambda;
  f->n_ = n;
  f->degree_ = d;
  f->q_ = nt::ipow(p, lambda);
  f->size_ = static_cast<std::uint32_t>(nt::ipow(p, d));
  f->order_ = f->size_ - 1;

  if (modulus) {
    Poly m = *modulus;
    for (auto c : m) require(c < p, "modulus coefficients must lie in [0, p)");
    trim(m);
    require(static_cast<int>(m.size()) == d + 1, "modulus must have degree lambda*n");
    require(m.back() == 1, "modulus must be monic");
    require(is_irreducible(m, p), "modulus is reducible over F_p");
    f->modulus_ = m;
  } else {
    const std::uint64_t count = nt::ipow(p, d);
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly m = decode(low, p, d);
      m.push_back(1);
      if (is_irreducible(m, p)) {
        f->modulus_ = m;
        break;
      }
    }
  }

  f->pw_.resize(d + 1);
  f->pw_[0] = 1;
  for (int j = 1; j <= d; ++j) f->pw_[j] = f->pw_[j - 1] * p;

  // Smallest element of full multiplicative order.
  const std::uint64_t ord = f->order_;
  const auto factors = nt::prime_factors(ord);
  for (std::uint64_t x = 1; x < f->size_; ++x) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(x, ord / r, f->modulus_, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive && (ord > 1 || x == 1)) {
      f->generator_ = Elem{static_cast<std::uint32_t>(x)};
      break;
    }
  }
  f->build_tables();
  return f;
}

void Field::build_tables() {
  exp_.assign(2 * static_cast<std::size_t>(order_) + 1, 0);
  log_.assign(size_, 0);
  std::uint64_t cur = 1;
  for (std::uint32_t k = 0; k < order_; ++k) {
    exp_[k] = static_cast<std::uint32_t>(cur);
    log_[cur] = k;
    cur = slow_mul(cur, generator_.v, modulus_, p_);
  }
  for (std::uint32_t k = order_; k < exp_.size(); ++k) exp_[k] = exp_[k - order_];

  ppow_.resize(degree_);
  for (int e = 0; e < degree_; ++e)
    ppow_[e] = static_cast<std::uint32_t>(nt::powmod(p_, e, order_ == 0 ? 1 : order_));

  if (p_ != 2) {
    zech_.assign(order_, 0);
    for (std::uint32_t t = 0; t < order_; ++t) {
      std::uint32_t x = exp_[t];
      std::uint32_t c0 = x % p_;
      std::uint32_t y = (c0 == p_ - 1) ? x - (p_ - 1) : x + 1;
      zech_[t] = (y == 0) ? UINT32_MAX : log_[y];
    }
  }
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return Elem{a.v ^ b.v};
  if (a.v == 0) return b;
  if (b.v == 0) return a;
  const std::uint32_t la = log_[a.v];
  const std::uint32_t lb = log_[b.v];
  const std::uint32_t t = lb >= la ? lb - la : lb + order_ - la;
  const std::uint32_t z = zech_[t];
  if (z == UINT32_MAX) return Elem{0};
  return Elem{exp_[la + z]};
}

Elem Field::neg(Elem a) const {
  if (p_ == 2 || a.v == 0) return a;
  return Elem{exp_[log_[a.v] + order_ / 2]};
}

Elem Field::inv(Elem a) const {
  require(a.v != 0, "inverse of zero");
  return Elem{exp_[order_ - log_[a.v]]};
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a.v == 0) {
    require(e >= 0, "negative power of zero");
    return e == 0 ? one() : zero();
  }
  const std::int64_t r = nt::mod(e, order_);
  return Elem{exp_[(std::uint64_t{log_[a.v]} * static_cast<std::uint64_t>(r)) % order_]};
}

Elem Field::exp(std::int64_t k) const { return Elem{exp_[nt::mod(k, order_)]}; }

std::uint32_t Field::dlog(Elem x) const {
  require(x.v != 0, "dlog of zero");
  return log_[x.v];
}

Elem Field::frobenius(Elem x, std::int64_t e) const {
  if (x.v == 0) return x;
  const auto r = static_cast<std::size_t>(nt::mod(e, degree_));
  return Elem{exp_[(std::uint64_t{log_[x.v]} * ppow_[r]) % order_]};
}

Elem Field::norm_rel(Elem x, int m) const {
  require(m >= 1 && degree_ % m == 0, "m must divide lambda*n");
  if (x.v == 0) return x;
  const std::uint64_t e = order_ / (nt::ipow(p_, m) - 1);
  return Elem{exp_[(std::uint64_t{log_[x.v]} * e) % order_]};
}

Elem Field::trace_rel(Elem x, int m) const {
  require(m >= 1 && degree_ % m == 0, "m must divide lambda*n");
  Elem acc{0};
  for (int i = 0; i < degree_ / m; ++i) acc = add(acc, frobenius(x, std::int64_t{m} * i));
  return acc;
}

bool Field::in_subfield(Elem x, int m) const {
  require(m >= 1 && degree_ % m == 0, "m must divide lambda*n");
  return frobenius(x, m) == x;
}

bool Field::chi_is_trivial(Elem x, std::uint64_t d) const {
  require(d >= 1 && order_ % d == 0, "d must divide the multiplicative group order");
  if (x.v == 0) return false;
  return log_[x.v] % d == 0;
}

std::vector<std::uint32_t> Field::coords(Elem x) const {
  std::vector<std::uint32_t> c(degree_);
  for (int j = 0; j < degree_; ++j) c[j] = digit(x, j);
  return c;
}

Elem Field::from_coords(const std::vector<std::uint32_t>& c) const {
  require(static_cast<int>(c.size()) <= degree_, "too many coordinates");
  std::uint64_t x = 0;
  for (std::size_t j = c.size(); j-- > 0;) {
    require(c[j] < p_, "coordinate out of range [0, p)");
    x = x * p_ + c[j];
  }
  return Elem{static_cast<std::uint32_t>(x)};
}

std::string Field::to_string(Elem x) const {
  if (x.v == 0) return "0";
  return "g^" + std::to_string(log_[x.v]);
}

}  // namespace rankmetric
