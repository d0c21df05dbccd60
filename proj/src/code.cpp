#include "rankmetric/code.hpp"

#include <cmath>
#include <numeric>

#include "rankmetric/errors.hpp"
#include "rankmetric/numtheory.hpp"

namespace rankmetric {

std::string to_string(Family f) {
  switch (f) {
    case Family::GAB: return "GAB";
    case Family::TG: return "TG";
    case Family::GTG: return "GTG";
    case Family::AGTG: return "AGTG";
    case Family::TZ: return "TZ";
    case Family::CUSTOM: return "CUSTOM";
  }
  return "CUSTOM";
}

Family family_from_string(const std::string& s) {
  for (auto f : {Family::GAB, Family::TG, Family::GTG, Family::AGTG, Family::TZ, Family::CUSTOM})
    if (to_string(f) == s) return f;
  throw PreconditionError("unknown code family: " + s);
}

std::string to_string(Proportionality p) {
  switch (p) {
    case Proportionality::NONE: return "NONE";
    case Proportionality::PROP: return "PROP";
    case Proportionality::PROP_TWIST: return "PROP_TWIST";
  }
  return "NONE";
}

void CodeSpec::validate() const {
  require(field != nullptr, "spec has no field");
  const int n = field->n();
  require(k >= 1 && k <= n - 1, "1 <= k <= n-1");
  require(std::gcd(nt::mod(s, n), static_cast<std::int64_t>(n)) == 1, "gcd(s, n) = 1");
  require(L1.field().same_as(*field) && L2.field().same_as(*field), "field mismatch");
  require(!(L1.is_zero() && L2.is_zero()), "L1 and L2 not both zero");
}

// ------------------------------------------------------------------ Code

Code::Code(FieldPtr field, std::size_t ambient)
    : field_(std::move(field)), span_(field_->p(), ambient) {}

void Code::add_generator(const LinPoly& f) {
  require(f.field().same_as(*field_), "field mismatch");
  if (span_.insert(f.to_fp())) basis_.push_back(f);
}

void Code::finalize() { parity_ = span_.annihilator(); }

Code Code::from_generators(FieldPtr field, const std::vector<LinPoly>& generators,
                           std::optional<CodeSpec> spec) {
  const std::size_t ambient = static_cast<std::size_t>(field->degree()) * field->n();
  Code c(field, ambient);
  for (const auto& g : generators) c.add_generator(g);
  c.spec_ = std::move(spec);
  c.finalize();
  return c;
}

Code Code::full_space(FieldPtr field) {
  std::vector<LinPoly> gens;
  for (int i = 0; i < field->n(); ++i)
    for (int t = 0; t < field->degree(); ++t) gens.push_back(LinPoly::monomial(field, field->basis(t), i));
  return from_generators(field, gens);
}

Code Code::zero(FieldPtr field) { return from_generators(field, {}); }

double Code::log_q_size() const {
  return static_cast<double>(dimension()) / field_->lambda();
}

bool Code::contains(const LinPoly& f) const {
  require(f.field().same_as(*field_), "field mismatch");
  return span_.contains(f.to_fp());
}

bool Code::is_fq_linear() const {
  const Field& F = *field_;
  const Elem zeta = F.exp(static_cast<std::int64_t>(F.order() / (F.q() - 1)));
  for (const auto& b : basis_)
    if (!contains(b.scaled(zeta))) return false;
  return true;
}

bool Code::operator==(const Code& o) const {
  return field_->same_as(*o.field_) && span_.equals(o.span_);
}

namespace {

// Visits p^dim - 1 steps of the modular Gray code; each step adds basis vector t once.
template <class Step>
void gray_walk(std::uint32_t p, std::size_t dim, Step&& step) {
  std::vector<std::uint32_t> counter(dim, 0);
  while (true) {
    std::size_t t = 0;
    while (t < dim && counter[t] == p - 1) counter[t++] = 0;
    if (t == dim) return;
    ++counter[t];
    if (!step(t)) return;
  }
}

void check_budget(const Code& code, std::uint64_t budget) {
  long double size = 1;
  for (std::size_t i = 0; i < code.dimension(); ++i) size *= code.field().p();
  if (size > static_cast<long double>(budget))
    throw BudgetError("code has p^" + std::to_string(code.dimension()) +
                      " codewords, over the exhaustive budget of " + std::to_string(budget));
}

// F_p-rank of `count` field elements viewed as coordinate vectors.
class FpRanker {
 public:
  explicit FpRanker(const Field& F) : F_(F), d_(F.degree()), rows_(static_cast<std::size_t>(d_) * d_) {}

  int rank(const Elem* xs, int count) {
    if (F_.p() == 2) {
      std::uint32_t basis[32];
      int r = 0;
      for (int i = 0; i < count; ++i) {
        std::uint32_t v = xs[i].v;
        for (int b = 0; b < r; ++b) v = std::min(v, v ^ basis[b]);
        if (v) basis[r++] = v;
      }
      return r;
    }
    const std::uint32_t p = F_.p();
    for (int i = 0; i < count; ++i) {
      std::uint32_t x = xs[i].v;
      for (int t = 0; t < d_; ++t) {
        rows_[static_cast<std::size_t>(i) * d_ + t] = x % p;
        x /= p;
      }
    }
    int r = 0;
    for (int c = 0; c < d_ && r < count; ++c) {
      int sel = r;
      while (sel < count && rows_[static_cast<std::size_t>(sel) * d_ + c] == 0) ++sel;
      if (sel == count) continue;
      if (sel != r)
        for (int j = c; j < d_; ++j)
          std::swap(rows_[static_cast<std::size_t>(sel) * d_ + j], rows_[static_cast<std::size_t>(r) * d_ + j]);
      const std::uint32_t inv = nt::inv_mod_prime(rows_[static_cast<std::size_t>(r) * d_ + c], p);
      for (int i = r + 1; i < count; ++i) {
        std::uint32_t f = rows_[static_cast<std::size_t>(i) * d_ + c];
        if (!f) continue;
        f = static_cast<std::uint32_t>(std::uint64_t{f} * inv % p);
        for (int j = c; j < d_; ++j)
          rows_[static_cast<std::size_t>(i) * d_ + j] = static_cast<std::uint32_t>(
              (rows_[static_cast<std::size_t>(i) * d_ + j] + std::uint64_t{p - f} * rows_[static_cast<std::size_t>(r) * d_ + j]) % p);
      }
      ++r;
    }
    return r;
  }

 private:
  const Field& F_;
  int d_;
  std::vector<std::uint32_t> rows_;
};

}  // namespace

std::vector<LinPoly> Code::elements(std::uint64_t budget) const {
  check_budget(*this, budget);
  std::vector<LinPoly> out;
  LinPoly cur(field_);
  out.push_back(cur);
  gray_walk(field_->p(), basis_.size(), [&](std::size_t t) {
    cur = cur + basis_[t];
    out.push_back(cur);
    return true;
  });
  return out;
}

void for_each_nonzero_rank(const Code& code, std::uint64_t budget,
                           const std::function<bool(int)>& visit) {
  check_budget(code, budget);
  const Field& F = code.field();
  const int d = F.degree();
  const std::size_t dim = code.dimension();
  // images[t][j] = basis_t(y^j); a codeword is tracked through its images.
  std::vector<Elem> images(dim * d);
  for (std::size_t t = 0; t < dim; ++t)
    for (int j = 0; j < d; ++j) images[t * d + j] = code.basis()[t](F.basis(j));
  std::vector<Elem> cur(d, Elem{0});
  FpRanker ranker(F);
  const int lambda = F.lambda();
  gray_walk(F.p(), dim, [&](std::size_t t) {
    const Elem* row = &images[t * d];
    for (int j = 0; j < d; ++j) cur[j] = F.add(cur[j], row[j]);
    return visit(ranker.rank(cur.data(), d) / lambda);
  });
}

int min_distance_exhaustive(const Code& code, std::uint64_t budget) {
  int best = code.field().n() + 1;
  for_each_nonzero_rank(code, budget, [&](int r) {
    best = std::min(best, r);
    return best > 1;
  });
  return best;
}

std::vector<std::uint64_t> rank_distribution(const Code& code, std::uint64_t budget) {
  std::vector<std::uint64_t> hist(code.field().n() + 1, 0);
  hist[0] = 1;
  for_each_nonzero_rank(code, budget, [&](int r) {
    ++hist[r];
    return true;
  });
  return hist;
}

bool is_mrd(const Code& code, std::uint64_t budget) {
  const int n = code.field().n();
  const std::size_t dim = code.dimension();
  const std::size_t lambda = code.field().lambda();
  // |C| = q^{n(n-d+1)} needs dim_p = lambda * n * (n - d + 1).
  if (dim % (lambda * n) != 0) return false;
  const int target = n - static_cast<int>(dim / (lambda * n)) + 1;
  if (target <= 1) return true;      // any nonzero map has rank >= 1
  if (dim == 0) return true;         // {0}: d = n + 1 by convention
  bool ok = true;
  for_each_nonzero_rank(code, budget, [&](int r) {
    if (r < target) ok = false;
    return ok;
  });
  return ok;
}

// ------------------------------------------------------------- builders

Code build_h_code(const CodeSpec& spec) {
  spec.validate();
  const FieldPtr& Fp = spec.field;
  const Field& F = *Fp;
  std::vector<LinPoly> gens;
  for (int j = 0; j < F.degree(); ++j) {
    const Elem e = F.basis(j);
    LinPoly f(Fp);
    f.set_coeff(0, spec.L1(e));
    f.set_coeff(spec.s * spec.k, F.add(f.coeff(spec.s * spec.k), spec.L2(e)));
    gens.push_back(std::move(f));
  }
  for (int i = 1; i < spec.k; ++i)
    for (int j = 0; j < F.degree(); ++j) gens.push_back(LinPoly::monomial(Fp, F.basis(j), spec.s * i));
  return Code::from_generators(Fp, gens, spec);
}

CodeSpec gabidulin_spec(FieldPtr field, int k, int s) {
  auto id = AdditiveMap::identity(field);
  AdditiveMap zero(field);
  return CodeSpec{field, k, s, id, zero, Family::GAB};
}

namespace {

Elem sign_nk(const Field& F, int n, int k) {
  return (static_cast<long>(n) * k) % 2 == 0 ? Field::one() : F.minus_one();
}

bool is_square_in_fq(const Field& F, Elem x) {
  if (x.v == 0 || F.q() % 2 == 0) return true;
  return F.pow(x, static_cast<std::int64_t>((F.q() - 1) / 2)) == Field::one();
}

}  // namespace

PresetResult preset(FieldPtr field, Family family, const PresetParams& prm) {
  const Field& F = *field;
  const int n = F.n();
  PresetResult res;
  auto id = AdditiveMap::identity(field);

  auto fail = [&](std::string why) {
    res.violations.push_back(std::move(why));
    return res;
  };

  if (prm.k < 1 || prm.k > n - 1) return fail("1 <= k <= n-1");
  if (std::gcd(nt::mod(prm.s, n), static_cast<std::int64_t>(n)) != 1) return fail("gcd(s, n) = 1");

  if (family == Family::GAB) {
    res.spec = gabidulin_spec(field, prm.k, prm.s);
    return res;
  }

  const Elem sign = sign_nk(F, n, prm.k);

  if (family == Family::TG || family == Family::GTG || family == Family::AGTG) {
    const bool additive = family == Family::AGTG;
    const int norm_deg = additive ? 1 : F.lambda();
    const std::string cond = additive ? "N_{q^n,p}(eta) != (-1)^{nk}" : "N_{q^n,q}(eta) != (-1)^{nk}";
    if (family == Family::TG && nt::mod(prm.s, n) != 1) res.violations.push_back("s = 1");
    auto admissible = [&](Elem eta) { return eta.v != 0 && F.norm_rel(eta, norm_deg) != sign; };
    std::optional<Elem> eta = prm.eta;
    if (!eta) {
      for (std::uint32_t u = 0; u < F.order(); ++u)
        if (admissible(F.exp(u))) {
          eta = F.exp(u);
          break;
        }
    }
    if (!eta || !admissible(*eta)) res.violations.push_back(cond);
    if (!res.violations.empty()) return res;
    auto L2 = additive ? AdditiveMap::monomial(field, *eta, prm.h)
                       : AdditiveMap::monomial(field, *eta, prm.h * F.lambda());
    res.spec = CodeSpec{field, prm.k, prm.s, id, L2, family};
    return res;
  }

  if (family == Family::TZ) {
    if (n % 2 != 0) return fail("n even");
    const int half = (n / 2) * F.lambda();  // F_{q^{n/2}} has p^half elements
    auto theta_ok = [&](Elem t) {
      return t.v != 0 && !F.in_subfield(t, half) && F.in_subfield(F.mul(t, t), half);
    };
    auto eta_ok = [&](Elem e) {
      return e.v != 0 && F.q() % 2 == 1 && !is_square_in_fq(F, F.norm_rel(e, F.lambda()));
    };
    std::optional<Elem> eta = prm.eta, theta = prm.theta;
    if (!eta)
      for (std::uint32_t u = 0; u < F.order() && !eta; ++u)
        if (eta_ok(F.exp(u))) eta = F.exp(u);
    if (!theta)
      for (std::uint32_t u = 0; u < F.order() && !theta; ++u)
        if (theta_ok(F.exp(u))) theta = F.exp(u);
    if (!eta || !eta_ok(*eta)) res.violations.push_back("N(eta) is not a quadratic residue in F_q");
    if (!theta || !theta_ok(*theta))
      res.violations.push_back("theta in F_{q^n} \\ F_{q^{n/2}} and theta^2 in F_{q^{n/2}}");
    if (!res.violations.empty()) return res;
    const int hq = (n / 2) * F.lambda();
    auto L1 = id + AdditiveMap::monomial(field, Field::one(), hq);
    auto diff = id - AdditiveMap::monomial(field, Field::one(), hq);
    auto L2 = diff.scaled(F.div(*eta, *theta));
    res.spec = CodeSpec{field, prm.k, prm.s, L1, L2, family};
    return res;
  }

  return fail("preset family must be one of GAB, TG, GTG, AGTG, TZ");
}

bool mrd_norm_criterion(const CodeSpec& spec) {
  spec.validate();
  const Field& F = *spec.field;
  const int norm_deg = spec.family == Family::AGTG ? 1 : F.lambda();
  const Elem sign = sign_nk(F, F.n(), spec.k);
  // L1, L2 are additive: evaluate through basis images and coordinates.
  const auto im1 = spec.L1.basis_images();
  const auto im2 = spec.L2.basis_images();
  for (std::uint32_t v = 1; v < F.size(); ++v) {
    Elem a1{0}, a2{0};
    std::uint32_t x = v;
    for (int j = 0; j < F.degree(); ++j, x /= F.p()) {
      const std::uint32_t c = x % F.p();
      if (!c) continue;
      const Elem cj = F.scalar(c);
      a1 = F.add(a1, F.mul(cj, im1[j]));
      a2 = F.add(a2, F.mul(cj, im2[j]));
    }
    if (F.norm_rel(a1, norm_deg) == F.mul(sign, F.norm_rel(a2, norm_deg))) return false;
  }
  return true;
}

ProportionalityResult proportionality_class(const CodeSpec& spec) {
  const Field& F = *spec.field;
  auto proportional = [&](const AdditiveMap& A, const AdditiveMap& B) -> std::optional<Elem> {
    // A = gamma * B for some gamma != 0, tested on the F_p basis.
    const auto ia = A.basis_images();
    const auto ib = B.basis_images();
    std::optional<Elem> gamma;
    for (int j = 0; j < F.degree(); ++j) {
      if (ib[j].v == 0) {
        if (ia[j].v != 0) return std::nullopt;
        continue;
      }
      const Elem g = F.div(ia[j], ib[j]);
      if (gamma && *gamma != g) return std::nullopt;
      gamma = g;
    }
    if (!gamma || gamma->v == 0) return std::nullopt;
    return gamma;
  };
  if (auto g = proportional(spec.L1, spec.L2)) return {Proportionality::PROP, g};
  auto twisted = compose(AdditiveMap::monomial(spec.field, Field::one(), spec.s * F.lambda()), spec.L2);
  if (auto g = proportional(spec.L1, twisted)) return {Proportionality::PROP_TWIST, g};
  return {Proportionality::NONE, std::nullopt};
}

}  // namespace rankmetric
