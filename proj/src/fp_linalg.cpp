#include "rankmetric/fp_linalg.hpp"

#include "rankmetric/errors.hpp"
#include "rankmetric/numtheory.hpp"

namespace rankmetric {

namespace {

// row_a -= c * row_b over F_p
void axpy(std::uint32_t* a, const std::uint32_t* b, std::uint32_t c, std::size_t len,
          std::uint32_t p) {
  if (c == 0) return;
  if (p == 2) {
    for (std::size_t i = 0; i < len; ++i) a[i] ^= b[i];
    return;
  }
  const std::uint64_t neg = p - c;
  for (std::size_t i = 0; i < len; ++i)
    if (b[i]) a[i] = static_cast<std::uint32_t>((a[i] + neg * b[i]) % p);
}

void scale(std::uint32_t* a, std::uint32_t c, std::size_t len, std::uint32_t p) {
  if (c == 1) return;
  for (std::size_t i = 0; i < len; ++i)
    a[i] = static_cast<std::uint32_t>(std::uint64_t{a[i]} * c % p);
}

}  // namespace

std::uint32_t fp_dot(const FpVec& a, const FpVec& b, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = (acc + std::uint64_t{a[i]} * b[i]) % p;
  return static_cast<std::uint32_t>(acc);
}

FpVec FpMatrix::row(std::size_t r) const {
  return FpVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void FpMatrix::append_row(const FpVec& v) {
  require(v.size() == cols_, "row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

std::vector<std::size_t> FpMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && at(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
    scale(&at(r, 0), nt::inv_mod_prime(at(r, c), p_), cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != r && at(i, c)) axpy(&at(i, 0), &at(r, 0), at(i, c), cols_, p_);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t FpMatrix::rank() const {
  FpMatrix m = *this;
  return m.rref().size();
}

std::vector<FpVec> FpMatrix::nullspace() const {
  FpMatrix m = *this;
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<FpVec> out;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    FpVec v(cols_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const std::uint32_t c = m.at(i, free);
      v[pivots[i]] = c ? p_ - c : 0;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<FpVec> FpMatrix::solve(const FpVec& b) const {
  require(b.size() == rows_, "right-hand side length mismatch");
  FpMatrix aug(p_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i] % p_;
  }
  const auto pivots = aug.rref();
  FpVec x(cols_, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols_) return std::nullopt;
    x[pivots[i]] = aug.at(i, cols_);
  }
  return x;
}

FpVec FpMatrix::apply(const FpVec& x) const {
  require(x.size() == cols_, "vector length mismatch");
  FpVec y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc = (acc + std::uint64_t{at(i, j)} * x[j]) % p_;
    y[i] = static_cast<std::uint32_t>(acc);
  }
  return y;
}

FpVec FpSubspace::reduce(FpVec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint32_t c = v[pivots_[i]];
    if (c) axpy(v.data(), rows_[i].data(), c, dim_, p_);
  }
  return v;
}

bool FpSubspace::insert(const FpVec& v) {
  require(v.size() == dim_, "vector length mismatch");
  FpVec r = reduce(v);
  std::size_t piv = 0;
  while (piv < dim_ && r[piv] == 0) ++piv;
  if (piv == dim_) return false;
  scale(r.data(), nt::inv_mod_prime(r[piv], p_), dim_, p_);
  // Keep the basis fully reduced at pivot columns.
  for (auto& row : rows_)
    if (row[piv]) axpy(row.data(), r.data(), row[piv], dim_, p_);
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

bool FpSubspace::contains(const FpVec& v) const {
  require(v.size() == dim_, "vector length mismatch");
  for (auto x : reduce(v))
    if (x) return false;
  return true;
}

bool FpSubspace::equals(const FpSubspace& other) const {
  if (other.dim() != dim() || other.dim_ != dim_) return false;
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

std::vector<FpVec> FpSubspace::annihilator() const {
  FpMatrix m(p_, 0, dim_);
  for (const auto& r : rows_) m.append_row(r);
  return m.nullspace();
}

}  // namespace rankmetric
