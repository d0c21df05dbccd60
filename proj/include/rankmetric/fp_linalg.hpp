#pragma once

// Dense linear algebra over the prime field F_p. All code-level linear algebra
// (membership, duals, nuclei, equivalence constraints) reduces to this.

#include <cstdint>
#include <optional>
#include <vector>

namespace rankmetric {

using FpVec = std::vector<std::uint32_t>;

class FpMatrix {
 public:
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  FpVec row(std::size_t r) const;
  void append_row(const FpVec& v);

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  // Basis of {x : A x = 0}.
  std::vector<FpVec> nullspace() const;
  // Some x with A x = b, if one exists.
  std::optional<FpVec> solve(const FpVec& b) const;
  FpVec apply(const FpVec& x) const;

 private:
  std::uint32_t p_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> data_;
};

// Incrementally maintained row-echelon basis of a subspace of F_p^dim.
class FpSubspace {
 public:
  FpSubspace(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim) {}

  std::uint32_t p() const { return p_; }
  std::size_t ambient_dim() const { return dim_; }
  std::size_t dim() const { return rows_.size(); }

  // Adds v to the span; returns false if v was already in it.
  bool insert(const FpVec& v);
  bool contains(const FpVec& v) const;
  // v minus its projection along the echelon basis (zero iff v is in the span).
  FpVec reduce(FpVec v) const;
  const std::vector<FpVec>& echelon_rows() const { return rows_; }
  bool equals(const FpSubspace& other) const;

  // Basis of the annihilator {w : <w, v> = 0 for all v in span}.
  std::vector<FpVec> annihilator() const;

 private:
  std::uint32_t p_;
  std::size_t dim_;
  std::vector<FpVec> rows_;          // each normalized to pivot 1
  std::vector<std::size_t> pivots_;  // pivot column per row
};

std::uint32_t fp_dot(const FpVec& a, const FpVec& b, std::uint32_t p);

}  // namespace rankmetric
