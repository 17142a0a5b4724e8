#pragma once

// Exact integer linear algebra for homology computations.
//
// Two routes are kept on purpose: `homology_dims` works on dense matrices in
// one serial elimination per differential and is the reference; the
// `blocked_homology_dims` kernel splits a sparse complex into its connected
// components and ranks the blocks in parallel (OpenMP). Tests hold them equal.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chebtl/error.hpp"

namespace chebtl {

using BigInt = boost::multiprecision::cpp_int;

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ExactMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix zero(std::size_t rows, std::size_t cols) { return ExactMatrix(rows, cols); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ExactMatrix transpose() const;
  bool is_zero() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const ExactMatrix& m);

// diffs[i] is d_{i+1}: C_{i+1} -> C_i, so the complex has terms C_0..C_L with
// L = diffs.size(). Returns dim H_0..H_L. Throws not_a_complex when some
// d_i d_{i+1} != 0 or shapes do not chain.
std::vector<std::size_t> homology_dims(std::span<const ExactMatrix> diffs);
// Variant with explicit term dimensions, for complexes whose ends carry no map.
std::vector<std::size_t> homology_dims(std::span<const std::size_t> dims,
                                       std::span<const ExactMatrix> diffs);

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  std::int64_t value;
};

struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseEntry> entries;  // duplicates are summed on use

  ExactMatrix to_dense() const;
};

// Chain complex C_0 <- C_1 <- ... <- C_L; diffs[i] : C_{i+1} -> C_i.
struct SparseChainComplex {
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> diffs;
};

// Throws not_a_complex unless every consecutive product vanishes.
void check_is_complex(const SparseChainComplex& c);

// Serial reference: densify each differential and call homology_dims.
std::vector<std::size_t> dense_homology_dims(const SparseChainComplex& c);

// Parallel kernel: homology as a direct sum over the connected components of
// the support graph (basis vectors as vertices, nonzero entries as edges).
std::vector<std::size_t> blocked_homology_dims(const SparseChainComplex& c);

}  // namespace chebtl
