#include "chebtl/exactlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chebtl {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(Errc::invalid_argument, "ragged matrix literal");
    for (long long v : row) data_.emplace_back(v);
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::signature_mismatch, "matrix shapes do not chain");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& v = a.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += v * b.at(k, j);
    }
  return out;
}

namespace {

// Bareiss elimination over a generic integer type. Every intermediate entry is
// a minor of the input, so the division by the previous pivot is exact.
template <typename Int, typename Step>
std::optional<std::size_t> bareiss_rank(std::vector<Int> a, std::size_t rows, std::size_t cols,
                                        Step step) {
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[pivot * cols + k], a[r * cols + k]);
    const Int p = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Int f = a[i * cols + c];
      for (std::size_t k = c + 1; k < cols; ++k) {
        auto next = step(p, a[i * cols + k], f, a[r * cols + k], prev);
        if (!next) return std::nullopt;
        a[i * cols + k] = *next;
      }
      a[i * cols + c] = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

std::optional<std::int64_t> step_int64(std::int64_t p, std::int64_t x, std::int64_t f,
                                       std::int64_t y, std::int64_t prev) {
  const __int128 v = static_cast<__int128>(p) * x - static_cast<__int128>(f) * y;
  const __int128 q = v / prev;
  if (q > INT64_MAX || q < INT64_MIN) return std::nullopt;
  return static_cast<std::int64_t>(q);
}

std::optional<BigInt> step_big(const BigInt& p, const BigInt& x, const BigInt& f,
                               const BigInt& y, const BigInt& prev) {
  return BigInt((p * x - f * y) / prev);
}

std::size_t rank_of_entries(std::vector<BigInt> data, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) return 0;
  // Work on the short side.
  if (rows > cols) {
    std::vector<BigInt> t(data.size());
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) t[c * rows + r] = data[r * cols + c];
    data.swap(t);
    std::swap(rows, cols);
  }
  const BigInt lim = BigInt(1) << 62;
  const bool small = std::all_of(data.begin(), data.end(),
                                 [&lim](const BigInt& v) { return v < lim && v > -lim; });
  if (small) {
    std::vector<std::int64_t> fast(data.size());
    std::transform(data.begin(), data.end(), fast.begin(),
                   [](const BigInt& v) { return static_cast<std::int64_t>(v); });
    if (auto r = bareiss_rank<std::int64_t>(std::move(fast), rows, cols, step_int64)) return *r;
  }
  return *bareiss_rank<BigInt>(std::move(data), rows, cols, step_big);
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
  std::vector<BigInt> data;
  data.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) data.push_back(m.at(r, c));
  return rank_of_entries(std::move(data), m.rows(), m.cols());
}

std::vector<std::size_t> homology_dims(std::span<const std::size_t> dims,
                                       std::span<const ExactMatrix> diffs) {
  if (dims.size() != diffs.size() + 1)
    throw Error(Errc::invalid_argument, "need one more term than differentials");
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (diffs[i].rows() != dims[i] || diffs[i].cols() != dims[i + 1])
      throw Error(Errc::not_a_complex, "differential " + std::to_string(i + 1) +
                                           " does not match term dimensions");
  }
  for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
    if (!(diffs[i] * diffs[i + 1]).is_zero())
      throw Error(Errc::not_a_complex,
                  "d_" + std::to_string(i + 1) + " d_" + std::to_string(i + 2) + " != 0");
  }
  std::vector<std::size_t> ranks(diffs.size() + 2, 0);  // ranks[k] = rank d_k
  for (std::size_t i = 0; i < diffs.size(); ++i) ranks[i + 1] = rank(diffs[i]);
  std::vector<std::size_t> h(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k) h[k] = dims[k] - ranks[k] - ranks[k + 1];
  return h;
}

std::vector<std::size_t> homology_dims(std::span<const ExactMatrix> diffs) {
  if (diffs.empty()) throw Error(Errc::invalid_argument, "no differentials given");
  std::vector<std::size_t> dims;
  dims.push_back(diffs.front().rows());
  for (const auto& d : diffs) dims.push_back(d.cols());
  return homology_dims(dims, diffs);
}

ExactMatrix SparseMatrix::to_dense() const {
  ExactMatrix m(rows, cols);
  for (const auto& e : entries) m.at(e.row, e.col) += e.value;
  return m;
}

namespace {

bool product_vanishes(const SparseMatrix& a, const SparseMatrix& b) {
  // (a b)(i, j) = sum_k a(i, k) b(k, j)
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> a_cols(a.cols);
  for (const auto& e : a.entries) a_cols[e.col].emplace_back(e.row, e.value);
  std::unordered_map<std::uint64_t, std::int64_t> acc;
  for (const auto& e : b.entries) {
    for (auto [i, v] : a_cols[e.row]) {
      acc[static_cast<std::uint64_t>(i) * (b.cols + 1) + e.col] += v * e.value;
    }
  }
  return std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second == 0; });
}

void check_shapes(const SparseChainComplex& c) {
  if (c.dims.size() != c.diffs.size() + 1)
    throw Error(Errc::invalid_argument, "need one more term than differentials");
  for (std::size_t i = 0; i < c.diffs.size(); ++i) {
    const auto& d = c.diffs[i];
    if (d.rows != c.dims[i] || d.cols != c.dims[i + 1])
      throw Error(Errc::not_a_complex, "differential " + std::to_string(i + 1) +
                                           " does not match term dimensions");
    for (const auto& e : d.entries)
      if (e.row >= d.rows || e.col >= d.cols)
        throw Error(Errc::invalid_argument, "sparse entry out of range");
  }
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

void check_is_complex(const SparseChainComplex& c) {
  check_shapes(c);
  for (std::size_t i = 0; i + 1 < c.diffs.size(); ++i)
    if (!product_vanishes(c.diffs[i], c.diffs[i + 1]))
      throw Error(Errc::not_a_complex,
                  "d_" + std::to_string(i + 1) + " d_" + std::to_string(i + 2) + " != 0");
}

std::vector<std::size_t> dense_homology_dims(const SparseChainComplex& c) {
  check_shapes(c);
  std::vector<ExactMatrix> dense;
  dense.reserve(c.diffs.size());
  for (const auto& d : c.diffs) dense.push_back(d.to_dense());
  return homology_dims(c.dims, dense);
}

std::vector<std::size_t> blocked_homology_dims(const SparseChainComplex& c) {
  check_is_complex(c);
  const std::size_t terms = c.dims.size();
  std::vector<std::size_t> offset(terms + 1, 0);
  for (std::size_t k = 0; k < terms; ++k) offset[k + 1] = offset[k] + c.dims[k];
  const std::size_t total = offset[terms];

  UnionFind uf(total);
  for (std::size_t i = 0; i < c.diffs.size(); ++i)
    for (const auto& e : c.diffs[i].entries)
      if (e.value != 0) uf.unite(offset[i] + e.row, offset[i + 1] + e.col);

  // Number the components that carry at least one entry.
  std::vector<std::size_t> comp_of(total);
  std::unordered_map<std::size_t, std::size_t> comp_index;
  for (std::size_t v = 0; v < total; ++v) comp_of[v] = uf.find(v);

  struct Block {
    std::vector<std::vector<const SparseEntry*>> entries;  // per differential
  };
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < c.diffs.size(); ++i) {
    for (const auto& e : c.diffs[i].entries) {
      if (e.value == 0) continue;
      const std::size_t root = comp_of[offset[i + 1] + e.col];
      auto [it, inserted] = comp_index.try_emplace(root, blocks.size());
      if (inserted) blocks.push_back(Block{std::vector<std::vector<const SparseEntry*>>(c.diffs.size())});
      blocks[it->second].entries[i].push_back(&e);
    }
  }

  const std::size_t nd = c.diffs.size();
  std::vector<std::size_t> block_ranks(blocks.size() * nd, 0);

  const auto nblocks = static_cast<std::int64_t>(blocks.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t b = 0; b < nblocks; ++b) {
    const Block& blk = blocks[static_cast<std::size_t>(b)];
    for (std::size_t i = 0; i < nd; ++i) {
      const auto& es = blk.entries[i];
      if (es.empty()) continue;
      std::vector<std::size_t> rows;
      std::vector<std::size_t> cols;
      for (const auto* e : es) {
        rows.push_back(e->row);
        cols.push_back(e->col);
      }
      std::sort(rows.begin(), rows.end());
      rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
      std::sort(cols.begin(), cols.end());
      cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
      std::vector<BigInt> dense(rows.size() * cols.size());
      for (const auto* e : es) {
        const auto r = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), e->row) - rows.begin());
        const auto cc = static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), e->col) - cols.begin());
        dense[r * cols.size() + cc] += e->value;
      }
      block_ranks[static_cast<std::size_t>(b) * nd + i] =
          rank_of_entries(std::move(dense), rows.size(), cols.size());
    }
  }

  std::vector<std::size_t> ranks(nd + 2, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t i = 0; i < nd; ++i) ranks[i + 1] += block_ranks[b * nd + i];
  std::vector<std::size_t> h(terms);
  for (std::size_t k = 0; k < terms; ++k) h[k] = c.dims[k] - ranks[k] - ranks[k + 1];
  return h;
}

}  // namespace chebtl
