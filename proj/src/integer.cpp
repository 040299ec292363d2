#include "dk/integer.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <stdexcept>

namespace dk {

SparseMatrix sparse_identity(Index n) {
  SparseMatrix m(n, n);
  m.reserve(Eigen::VectorXi::Constant(n, 1));
  for (Index i = 0; i < n; ++i) m.insert(i, i) = 1;
  m.makeCompressed();
  return m;
}

SparseMatrix sparse_zero(Index rows, Index cols) { return SparseMatrix(rows, cols); }

SparseMatrix pruned(SparseMatrix m) {
  m.prune([](Index, Index, const Integer& v) { return v != 0; });
  return m;
}

bool is_zero(const SparseMatrix& m) {
  for (Index k = 0; k < m.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(m, k); it; ++it)
      if (it.value() != 0) return false;
  return true;
}

bool equal(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return is_zero(SparseMatrix(a - b));
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out = Eigen::kroneckerProduct(a, b);
  return out;
}

SparseMatrix vstack(const std::vector<SparseMatrix>& blocks, Index cols) {
  Index rows = 0;
  Index nnz = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack: column count mismatch");
    rows += b.rows();
    nnz += b.nonZeros();
  }
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(nnz));
  Index offset = 0;
  for (const auto& b : blocks) {
    for (Index k = 0; k < b.outerSize(); ++k)
      for (SparseMatrix::InnerIterator it(b, k); it; ++it)
        t.emplace_back(offset + it.row(), it.col(), it.value());
    offset += b.rows();
  }
  SparseMatrix out(rows, cols);
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

SparseMatrix hstack(const std::vector<SparseMatrix>& blocks, Index rows) {
  Index cols = 0;
  Index nnz = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hstack: row count mismatch");
    cols += b.cols();
    nnz += b.nonZeros();
  }
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(nnz));
  Index offset = 0;
  for (const auto& b : blocks) {
    for (Index k = 0; k < b.outerSize(); ++k)
      for (SparseMatrix::InnerIterator it(b, k); it; ++it)
        t.emplace_back(it.row(), offset + it.col(), it.value());
    offset += b.cols();
  }
  SparseMatrix out(rows, cols);
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

IntMatrix to_dense(const SparseMatrix& m) {
  IntMatrix out = IntMatrix::Zero(m.rows(), m.cols());
  for (Index k = 0; k < m.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) out(it.row(), it.col()) = it.value();
  return out;
}

SparseMatrix to_sparse(const IntMatrix& m) {
  std::vector<Triplet> t;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) t.emplace_back(i, j, m(i, j));
  SparseMatrix out(m.rows(), m.cols());
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

SparseMatrix sparse_from_rows(Index rows, Index cols, const std::vector<long long>& row_major) {
  if (static_cast<Index>(row_major.size()) != rows * cols)
    throw std::invalid_argument("sparse_from_rows: entry count does not match shape");
  std::vector<Triplet> t;
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      if (auto v = row_major[static_cast<std::size_t>(i * cols + j)]; v != 0) t.emplace_back(i, j, Integer(v));
  SparseMatrix out(rows, cols);
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

}  // namespace dk
