#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <concepts>
#include <string>
#include <type_traits>
#include <vector>

// Boost 1.74 probes every Eigen expression as a potential byte container while
// Eigen resolves scalar promotion; the probe hard-errors on Eigen types.
namespace boost::multiprecision::detail {
template <class C>
  requires requires {
    typename C::Scalar;
    C::RowsAtCompileTime;
  }
struct is_byte_container<C> : std::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>

namespace dk {

using Integer = boost::multiprecision::cpp_int;
using Index = Eigen::Index;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using SparseMatrix = Eigen::SparseMatrix<Integer>;
using Triplet = Eigen::Triplet<Integer>;

SparseMatrix sparse_identity(Index n);
SparseMatrix sparse_zero(Index rows, Index cols);

/// Drops stored zeros, which exact cancellation leaves behind.
SparseMatrix pruned(SparseMatrix m);

bool is_zero(const SparseMatrix& m);
bool equal(const SparseMatrix& a, const SparseMatrix& b);

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

/// Block-diagonal, vertical and horizontal assembly; blocks are laid out in order.
SparseMatrix vstack(const std::vector<SparseMatrix>& blocks, Index cols);
SparseMatrix hstack(const std::vector<SparseMatrix>& blocks, Index rows);

IntMatrix to_dense(const SparseMatrix& m);
SparseMatrix to_sparse(const IntMatrix& m);

/// Entry-by-entry construction helper used by tests and literal parsers.
SparseMatrix sparse_from_rows(Index rows, Index cols, const std::vector<long long>& row_major);

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace dk
