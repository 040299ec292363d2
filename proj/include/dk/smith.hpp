#pragma once

#include "dk/integer.hpp"

#include <optional>
#include <utility>

namespace dk {

/// U * M * V == S with U, V unimodular and S diagonal, d_1 | d_2 | ... | d_rank.
/// The inverses of U and V are tracked alongside so that callers never invert.
template <class Scalar>
struct SmithDecomposition {
  Matrix<Scalar> U, S, V;
  Matrix<Scalar> U_inverse, V_inverse;
  Index rank = 0;

  std::vector<Scalar> invariant_factors() const {
    std::vector<Scalar> d;
    for (Index i = 0; i < rank; ++i) d.push_back(S(i, i));
    return d;
  }
};

namespace detail {

template <class Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

template <class Scalar>
class SmithReducer {
 public:
  explicit SmithReducer(const Matrix<Scalar>& m) {
    d_.S = m;
    d_.U = Matrix<Scalar>::Identity(m.rows(), m.rows());
    d_.U_inverse = d_.U;
    d_.V = Matrix<Scalar>::Identity(m.cols(), m.cols());
    d_.V_inverse = d_.V;
  }

  SmithDecomposition<Scalar> run() && {
    const Index rows = d_.S.rows();
    const Index cols = d_.S.cols();
    Index t = 0;
    for (; t < std::min(rows, cols); ++t) {
      if (!move_smallest_to(t, t, rows, cols)) break;
      while (true) {
        if (!clear_row_and_column(t)) continue;
        // Divisibility: if some entry of the trailing block is not a multiple
        // of the pivot, fold its row into the pivot row and reduce again.
        std::optional<Index> bad;
        for (Index i = t + 1; i < rows && !bad; ++i)
          for (Index j = t + 1; j < cols; ++j)
            if (d_.S(i, j) % d_.S(t, t) != 0) {
              bad = i;
              break;
            }
        if (!bad) break;
        add_row(t, *bad, Scalar(1));
      }
      if (d_.S(t, t) < 0) negate_row(t);
    }
    d_.rank = t;
    return std::move(d_);
  }

 private:
  // Pivot search over the trailing block; smallest nonzero absolute value wins.
  bool move_smallest_to(Index t, Index, Index rows, Index cols) {
    std::optional<std::pair<Index, Index>> best;
    Scalar best_abs = 0;
    for (Index j = t; j < cols; ++j)
      for (Index i = t; i < rows; ++i) {
        const Scalar& v = d_.S(i, j);
        if (v == 0) continue;
        Scalar a = abs_value(v);
        if (!best || a < best_abs) {
          best = {i, j};
          best_abs = a;
          if (best_abs == 1) break;
        }
      }
    if (!best) return false;
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  // One elimination sweep. Returns true when row t and column t are clear;
  // otherwise moves the new smallest entry of the pivot row/column to (t, t).
  bool clear_row_and_column(Index t) {
    const Index rows = d_.S.rows();
    const Index cols = d_.S.cols();
    bool clean = true;
    for (Index i = t + 1; i < rows; ++i) {
      if (d_.S(i, t) == 0) continue;
      Scalar q = d_.S(i, t) / d_.S(t, t);
      if (q != 0) add_row(i, t, Scalar(-q));
      if (d_.S(i, t) != 0) clean = false;
    }
    for (Index j = t + 1; j < cols; ++j) {
      if (d_.S(t, j) == 0) continue;
      Scalar q = d_.S(t, j) / d_.S(t, t);
      if (q != 0) add_col(j, t, Scalar(-q));
      if (d_.S(t, j) != 0) clean = false;
    }
    if (clean) return true;
    Index bi = t, bj = t;
    Scalar best = abs_value(d_.S(t, t));
    for (Index i = t + 1; i < rows; ++i)
      if (d_.S(i, t) != 0 && abs_value(d_.S(i, t)) < best) {
        best = abs_value(d_.S(i, t));
        bi = i;
        bj = t;
      }
    for (Index j = t + 1; j < cols; ++j)
      if (d_.S(t, j) != 0 && abs_value(d_.S(t, j)) < best) {
        best = abs_value(d_.S(t, j));
        bi = t;
        bj = j;
      }
    swap_rows(t, bi);
    swap_cols(t, bj);
    return false;
  }

  // row_i += c * row_k
  void add_row(Index i, Index k, const Scalar& c) {
    d_.S.row(i) += c * d_.S.row(k);
    d_.U.row(i) += c * d_.U.row(k);
    d_.U_inverse.col(k) -= c * d_.U_inverse.col(i);
  }
  // col_j += c * col_k
  void add_col(Index j, Index k, const Scalar& c) {
    d_.S.col(j) += c * d_.S.col(k);
    d_.V.col(j) += c * d_.V.col(k);
    d_.V_inverse.row(k) -= c * d_.V_inverse.row(j);
  }
  void swap_rows(Index a, Index b) {
    if (a == b) return;
    d_.S.row(a).swap(d_.S.row(b));
    d_.U.row(a).swap(d_.U.row(b));
    d_.U_inverse.col(a).swap(d_.U_inverse.col(b));
  }
  void swap_cols(Index a, Index b) {
    if (a == b) return;
    d_.S.col(a).swap(d_.S.col(b));
    d_.V.col(a).swap(d_.V.col(b));
    d_.V_inverse.row(a).swap(d_.V_inverse.row(b));
  }
  void negate_row(Index i) {
    d_.S.row(i) = -d_.S.row(i);
    d_.U.row(i) = -d_.U.row(i);
    d_.U_inverse.col(i) = -d_.U_inverse.col(i);
  }

  SmithDecomposition<Scalar> d_;
};

}  // namespace detail

template <class Scalar>
SmithDecomposition<Scalar> smith_normal_form(const Matrix<Scalar>& m) {
  return detail::SmithReducer<Scalar>(m).run();
}

/// Solves A * X == B over the integers for every column of B at once.
/// Returns nothing if some column has no integer solution.
template <class Scalar>
std::optional<Matrix<Scalar>> solve_with(const SmithDecomposition<Scalar>& snf, const Matrix<Scalar>& b) {
  const Index n = snf.V.rows();
  Matrix<Scalar> y = snf.U * b;
  Matrix<Scalar> z = Matrix<Scalar>::Zero(n, b.cols());
  for (Index i = 0; i < y.rows(); ++i) {
    for (Index c = 0; c < b.cols(); ++c) {
      if (i < snf.rank) {
        if (y(i, c) % snf.S(i, i) != 0) return std::nullopt;
        z(i, c) = y(i, c) / snf.S(i, i);
      } else if (y(i, c) != 0) {
        return std::nullopt;
      }
    }
  }
  return Matrix<Scalar>(snf.V * z);
}

template <class Scalar>
std::optional<Matrix<Scalar>> solve_integer_system(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows()) return std::nullopt;
  auto x = solve_with(smith_normal_form(a), b);
  if (x && !(a * *x == b)) return std::nullopt;
  return x;
}

template <class Scalar>
std::optional<Vector<Scalar>> solve_integer_system(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  auto x = solve_integer_system(a, Matrix<Scalar>(b));
  if (!x) return std::nullopt;
  return Vector<Scalar>(x->col(0));
}

/// Columns form a basis of {x : M x = 0} over the integers (a saturated lattice).
template <class Scalar>
Matrix<Scalar> integer_kernel(const Matrix<Scalar>& m) {
  auto snf = smith_normal_form(m);
  return snf.V.rightCols(m.cols() - snf.rank);
}

/// Exact inverse of a unimodular matrix, or nothing.
template <class Scalar>
std::optional<Matrix<Scalar>> integer_inverse(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto snf = smith_normal_form(m);
  if (snf.rank != m.rows()) return std::nullopt;
  for (Index i = 0; i < snf.rank; ++i)
    if (snf.S(i, i) != 1) return std::nullopt;
  return Matrix<Scalar>(snf.V * snf.U);
}

}  // namespace dk
