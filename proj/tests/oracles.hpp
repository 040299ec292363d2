#pragma once

// Independent reference computations and hand-rolled generators for the
// property tests. Nothing here calls into the code under test except to read
// basis labels and build inputs.

#include "dk/chain_complex.hpp"
#include "dk/integer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using dk::Index;
using dk::Integer;

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Sum of the signs of all (k, l)-shuffles: the Gaussian binomial at q = -1.
inline long long shuffle_sign_sum(int k, int l) {
  if (k % 2 == 1 && l % 2 == 1) return 0;
  return binomial((k + l) / 2, k / 2);
}

// Simplices of the standard simplex as vertex tuples.
using Simplex = std::vector<int>;

inline std::string label(const Simplex& s) {
  std::string out = "<";
  for (int v : s) out += std::to_string(v);
  return out + ">";
}

inline Simplex front(const Simplex& s, int p) { return Simplex(s.begin(), s.begin() + p + 1); }
inline Simplex back(const Simplex& s, int q) { return Simplex(s.end() - q - 1, s.end()); }

/// s_j repeats vertex j.
inline Simplex degenerate(Simplex s, int j) {
  s.insert(s.begin() + j, s[static_cast<std::size_t>(j)]);
  return s;
}

using Chain = std::map<std::string, Integer>;

inline void add(Chain& c, const std::string& key, const Integer& v) {
  c[key] += v;
  if (c[key] == 0) c.erase(key);
}

/// Alexander-Whitney on x | y of level n, straight from the vertex formula.
inline Chain aw(const Simplex& x, const Simplex& y) {
  Chain out;
  const int n = static_cast<int>(x.size()) - 1;
  for (int p = 0; p <= n; ++p) add(out, label(front(x, p)) + " (x) " + label(back(y, n - p)), 1);
  return out;
}

/// The shuffle map on x (x) y: sum over k-subsets alpha of [0, k+l-1] of
/// sign * (s_beta x) | (s_alpha y), degeneracies applied in increasing order.
inline Chain nabla(const Simplex& x, const Simplex& y) {
  Chain out;
  const int k = static_cast<int>(x.size()) - 1;
  const int l = static_cast<int>(y.size()) - 1;
  const int m = k + l;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> alpha, beta;
    for (int i = 0; i < m; ++i) ((mask >> i) & 1u ? alpha : beta).push_back(i);
    int inversions = 0;
    for (int a : alpha)
      for (int b : beta) inversions += a > b;
    Simplex xs = x, ys = y;
    for (int b : beta) xs = degenerate(xs, b);
    for (int a : alpha) ys = degenerate(ys, a);
    add(out, label(xs) + "|" + label(ys), inversions % 2 ? -1 : 1);
  }
  return out;
}

/// All simplices of Delta^p at level n in lexicographic order.
inline std::vector<Simplex> simplices(int p, int n) {
  std::vector<Simplex> out;
  Simplex s(static_cast<std::size_t>(n) + 1, 0);
  while (true) {
    out.push_back(s);
    int i = n;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == p) --i;
    if (i < 0) break;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j <= n; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(i)];
  }
  return out;
}

/// Reads a column of a matrix as a label -> value chain.
inline Chain column(const dk::SparseMatrix& m, Index col, const std::vector<std::string>& row_labels) {
  Chain out;
  for (dk::SparseMatrix::InnerIterator it(m, col); it; ++it) add(out, row_labels[static_cast<std::size_t>(it.row())], it.value());
  return out;
}

inline Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Integer determinant(dk::IntMatrix m) {
  // Bareiss fraction-free elimination.
  const Index n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, previous = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline void subsets(int n, int k, int start, std::vector<Index>& cur, std::vector<std::vector<Index>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Invariant factors from determinantal divisors: d_k = gcd of the k x k minors.
inline std::vector<Integer> invariant_factors(const dk::IntMatrix& m) {
  std::vector<Integer> divisors{1};
  const int top = static_cast<int>(std::min(m.rows(), m.cols()));
  for (int k = 1; k <= top; ++k) {
    std::vector<std::vector<Index>> rows, cols;
    std::vector<Index> cur;
    subsets(static_cast<int>(m.rows()), k, 0, cur, rows);
    subsets(static_cast<int>(m.cols()), k, 0, cur, cols);
    Integer g = 0;
    for (const auto& r : rows)
      for (const auto& c : cols) {
        dk::IntMatrix minor(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) minor(i, j) = m(r[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
        g = gcd(g, determinant(minor));
      }
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<Integer> factors;
  for (std::size_t k = 1; k < divisors.size(); ++k) factors.push_back(divisors[k] / divisors[k - 1]);
  return factors;
}

/// Seeded generator with the few draws the tests need.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  dk::IntMatrix matrix(Index rows, Index cols, int bound) {
    dk::IntMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = uniform(-bound, bound);
    return m;
  }

  /// A product of elementary row operations, with its inverse.
  std::pair<dk::IntMatrix, dk::IntMatrix> unimodular(Index n, int steps) {
    dk::IntMatrix u = dk::IntMatrix::Identity(n, n), inv = dk::IntMatrix::Identity(n, n);
    if (n < 2) return {u, inv};
    for (int s = 0; s < steps; ++s) {
      Index i = uniform(0, static_cast<int>(n) - 1), j = uniform(0, static_cast<int>(n) - 2);
      if (j >= i) ++j;
      const int c = uniform(-2, 2);
      // row_i += c row_j; the inverse subtracts, applied on the other side.
      u.row(i) += Integer(c) * dk::IntMatrix(u.row(j));
      inv.col(j) -= Integer(c) * dk::IntMatrix(inv.col(i));
    }
    return {u, inv};
  }

 private:
  std::mt19937_64 rng_;
};

/// A complex assembled from elementary pieces and scrambled by unimodular
/// changes of basis, together with its homology read off from the pieces.
struct KnownComplex {
  dk::ComplexPtr complex;
  std::vector<Index> free_rank;               // per degree
  std::vector<std::vector<Integer>> torsion;  // per degree, sorted
};

inline KnownComplex random_complex(Gen& g, int max_degree, int pieces) {
  std::vector<Index> ranks(static_cast<std::size_t>(max_degree) + 1, 0);
  struct Piece {
    int degree;
    int m;  // 0: Z in `degree`; otherwise Z -m-> Z from degree+1 to degree
  };
  std::vector<Piece> list;
  for (int i = 0; i < pieces; ++i) {
    const int deg = g.uniform(0, max_degree - 1);
    const int kind = g.uniform(0, 3);
    list.push_back({deg, kind == 0 ? 0 : kind});
  }
  KnownComplex k;
  k.free_rank.assign(ranks.size(), 0);
  k.torsion.assign(ranks.size(), {});
  std::vector<std::vector<std::pair<int, Index>>> slots(ranks.size());  // (piece, position)
  for (std::size_t p = 0; p < list.size(); ++p) {
    const auto& pc = list[p];
    if (pc.m == 0) {
      slots[static_cast<std::size_t>(pc.degree)].push_back({static_cast<int>(p), ranks[static_cast<std::size_t>(pc.degree)]++});
      ++k.free_rank[static_cast<std::size_t>(pc.degree)];
    } else {
      slots[static_cast<std::size_t>(pc.degree)].push_back({static_cast<int>(p), ranks[static_cast<std::size_t>(pc.degree)]++});
      slots[static_cast<std::size_t>(pc.degree) + 1].push_back(
          {static_cast<int>(p), ranks[static_cast<std::size_t>(pc.degree) + 1]++});
      if (pc.m > 1) k.torsion[static_cast<std::size_t>(pc.degree)].push_back(pc.m);
    }
  }
  std::vector<dk::IntMatrix> d;
  for (int n = 1; n <= max_degree; ++n) {
    dk::IntMatrix m = dk::IntMatrix::Zero(ranks[static_cast<std::size_t>(n) - 1], ranks[static_cast<std::size_t>(n)]);
    for (const auto& [piece, col] : slots[static_cast<std::size_t>(n)]) {
      const auto& pc = list[static_cast<std::size_t>(piece)];
      if (pc.m == 0 || pc.degree != n - 1) continue;
      for (const auto& [piece2, row] : slots[static_cast<std::size_t>(n) - 1])
        if (piece2 == piece) m(row, col) = pc.m;
    }
    d.push_back(m);
  }
  std::vector<std::pair<dk::IntMatrix, dk::IntMatrix>> basis;
  for (Index r : ranks) basis.push_back(g.unimodular(r, 6));
  std::vector<dk::SparseMatrix> diffs;
  for (int n = 1; n <= max_degree; ++n)
    diffs.push_back(dk::to_sparse(basis[static_cast<std::size_t>(n) - 1].first * d[static_cast<std::size_t>(n) - 1] *
                                  basis[static_cast<std::size_t>(n)].second));
  for (auto& t : k.torsion) std::sort(t.begin(), t.end());
  k.complex = dk::make_complex(ranks, diffs, "random");
  return k;
}

}  // namespace oracle
