#include "dk/homology.hpp"

#include "dk/errors.hpp"
#include "dk/smith.hpp"

namespace dk {

Integer HomologyGroup::order(Index k) const {
  if (k < static_cast<Index>(torsion.size())) return torsion[static_cast<std::size_t>(k)];
  return 0;
}

IntVector HomologyGroup::coordinates(const IntVector& z) const {
  IntVector c = IntVector::Zero(summand_count());
  if (cycle_basis.cols() == 0) return c;
  auto k = solve_integer_system(cycle_basis, z);
  if (!k) throw std::invalid_argument("coordinates: vector is not a cycle");
  IntVector w = coordinate_change * *k;
  for (Index s = 0; s < summand_count(); ++s) {
    Integer v = w(kept_rows[static_cast<std::size_t>(s)]);
    const Integer ord = order(s);
    if (ord != 0) {
      v %= ord;
      if (v < 0) v += ord;
    }
    c(s) = v;
  }
  return c;
}

HomologyGroup homology(const ChainComplex& c, int n) {
  if (n < 0 || n + 1 > c.max_degree)
    throw RangeError("homology: degree " + std::to_string(n) + " needs the complex up to degree " + std::to_string(n + 1));
  HomologyGroup h;
  h.degree = n;
  const Index r = c.rank(n);
  h.cycle_basis = n == 0 ? IntMatrix(IntMatrix::Identity(r, r)) : integer_kernel(to_dense(c.d(n)));
  const Index k = h.cycle_basis.cols();
  // Boundaries expressed in the cycle basis: K Y = d_{n+1}.
  IntMatrix y = IntMatrix::Zero(k, c.rank(n + 1));
  if (k > 0 && c.rank(n + 1) > 0) {
    auto solved = solve_integer_system(h.cycle_basis, to_dense(c.d(n + 1)));
    if (!solved) throw std::logic_error("homology: boundaries are not cycles (d^2 != 0)");
    y = *solved;
  }
  auto snf = smith_normal_form(y);
  h.coordinate_change = snf.U;
  IntMatrix basis = h.cycle_basis * snf.U_inverse;
  std::vector<Index> columns;
  for (Index i = 0; i < snf.rank; ++i)
    if (snf.S(i, i) != 1) {
      h.torsion.push_back(snf.S(i, i));
      columns.push_back(i);
    }
  for (Index i = snf.rank; i < k; ++i) columns.push_back(i);
  h.free_rank = k - snf.rank;
  h.generators = IntMatrix(r, static_cast<Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) h.generators.col(static_cast<Index>(j)) = basis.col(columns[j]);
  h.kept_rows = std::move(columns);
  return h;
}

IntMatrix induced_map_on_homology(const ChainMap& f, const HomologyGroup& source, const HomologyGroup& target) {
  const int n = source.degree;
  if (n > f.valid_range) throw RangeError("induced_map_on_homology: map not valid in degree " + std::to_string(n));
  IntMatrix m(target.summand_count(), source.summand_count());
  IntMatrix images = to_dense(f.at(n)) * source.generators;
  for (Index j = 0; j < source.summand_count(); ++j) m.col(j) = target.coordinates(IntVector(images.col(j)));
  return m;
}

IntMatrix induced_map_on_homology(const ChainMap& f, int n) {
  if (n + 1 > f.valid_range) throw RangeError("induced_map_on_homology: map must be valid through degree n + 1");
  return induced_map_on_homology(f, homology(*f.source, n), homology(*f.target, n));
}

}  // namespace dk
