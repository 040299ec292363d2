#pragma once

#include "dk/chain_complex.hpp"

#include <vector>

namespace dk {

/// H_n = ker d_n / im d_{n+1}, presented as Z^free_rank plus cyclic torsion.
/// generators holds one cycle per summand, torsion summands first.
struct HomologyGroup {
  int degree = 0;
  Index free_rank = 0;
  std::vector<Integer> torsion;
  IntMatrix generators;

  // Presentation data used to read off coordinates of arbitrary cycles.
  IntMatrix cycle_basis;        // K: columns span ker d_n
  IntMatrix coordinate_change;  // U_Y with U_Y Y V_Y diagonal, Y = relations in K-coordinates
  std::vector<Index> kept_rows; // rows of U_Y giving the summand coordinates, in generator order

  Index summand_count() const { return static_cast<Index>(torsion.size()) + free_rank; }
  /// Order of summand k, 0 for free summands.
  Integer order(Index k) const;
  /// Coordinates of a cycle z in C_n; torsion entries are reduced.
  IntVector coordinates(const IntVector& z) const;
};

/// Requires n + 1 <= C.max_degree; throws RangeError otherwise.
HomologyGroup homology(const ChainComplex& c, int n);

/// The matrix of H_n(f) between the presentations of source and target.
IntMatrix induced_map_on_homology(const ChainMap& f, int n);
IntMatrix induced_map_on_homology(const ChainMap& f, const HomologyGroup& source, const HomologyGroup& target);

}  // namespace dk
