#pragma once

#include "dk/chain_complex.hpp"
#include "dk/eilenberg_zilber.hpp"
#include "dk/simplicial_module.hpp"

namespace dk {

/// A simplicial ring: multiplication A (x) A -> A and unit Z -> A as
/// simplicial maps (Z is the constant simplicial group).
struct SimplicialRing {
  ModulePtr module;
  SimplicialMap multiplication;
  SimplicialMap unit;
};

/// Z[N M] with the levelwise product of tuples. Throws ConstructionError
/// unless M is a commutative monoid (otherwise the product is not simplicial).
SimplicialRing nerve_ring(const MonoidTable& m, int max_degree);

/// A (x) B with multiplication (m_A (x) m_B) after the middle swap.
SimplicialRing tensor(ChainWorkspace& ws, const SimplicialRing& a, const SimplicialRing& b);

/// Associativity and unit laws of the simplicial ring, levelwise.
VerificationReport check_ring(ChainWorkspace& ws, const SimplicialRing& r);

/// A differential graded algebra: product C (x) C -> C, unit Z[0] -> C.
struct DGAlgebra {
  ComplexPtr complex;
  ChainMap product;
  ChainMap unit;
};

/// C(R) or N(R) with product F(m) after the shuffle map.
DGAlgebra to_dga(ChainWorkspace& ws, const SimplicialRing& r, bool normalized);

VerificationReport check_dga_associative(const DGAlgebra& a, int max_level);
VerificationReport check_dga_unital(const DGAlgebra& a, int max_level);

/// AW after the product of F(A (x) B) against the product of F(A) (x) F(B)
/// (with the Koszul middle swap) after AW (x) AW.
VerificationReport check_aw_multiplicative(ChainWorkspace& ws, const SimplicialRing& a, const SimplicialRing& b,
                                           int max_level, bool normalized = true);

}  // namespace dk
