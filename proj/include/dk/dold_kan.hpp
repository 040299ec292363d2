#pragma once

#include "dk/bialgebra.hpp"
#include "dk/chain_complex.hpp"
#include "dk/eilenberg_zilber.hpp"
#include "dk/simplicial_module.hpp"

#include <map>
#include <memory>

namespace dk {

/// Gamma(C) up to level max_degree: level n is the direct sum over monotone
/// surjections sigma : [n] -> [k] of C_k, ordered by k, then sigma
/// lexicographically, then basis index. A structure map theta acts on
/// (sigma, x) by factoring sigma theta = delta tau (tau surjective, delta
/// injective): delta = id gives (tau, x), delta = eps^k gives
/// (tau, (-1)^k d x), anything else gives 0.
/// Requires max_degree <= c.max_degree.
ModulePtr gamma(const ComplexPtr& c, int max_degree);
/// Gamma(f) between the given Gamma objects (which must match f's ends).
SimplicialMap gamma(const ChainMap& f, const ModulePtr& source, const ModulePtr& target);

/// Unit data at a simplicial module A.
struct SimplicialAdjunction {
  ModulePtr module;
  NormalizedChains normalized;
  MooreModel moore;
  ModulePtr gamma_of_normalized;  // Gamma N A
  SimplicialMap psi;              // Gamma N A -> A, (sigma, x) -> A(sigma) S x
  SimplicialMap unit;             // A -> Gamma N A, the inverse of psi
};

/// Counit data at a chain complex C.
struct ChainAdjunction {
  ComplexPtr complex;
  ModulePtr gamma;
  NormalizedChains normalized;  // N Gamma C
  ChainMap counit;              // N Gamma C -> C
  ChainMap counit_inverse;
};

/// Throws ConstructionError if psi or the counit fails to be invertible.
SimplicialAdjunction build_adjunction(const ModulePtr& a);
ChainAdjunction build_adjunction(const ComplexPtr& c, int max_degree);

/// eps_{NA} after N(eta_A) is the identity of N A.
VerificationReport check_triangle_n(const ModulePtr& a);
/// Gamma(eps_C) after eta_{Gamma C} is the identity of Gamma C.
VerificationReport check_triangle_gamma(const ComplexPtr& c, int max_degree);
/// Gamma C satisfies the simplicial identities.
VerificationReport check_gamma_valid(const ComplexPtr& c, int max_degree);
/// The counit N Gamma C -> C and the unit at Gamma C are unimodular chain and
/// simplicial maps, so N Gamma C is isomorphic to C.
VerificationReport check_counit_iso(const ComplexPtr& c, int max_degree);

/// Structures transferred from (AW, nabla) on N to Gamma:
///   lax   l(X, Y) = Gamma((eps (x) eps) o AW) o eta : Gamma X (x) Gamma Y -> Gamma(X (x) Y)
///   colax c(X, Y) = eta^{-1} o Gamma(nabla) o Gamma(eps^{-1} (x) eps^{-1})
/// Caches Gamma objects, adjunction data and chain tensors per complex.
class GammaWorkspace {
 public:
  explicit GammaWorkspace(int max_degree, MonoidalConventions conv = {}) : max_degree_(max_degree), chains_(conv) {}

  int max_degree() const { return max_degree_; }
  ChainWorkspace& chains() { return chains_; }

  ModulePtr gamma(const ComplexPtr& c);
  ComplexPtr tensor(const ComplexPtr& x, const ComplexPtr& y);
  const ChainAdjunction& counit(const ComplexPtr& c);
  const SimplicialAdjunction& unit(const ModulePtr& a);

  SimplicialMap lax(const ComplexPtr& x, const ComplexPtr& y);
  SimplicialMap colax(const ComplexPtr& x, const ComplexPtr& y);

  /// Recovers a colax structure on N from the transferred lax one:
  /// eps_{NA (x) NB} o N(l(NA, NB) o (eta_A (x) eta_B)).
  ChainMap colax_from_lax(const ModulePtr& a, const ModulePtr& b);

 private:
  using Key = std::pair<const void*, const void*>;

  int max_degree_;
  ChainWorkspace chains_;
  std::vector<ComplexPtr> keep_alive_;
  std::map<const void*, ModulePtr> gammas_;
  std::map<Key, ComplexPtr> tensors_;
  std::map<const void*, ChainAdjunction> counits_;
  std::map<const void*, SimplicialAdjunction> units_;
  std::map<Key, SimplicialMap> lax_, colax_;
};

SimplicialMap transfer_colax_to_lax(GammaWorkspace& ws, const ComplexPtr& x, const ComplexPtr& y);

struct TransferredPair {
  SimplicialMap colax;
  SimplicialMap lax;
};
TransferredPair pair_transfer(GammaWorkspace& ws, const ComplexPtr& x, const ComplexPtr& y);

/// Gamma with the transferred structures, as a functor for the bialgebra harness.
struct GammaFunctor {
  using Object = ComplexPtr;
  using Map = SimplicialMap;

  GammaWorkspace& ws;

  Object tensor(const Object& a, const Object& b) { return ws.tensor(a, b); }
  Map lax(const Object& a, const Object& b) { return ws.lax(a, b); }
  Map colax(const Object& a, const Object& b) { return ws.colax(a, b); }
  Map image_of_middle_swap(const Object& a, const Object& b, const Object& c, const Object& d);
  Map target_tensor(const Map& f, const Map& g) { return dk::tensor(f, g, ws.chains().tensor(f.source, g.source),
                                                                    ws.chains().tensor(f.target, g.target)); }
  Map target_middle_swap(const Object& a, const Object& b, const Object& c, const Object& d);
  Map compose(const Map& f, const Map& g) { return dk::compose(f, g); }
  void compare(VerificationReport& r, const Map& f, const Map& g, int top);
  std::string describe(const Object& a) { return a->name; }
};

static_assert(BialgebraFunctor<GammaFunctor>);

/// Checks on the transferred structures.
VerificationReport check_colax_lax_roundtrip(GammaWorkspace& ws, const ModulePtr& a, const ModulePtr& b);
/// l after c is the identity of Gamma(X (x) Y).
VerificationReport check_transfer_inverse(GammaWorkspace& ws, const ComplexPtr& x, const ComplexPtr& y);
VerificationReport check_transfer_lax_associative(GammaWorkspace& ws, const ComplexPtr& x, const ComplexPtr& y,
                                                  const ComplexPtr& z);
VerificationReport check_transfer_bialgebra(GammaWorkspace& ws, const ComplexPtr& x, const ComplexPtr& y,
                                            const ComplexPtr& z, const ComplexPtr& w);

}  // namespace dk
