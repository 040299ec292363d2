#pragma once

#include "dk/chain_complex.hpp"
#include "dk/conventions.hpp"
#include "dk/simplicial_module.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dk {

struct ShuffleEntry {
  std::vector<int> alpha;  // k-subset of {0, .., k+l-1}
  std::vector<int> beta;   // its complement
  int sign = 1;
};

struct ShuffleTable {
  int k = 0;
  int l = 0;
  std::vector<ShuffleEntry> entries;  // alpha in lexicographic order
};

/// Sign is (-1)^#{(a, b) in alpha x beta : a > b} under the default conventions.
ShuffleTable enumerate_shuffles(int k, int l, const MonoidalConventions& conv = {});

/// d_{p+1} .. d_n : A_n -> A_p, the last face applied n - p times.
SparseMatrix back_faces(const SimplicialModule& a, int n, int p);
/// d_0^{n-q} : A_n -> A_q.
SparseMatrix front_faces(const SimplicialModule& a, int n, int q);
/// s_{i_m} .. s_{i_1} : A_level -> A_{level+m}, i_1 applied first.
SparseMatrix degeneracy_string(const SimplicialModule& a, int level, const std::vector<int>& indices);

/// Caches chain complexes, quotient models and tensor modules so that
/// composites over the same objects share their matrices. Not thread-safe.
class ChainWorkspace {
 public:
  explicit ChainWorkspace(MonoidalConventions conv = {}) : conv_(conv) {}

  const MonoidalConventions& conventions() const { return conv_; }

  ModulePtr tensor(const ModulePtr& a, const ModulePtr& b);
  ComplexPtr chains(const ModulePtr& a);
  const NormalizedChains& normalized(const ModulePtr& a);
  const TensorQuotient& tensor_quotient(const ModulePtr& a, const ModulePtr& b);
  /// C(A) (x) C(B), or N(A) (x) N(B).
  ComplexPtr tensor_chains(const ModulePtr& a, const ModulePtr& b, bool normalized);
  /// C(A) or N(A).
  ComplexPtr chains(const ModulePtr& a, bool normalized) { return normalized ? normalized_complex(a) : chains(a); }
  ComplexPtr normalized_complex(const ModulePtr& a) { return normalized(a).complex; }

  /// Alexander-Whitney C(A (x) B) -> C(A) (x) C(B), or its normalized form.
  /// When `descent` is given, the normalized construction records whether
  /// degenerate chains land in the degenerate part.
  ChainMap aw(const ModulePtr& a, const ModulePtr& b, bool normalized, VerificationReport* descent = nullptr);
  /// Eilenberg-MacLane shuffle map C(A) (x) C(B) -> C(A (x) B).
  ChainMap nabla(const ModulePtr& a, const ModulePtr& b, bool normalized, VerificationReport* descent = nullptr);

  /// C or N of a simplicial map between cached objects.
  ChainMap apply(const SimplicialMap& f, bool normalized, VerificationReport* descent = nullptr);

  SimplicialMap swap(const ModulePtr& a, const ModulePtr& b);
  SimplicialMap middle_swap(const ModulePtr& a, const ModulePtr& b, const ModulePtr& c, const ModulePtr& d);

 private:
  using Key = std::pair<const void*, const void*>;

  MonoidalConventions conv_;
  std::vector<ModulePtr> keep_alive_;
  std::map<Key, ModulePtr> tensors_;
  std::map<const void*, std::pair<ModulePtr, ComplexPtr>> chains_;
  std::map<const void*, std::pair<ModulePtr, NormalizedChains>> normalized_;
  std::map<Key, TensorQuotient> tensor_quotients_;
  std::map<Key, ComplexPtr> tensor_chains_;
  std::map<std::pair<Key, bool>, ChainMap> aw_, nabla_;
};

/// Convenience wrappers with a fresh workspace.
ChainMap aw_map(const ModulePtr& a, const ModulePtr& b, bool normalized);
ChainMap shuffle_map(const ModulePtr& a, const ModulePtr& b, bool normalized, const MonoidalConventions& conv = {});

/// AW after nabla against the identity of C(A) (x) C(B) (or N(A) (x) N(B)).
VerificationReport check_aw_nabla_identity(ChainWorkspace& ws, const ModulePtr& a, const ModulePtr& b, bool normalized,
                                           int max_level);
/// nabla_{B,A} after the Koszul swap against C(swap) after nabla_{A,B}.
VerificationReport check_nabla_symmetric(ChainWorkspace& ws, const ModulePtr& a, const ModulePtr& b, bool normalized,
                                         int max_level);
VerificationReport check_aw_chain_map(ChainWorkspace& ws, const ModulePtr& a, const ModulePtr& b, bool normalized,
                                      int max_level);
VerificationReport check_nabla_chain_map(ChainWorkspace& ws, const ModulePtr& a, const ModulePtr& b, bool normalized,
                                         int max_level);
/// Both descend to the quotient model: degenerate chains go to degenerate chains.
VerificationReport check_descent(ChainWorkspace& ws, const ModulePtr& a, const ModulePtr& b, int max_level);
/// Colax associativity of AW on a triple.
VerificationReport check_aw_coassociative(ChainWorkspace& ws, const ModulePtr& a, const ModulePtr& b,
                                          const ModulePtr& c, bool normalized, int max_level);
/// Lax associativity of nabla on a triple.
VerificationReport check_nabla_associative(ChainWorkspace& ws, const ModulePtr& a, const ModulePtr& b,
                                           const ModulePtr& c, bool normalized, int max_level);

struct UnitCoherenceOptions {
  /// The unit comparison maps are unit_scale times the canonical ones; any
  /// value other than 1 is a deliberately wrong unit.
  long long unit_scale = 1;
  bool normalized = true;
};

/// The colax unit diagrams for AW and the lax ones for nabla, against the
/// constant simplicial group Z.
VerificationReport unit_coherence_check(ChainWorkspace& ws, const ModulePtr& a, int max_level,
                                        const UnitCoherenceOptions& options = {});
VerificationReport unit_coherence_check(const ModulePtr& a, const UnitCoherenceOptions& options = {});

/// Up-to-homotopy statements. Each report carries the serialized homotopy as
/// an artifact when one is found and compares induced maps on homology.
VerificationReport check_nabla_aw_homotopy(ChainWorkspace& ws, const ModulePtr& a, const ModulePtr& b, int max_level);
VerificationReport check_aw_symmetry_homotopy(ChainWorkspace& ws, const ModulePtr& a, const ModulePtr& b,
                                              int max_level);

}  // namespace dk
