#pragma once

#include "dk/conventions.hpp"
#include "dk/integer.hpp"
#include "dk/report.hpp"
#include "dk/simplicial_module.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dk {

/// A homologically graded complex known in degrees 0..max_degree.
/// differentials[n] is d_n : C_n -> C_{n-1}; d_0 has zero rows.
struct ChainComplex {
  int max_degree = 0;
  std::vector<Index> ranks;
  std::vector<SparseMatrix> differentials;
  std::vector<std::vector<std::string>> labels;
  std::string name;

  Index rank(int n) const { return n < 0 ? 0 : ranks.at(static_cast<std::size_t>(n)); }
  const SparseMatrix& d(int n) const;
  /// Basis labels of degree n, or nullptr when the complex carries none.
  const std::vector<std::string>* basis_labels(int n) const;
};

using ComplexPtr = std::shared_ptr<const ChainComplex>;

/// Builds a complex from its differentials d_1..d_D (ranks are inferred from
/// `ranks`). Throws ConstructionError on shape mismatch; d^2 is not checked.
ComplexPtr make_complex(std::vector<Index> ranks, std::vector<SparseMatrix> differentials_from_1, std::string name = {});

/// Reports every nonzero entry of d_n d_{n+1}.
VerificationReport check_square_zero(const ChainComplex& c);

/// Degreewise matrices f_n : source_n -> target_n for n <= valid_range.
/// Lifts and sections are stored in the same shape even when they are not
/// chain maps; check_chain_map decides that.
struct ChainMap {
  ComplexPtr source;
  ComplexPtr target;
  std::vector<SparseMatrix> components;
  int valid_range = 0;

  const SparseMatrix& at(int n) const;
};

ChainMap identity_chain_map(const ComplexPtr& c);
ChainMap zero_chain_map(const ComplexPtr& source, const ComplexPtr& target);
/// f after g; the valid range is the smaller one.
ChainMap compose(const ChainMap& f, const ChainMap& g);
ChainMap operator-(const ChainMap& f, const ChainMap& g);
ChainMap operator+(const ChainMap& f, const ChainMap& g);
/// Exact degreewise inverse; throws ConstructionError unless unimodular.
ChainMap inverse(const ChainMap& f);

VerificationReport check_chain_map(const ChainMap& f, const std::string& name = "chain-map");
/// Compares f and g degreewise on their common valid range.
void compare_maps(VerificationReport& report, const ChainMap& f, const ChainMap& g, int top = -1);

/// d_n = sum_i (-1)^i d_i.
ComplexPtr unnormalized_chains(const ModulePtr& a);
/// C(f) for a simplicial map.
ChainMap chains_of(const SimplicialMap& f, const ComplexPtr& source, const ComplexPtr& target);

/// Degree n of a tensor complex is the direct sum over p = 0..n of
/// A_p (x) B_{n-p}, blocks in ascending p, each block row-major.
ComplexPtr tensor_chain(const ComplexPtr& a, const ComplexPtr& b);
/// Offsets of the p-blocks of degree n of a (x) b; size n + 2, last = total.
std::vector<Index> block_offsets(const ChainComplex& a, const ChainComplex& b, int n);

/// f (x) g between tensor complexes, without signs (all maps have degree 0).
ChainMap tensor_maps(const ChainMap& f, const ChainMap& g, const ComplexPtr& source, const ComplexPtr& target);
ChainMap tensor_maps(const ChainMap& f, const ChainMap& g);

/// x (x) y -> (-1)^{pq} y (x) x.
ChainMap koszul_swap(const ComplexPtr& a, const ComplexPtr& b, const MonoidalConventions& conv = {});
/// (A (x) B) (x) C -> A (x) (B (x) C).
ChainMap associator(const ComplexPtr& a, const ComplexPtr& b, const ComplexPtr& c);
/// (A (x) B) (x) (C (x) D) -> (A (x) C) (x) (B (x) D) with sign (-1)^{|b||c|}.
ChainMap middle_swap(const ComplexPtr& a, const ComplexPtr& b, const ComplexPtr& c, const ComplexPtr& d,
                     const MonoidalConventions& conv = {});
/// A (x) Z[0] -> A and Z[0] (x) A -> A, where `unit` is Z in degree 0.
ChainMap right_unitor(const ComplexPtr& a, const ComplexPtr& unit);
ChainMap left_unitor(const ComplexPtr& a, const ComplexPtr& unit);

/// Z concentrated in degree 0, known up to max_degree.
ComplexPtr unit_complex(int max_degree);

/// The normalized chains as the quotient of C(A) by the degenerate subcomplex.
struct NormalizedChains {
  ModulePtr module;
  ComplexPtr unnormalized;
  ComplexPtr complex;
  ChainMap projection;  // C(A) -> N(A), surjective
  ChainMap lift;        // N(A) -> C(A), projection after lift = 1; not a chain map in general
  std::vector<SparseMatrix> degenerate;  // columns span the degenerate part of C(A)_n
};

/// Uses a basis-selection shortcut when the degeneracies permute basis
/// elements and Smith normal form otherwise.
NormalizedChains quotient_chains(const ModulePtr& a);

/// The Moore model: N_n = intersection of ker d_i for i < n with differential
/// (-1)^n d_n, with its basis chosen so that the comparison to the quotient
/// model is the identity matrix.
struct MooreModel {
  ComplexPtr complex;
  ChainMap inclusion;            // Moore -> C(A)
  ChainMap comparison;           // Moore -> quotient model
  ChainMap comparison_inverse;   // quotient model -> Moore
  ChainMap section;              // quotient model -> C(A), lands in the Moore subcomplex
};

/// Dense Smith normal form over the stacked faces; meant for small modules.
MooreModel moore_model(const NormalizedChains& n);

/// N(f) = P f L, together with the descent check P f D = 0.
ChainMap normalized_map(const SimplicialMap& f, const NormalizedChains& source, const NormalizedChains& target,
                        VerificationReport* descent = nullptr);

/// Projection, lift and degenerate generators of N(A) (x) N(B) inside C(A) (x) C(B).
struct TensorQuotient {
  ComplexPtr unnormalized;  // C(A) (x) C(B)
  ComplexPtr complex;       // N(A) (x) N(B)
  ChainMap projection;
  ChainMap lift;
  std::vector<SparseMatrix> degenerate;
};

TensorQuotient tensor_quotient(const NormalizedChains& a, const NormalizedChains& b);

/// h_n : source_n -> target_{n+1} with d h + h d = f - g in degrees < valid_range.
struct ChainHomotopy {
  ChainMap f;
  ChainMap g;
  std::vector<SparseMatrix> components;
  int valid_range = 0;
};

VerificationReport verify_homotopy(const ChainHomotopy& h);

struct HomotopySearchOptions {
  /// Above this many unknowns the joint fallback system is not attempted and
  /// solve_homotopy throws RangeError instead of claiming absence.
  Index max_joint_unknowns = 4000;
};

/// Searches for h with d h + h d = f - g on degrees 0..valid_range-1, where
/// valid_range = min of both maps' ranges and the target truncation minus one.
/// Degree-by-degree solving is tried first; if it gets stuck the whole system
/// is solved at once, so absence is exact.
std::optional<ChainHomotopy> solve_homotopy(const ChainMap& f, const ChainMap& g,
                                            const HomotopySearchOptions& options = {});

std::string serialize(const ChainComplex& c);
std::string serialize(const ChainMap& f);
std::string serialize(const ChainHomotopy& h);

}  // namespace dk
