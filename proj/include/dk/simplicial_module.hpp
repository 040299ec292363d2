#pragma once

#include "dk/delta.hpp"
#include "dk/integer.hpp"
#include "dk/report.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dk {

/// A simplicial abelian group known up to level max_degree, free of rank
/// ranks[n] at level n. faces[n][i] is d_i : X_n -> X_{n-1} (n >= 1);
/// degeneracies[n][j] is s_j : X_n -> X_{n+1} (n < max_degree).
struct SimplicialModule {
  int max_degree = 0;
  std::vector<Index> ranks;
  std::vector<std::vector<SparseMatrix>> faces;
  std::vector<std::vector<SparseMatrix>> degeneracies;
  std::vector<std::vector<std::string>> labels;
  std::string name;

  Index rank(int n) const { return ranks.at(static_cast<std::size_t>(n)); }
  const SparseMatrix& face(int n, int i) const;
  const SparseMatrix& degeneracy(int n, int j) const;
  const std::vector<std::string>& basis_labels(int n) const { return labels.at(static_cast<std::size_t>(n)); }

  /// True when every degeneracy sends each basis element to a basis element.
  /// Linearizations of simplicial sets and tensors of them have this property.
  bool set_like_degeneracies() const;
};

using ModulePtr = std::shared_ptr<const SimplicialModule>;

/// Throws ConstructionError when a matrix has the wrong shape or a level is missing.
void check_shapes(const SimplicialModule& a);

/// Levelwise matrices f_n : A_n -> B_n.
struct SimplicialMap {
  ModulePtr source;
  ModulePtr target;
  std::vector<SparseMatrix> levels;

  int max_degree() const { return static_cast<int>(levels.size()) - 1; }
  const SparseMatrix& at(int n) const { return levels.at(static_cast<std::size_t>(n)); }
};

SimplicialMap identity_map(const ModulePtr& a);
/// f after g.
SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g);
/// Exact levelwise inverse; throws ConstructionError if some level is not unimodular.
SimplicialMap inverse(const SimplicialMap& f);
/// Reports where f fails to commute with a face or a degeneracy.
VerificationReport check_simplicial_map(const SimplicialMap& f);

/// The matrix of A(w) : A_{w.target_rank()} -> A_{w.source_rank()}.
SparseMatrix apply_word(const SimplicialModule& a, const OperatorWord& w);
SparseMatrix apply_morphism(const SimplicialModule& a, const DeltaMorphism& f);

ModulePtr free_on_standard_simplex(int p, int max_degree);
ModulePtr constant_z(int max_degree);

/// Multiplication table of a finite monoid on {0, .., m-1}; names are optional labels.
struct MonoidTable {
  std::vector<std::vector<int>> product;
  std::vector<std::string> names;

  int size() const { return static_cast<int>(product.size()); }
  int operator()(int a, int b) const { return product[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  /// Throws ConstructionError unless the table is a monoid; returns the unit.
  int validated_unit() const;
  bool commutative() const;
};

MonoidTable cyclic_group(int order);
MonoidTable trivial_monoid();

/// The linearized nerve: level n has basis M^n in lexicographic order.
ModulePtr free_on_nerve(const MonoidTable& m, int max_degree);

/// Levelwise tensor product; basis pairs are row-major (A outer, B inner).
ModulePtr tensor(const ModulePtr& a, const ModulePtr& b);
SimplicialMap tensor(const SimplicialMap& f, const SimplicialMap& g, const ModulePtr& source, const ModulePtr& target);
SimplicialMap tensor(const SimplicialMap& f, const SimplicialMap& g);

/// Permutation of Kronecker factors: a basis tuple (x_0, .., x_{k-1}) of a
/// row-major tensor with factor ranks `ranks` goes to the tuple whose position
/// m holds x_{order[m]}.
SparseMatrix factor_permutation(const std::vector<Index>& ranks, const std::vector<int>& order);

SimplicialMap swap(const ModulePtr& a, const ModulePtr& b);
/// (A (x) B) (x) (C (x) D) -> (A (x) C) (x) (B (x) D).
SimplicialMap middle_swap(const ModulePtr& a, const ModulePtr& b, const ModulePtr& c, const ModulePtr& d);

/// Per-clause instance counters filled by validate. Clause k refers to:
/// 0: d_i d_j = d_{j-1} d_i (i < j), 1: d_i s_j = s_{j-1} d_i (i < j),
/// 2: d_j s_j = d_{j+1} s_j = 1, 3: d_i s_j = s_j d_{i-1} (i > j+1),
/// 4: s_i s_j = s_{j+1} s_i (i <= j).
struct ClauseTally {
  std::size_t instances[5] = {0, 0, 0, 0, 0};
  std::size_t nontrivial[5] = {0, 0, 0, 0, 0};
};

extern const char* const kClauseNames[5];

VerificationReport validate(const SimplicialModule& a, ClauseTally* tally = nullptr);

std::string serialize(const SimplicialModule& a);

}  // namespace dk
