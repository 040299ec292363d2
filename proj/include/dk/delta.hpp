#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dk {

/// A weakly monotone map [source_rank] -> [target_rank] in the simplex category.
class DeltaMorphism {
 public:
  DeltaMorphism(int target_rank, std::vector<int> values);

  static DeltaMorphism identity(int n);
  /// Coface epsilon^i : [n-1] -> [n], the injection whose image misses i.
  static DeltaMorphism coface(int n, int i);
  /// Codegeneracy eta^j : [n+1] -> [n], the surjection hitting j twice.
  static DeltaMorphism codegeneracy(int n, int j);

  int source_rank() const { return static_cast<int>(values_.size()) - 1; }
  int target_rank() const { return target_rank_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int x) const { return values_[static_cast<std::size_t>(x)]; }

  bool is_injective() const;
  bool is_surjective() const;

  friend bool operator==(const DeltaMorphism&, const DeltaMorphism&) = default;

 private:
  int target_rank_;
  std::vector<int> values_;
};

/// f after g. Throws CompositionError unless f.source_rank() == g.target_rank().
DeltaMorphism compose(const DeltaMorphism& f, const DeltaMorphism& g);

/// All monotone maps [q] -> [p] in lexicographic order of their value lists.
std::vector<DeltaMorphism> monotone_maps(int q, int p);
/// All monotone surjections [n] -> [k], lexicographic.
std::vector<DeltaMorphism> surjections(int n, int k);

std::string to_string(const DeltaMorphism& f);

enum class GeneratorKind { Face, Degeneracy };

/// Face(i) stands for epsilon^i, Degeneracy(j) for eta^j.
struct Generator {
  GeneratorKind kind;
  int index;

  static Generator face(int i) { return {GeneratorKind::Face, i}; }
  static Generator degeneracy(int j) { return {GeneratorKind::Degeneracy, j}; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A composable word of simplex-category generators, stored in composition
/// order: the last generator is applied first. Acting contravariantly on a
/// simplicial object, Face(i) becomes d_i and Degeneracy(j) becomes s_j.
class OperatorWord {
 public:
  /// Throws CompositionError when adjacent generators have incompatible ranks.
  OperatorWord(int source_rank, std::vector<Generator> generators);

  static OperatorWord identity(int n) { return OperatorWord(n, {}); }

  int source_rank() const { return source_rank_; }
  int target_rank() const { return target_rank_; }
  const std::vector<Generator>& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }

  /// True iff the word has the shape eps^{i_s}..eps^{i_1} eta^{j_1}..eta^{j_t}
  /// with i_1 < ... < i_s and j_1 < ... < j_t.
  bool canonical() const;

  friend bool operator==(const OperatorWord&, const OperatorWord&) = default;

 private:
  int source_rank_;
  int target_rank_;
  std::vector<Generator> generators_;
};

DeltaMorphism evaluate(const OperatorWord& w);

/// The unique word eps^{i_s}..eps^{i_1} eta^{j_1}..eta^{j_t}: the i's are the
/// values missed by f, the j's the positions with f(j) == f(j+1).
OperatorWord canonical_factorization(const DeltaMorphism& f);

/// Rewrites w into canonical form with the cosimplicial identities, always
/// fixing the leftmost out-of-order adjacent pair.
OperatorWord normalize(const OperatorWord& w);

/// The word for f after g.
OperatorWord concatenate(const OperatorWord& f, const OperatorWord& g);

/// Parses `d<i>` / `s<j>` tokens read as operators on simplices, left to right
/// meaning composition: "d0 s0" is x -> d_0(s_0(x)). `level` is the dimension of x.
OperatorWord parse_action_word(std::string_view text, int level);
/// Inverse of parse_action_word.
std::string to_action_text(const OperatorWord& w);

enum class FaceEnd { Front, Back };

struct CommutedFaces {
  std::vector<int> degeneracies;  // sorted, the S' of S_{S'} d^{residual}
  int residual_power;
  friend bool operator==(const CommutedFaces&, const CommutedFaces&) = default;
};

/// Moves a power of d_0 (Front) or of the last face (Back) to the right of
/// S = s_{a_k}..s_{a_1} applied at total level `level`:
///   d_0^t S_a       = S_{a'}  d_0^{t - #{a < t}}
///   d_last^s S_a    = S_{a''} d_last^{s - #{a >= level - s}}
/// S must be a strictly increasing subset of [0, level-1].
CommutedFaces commute_faces_past_degeneracies(FaceEnd kind, int power, const std::vector<int>& degeneracies,
                                              int level);

/// The action word d^power S applied to simplices of dimension level - |S|.
OperatorWord faces_after_degeneracies(FaceEnd kind, int power, const std::vector<int>& degeneracies, int level);

}  // namespace dk
