#include "dk/delta.hpp"

#include "dk/errors.hpp"

#include <algorithm>
#include <sstream>

namespace dk {

DeltaMorphism::DeltaMorphism(int target_rank, std::vector<int> values)
    : target_rank_(target_rank), values_(std::move(values)) {
  if (target_rank_ < 0 || values_.empty()) throw ConstructionError("DeltaMorphism: empty source or negative target");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] < 0 || values_[k] > target_rank_)
      throw ConstructionError("DeltaMorphism: value outside [0, target_rank]");
    if (k > 0 && values_[k] < values_[k - 1]) throw ConstructionError("DeltaMorphism: values not weakly increasing");
  }
}

DeltaMorphism DeltaMorphism::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = k;
  return DeltaMorphism(n, std::move(v));
}

DeltaMorphism DeltaMorphism::coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw ConstructionError("coface index out of range");
  std::vector<int> v;
  for (int k = 0; k < n; ++k) v.push_back(k < i ? k : k + 1);
  return DeltaMorphism(n, std::move(v));
}

DeltaMorphism DeltaMorphism::codegeneracy(int n, int j) {
  if (n < 0 || j < 0 || j > n) throw ConstructionError("codegeneracy index out of range");
  std::vector<int> v;
  for (int k = 0; k <= n + 1; ++k) v.push_back(k <= j ? k : k - 1);
  return DeltaMorphism(n, std::move(v));
}

bool DeltaMorphism::is_injective() const {
  return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

bool DeltaMorphism::is_surjective() const {
  return values_.front() == 0 && values_.back() == target_rank_ &&
         std::adjacent_find(values_.begin(), values_.end(), [](int a, int b) { return b > a + 1; }) == values_.end();
}

DeltaMorphism compose(const DeltaMorphism& f, const DeltaMorphism& g) {
  if (f.source_rank() != g.target_rank()) throw CompositionError("compose: source of f differs from target of g");
  std::vector<int> v;
  v.reserve(g.values().size());
  for (int x : g.values()) v.push_back(f(x));
  return DeltaMorphism(f.target_rank(), std::move(v));
}

namespace {

void monotone_rec(int q, int p, std::vector<int>& cur, std::vector<DeltaMorphism>& out) {
  if (static_cast<int>(cur.size()) == q + 1) {
    out.emplace_back(p, cur);
    return;
  }
  int lo = cur.empty() ? 0 : cur.back();
  for (int v = lo; v <= p; ++v) {
    cur.push_back(v);
    monotone_rec(q, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DeltaMorphism> monotone_maps(int q, int p) {
  std::vector<DeltaMorphism> out;
  std::vector<int> cur;
  monotone_rec(q, p, cur, out);
  return out;
}

std::vector<DeltaMorphism> surjections(int n, int k) {
  std::vector<DeltaMorphism> out;
  if (k > n || k < 0) return out;
  for (auto& f : monotone_maps(n, k))
    if (f.is_surjective()) out.push_back(std::move(f));
  return out;
}

std::string to_string(const DeltaMorphism& f) {
  std::ostringstream os;
  os << '<';
  for (std::size_t k = 0; k < f.values().size(); ++k) {
    if (k > 0 && f.target_rank() > 9) os << ',';
    os << f.values()[k];
  }
  os << '>';
  return os.str();
}

OperatorWord::OperatorWord(int source_rank, std::vector<Generator> generators)
    : source_rank_(source_rank), target_rank_(source_rank), generators_(std::move(generators)) {
  if (source_rank < 0) throw CompositionError("OperatorWord: negative source rank");
  for (auto it = generators_.rbegin(); it != generators_.rend(); ++it) {
    if (it->kind == GeneratorKind::Face) {
      if (it->index < 0 || it->index > target_rank_ + 1) throw CompositionError("OperatorWord: face index out of range");
      ++target_rank_;
    } else {
      if (target_rank_ < 1 || it->index < 0 || it->index > target_rank_ - 1)
        throw CompositionError("OperatorWord: degeneracy index out of range");
      --target_rank_;
    }
  }
}

bool OperatorWord::canonical() const {
  std::size_t k = 0;
  int last = -1;
  bool first = true;
  for (; k < generators_.size() && generators_[k].kind == GeneratorKind::Face; ++k) {
    if (!first && generators_[k].index >= last) return false;
    last = generators_[k].index;
    first = false;
  }
  last = -1;
  for (; k < generators_.size(); ++k) {
    if (generators_[k].kind != GeneratorKind::Degeneracy || generators_[k].index <= last) return false;
    last = generators_[k].index;
  }
  return true;
}

DeltaMorphism evaluate(const OperatorWord& w) {
  std::vector<int> v;
  for (int x = 0; x <= w.source_rank(); ++x) {
    int y = x;
    for (auto it = w.generators().rbegin(); it != w.generators().rend(); ++it) {
      if (it->kind == GeneratorKind::Face)
        y = y < it->index ? y : y + 1;
      else
        y = y <= it->index ? y : y - 1;
    }
    v.push_back(y);
  }
  return DeltaMorphism(w.target_rank(), std::move(v));
}

OperatorWord canonical_factorization(const DeltaMorphism& f) {
  std::vector<Generator> gens;
  const auto& v = f.values();
  for (int i = f.target_rank(); i >= 0; --i)
    if (std::find(v.begin(), v.end(), i) == v.end()) gens.push_back(Generator::face(i));
  for (int j = 0; j < f.source_rank(); ++j)
    if (v[static_cast<std::size_t>(j)] == v[static_cast<std::size_t>(j) + 1]) gens.push_back(Generator::degeneracy(j));
  return OperatorWord(f.source_rank(), std::move(gens));
}

namespace {

using Kind = GeneratorKind;

// Rewrites the pair (a, b) = w[k], w[k+1] if it is out of canonical order.
// Returns false if the pair is already in order.
bool rewrite_pair(std::vector<Generator>& w, std::size_t k) {
  Generator a = w[k];
  Generator b = w[k + 1];
  if (a.kind == Kind::Degeneracy && b.kind == Kind::Face) {
    int j = a.index;
    int i = b.index;
    if (i < j) {
      w[k] = Generator::face(i);
      w[k + 1] = Generator::degeneracy(j - 1);
    } else if (i == j || i == j + 1) {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(k), w.begin() + static_cast<std::ptrdiff_t>(k) + 2);
    } else {
      w[k] = Generator::face(i - 1);
      w[k + 1] = Generator::degeneracy(j);
    }
    return true;
  }
  if (a.kind == Kind::Face && b.kind == Kind::Face && a.index <= b.index) {
    w[k] = Generator::face(b.index + 1);
    w[k + 1] = Generator::face(a.index);
    return true;
  }
  if (a.kind == Kind::Degeneracy && b.kind == Kind::Degeneracy && a.index >= b.index) {
    w[k] = Generator::degeneracy(b.index);
    w[k + 1] = Generator::degeneracy(a.index + 1);
    return true;
  }
  return false;
}

}  // namespace

OperatorWord normalize(const OperatorWord& w) {
  std::vector<Generator> gens = w.generators();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < gens.size(); ++k) {
      if (rewrite_pair(gens, k)) {
        changed = true;
        break;
      }
    }
  }
  return OperatorWord(w.source_rank(), std::move(gens));
}

OperatorWord concatenate(const OperatorWord& f, const OperatorWord& g) {
  if (f.source_rank() != g.target_rank()) throw CompositionError("concatenate: rank mismatch");
  std::vector<Generator> gens = f.generators();
  gens.insert(gens.end(), g.generators().begin(), g.generators().end());
  return OperatorWord(g.source_rank(), std::move(gens));
}

OperatorWord parse_action_word(std::string_view text, int level) {
  std::vector<Generator> action;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 2 || (tok[0] != 'd' && tok[0] != 's'))
      throw CompositionError("parse_action_word: bad token '" + tok + "'");
    int idx = 0;
    for (std::size_t k = 1; k < tok.size(); ++k) {
      if (tok[k] < '0' || tok[k] > '9') throw CompositionError("parse_action_word: bad index in '" + tok + "'");
      idx = idx * 10 + (tok[k] - '0');
    }
    action.push_back(tok[0] == 'd' ? Generator::face(idx) : Generator::degeneracy(idx));
  }
  // The operator written last acts first on X_level, so it is the leftmost
  // morphism of the composite in the simplex category.
  std::vector<Generator> gens(action.rbegin(), action.rend());
  int r = level;
  for (const auto& g : gens) r += g.kind == Kind::Face ? -1 : 1;
  if (r < 0) throw CompositionError("parse_action_word: word lowers dimension below zero");
  OperatorWord w(r, std::move(gens));
  if (w.target_rank() != level) throw CompositionError("parse_action_word: indices incompatible with level");
  return w;
}

std::string to_action_text(const OperatorWord& w) {
  std::string out;
  for (auto it = w.generators().rbegin(); it != w.generators().rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += it->kind == Kind::Face ? 'd' : 's';
    out += std::to_string(it->index);
  }
  return out;
}

namespace {

void check_degeneracy_set(const std::vector<int>& s, int power, int level) {
  if (power < 0 || power > level) throw RangeError("commute: power must lie in [0, level]");
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 0 || s[k] > level - 1) throw RangeError("commute: degeneracy index outside [0, level-1]");
    if (k > 0 && s[k] <= s[k - 1]) throw RangeError("commute: degeneracy indices must be strictly increasing");
  }
}

}  // namespace

CommutedFaces commute_faces_past_degeneracies(FaceEnd kind, int power, const std::vector<int>& degeneracies,
                                              int level) {
  check_degeneracy_set(degeneracies, power, level);
  std::vector<int> s = degeneracies;
  int residual = 0;
  if (kind == FaceEnd::Front) {
    // d_0 s_0 = 1 and d_0 s_j = s_{j-1} d_0 for j > 0.
    for (int step = 0; step < power; ++step) {
      if (!s.empty() && s.front() == 0)
        s.erase(s.begin());
      else
        ++residual;
      for (int& a : s) --a;
    }
  } else {
    // At level L: d_L s_{L-1} = 1 and d_L s_j = s_j d_{L-1} for j < L-1.
    int current = level;
    for (int step = 0; step < power; ++step, --current) {
      if (!s.empty() && s.back() == current - 1)
        s.pop_back();
      else
        ++residual;
    }
  }
  return {std::move(s), residual};
}

OperatorWord faces_after_degeneracies(FaceEnd kind, int power, const std::vector<int>& degeneracies, int level) {
  check_degeneracy_set(degeneracies, power, level);
  std::string text;
  auto add = [&text](char c, int i) {
    if (!text.empty()) text += ' ';
    text += c;
    text += std::to_string(i);
  };
  for (int step = power - 1; step >= 0; --step) add('d', kind == FaceEnd::Front ? 0 : level - step);
  for (auto it = degeneracies.rbegin(); it != degeneracies.rend(); ++it) add('s', *it);
  return parse_action_word(text, level - static_cast<int>(degeneracies.size()));
}

}  // namespace dk
