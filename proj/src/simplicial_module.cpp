#include "dk/simplicial_module.hpp"

#include "dk/errors.hpp"
#include "dk/smith.hpp"

#include <map>
#include <sstream>

namespace dk {

const SparseMatrix& SimplicialModule::face(int n, int i) const {
  if (n < 1 || n > max_degree || i < 0 || i > n) throw RangeError("face d_" + std::to_string(i) + " at level " + std::to_string(n));
  return faces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

const SparseMatrix& SimplicialModule::degeneracy(int n, int j) const {
  if (n < 0 || n >= max_degree || j < 0 || j > n)
    throw RangeError("degeneracy s_" + std::to_string(j) + " at level " + std::to_string(n));
  return degeneracies[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
}

bool SimplicialModule::set_like_degeneracies() const {
  for (const auto& level : degeneracies)
    for (const auto& s : level) {
      for (Index k = 0; k < s.outerSize(); ++k) {
        int count = 0;
        for (SparseMatrix::InnerIterator it(s, k); it; ++it) {
          if (it.value() == 0) continue;
          if (it.value() != 1 || ++count > 1) return false;
        }
        if (count != 1) return false;
      }
    }
  return true;
}

void check_shapes(const SimplicialModule& a) {
  const auto d = static_cast<std::size_t>(a.max_degree);
  if (a.max_degree < 0 || a.ranks.size() != d + 1 || a.faces.size() != d + 1 || a.degeneracies.size() != d + 1)
    throw ConstructionError("SimplicialModule: level count does not match max_degree");
  for (int n = 1; n <= a.max_degree; ++n) {
    const auto& f = a.faces[static_cast<std::size_t>(n)];
    if (f.size() != static_cast<std::size_t>(n) + 1) throw ConstructionError("SimplicialModule: wrong number of faces");
    for (const auto& m : f)
      if (m.rows() != a.rank(n - 1) || m.cols() != a.rank(n)) throw ConstructionError("SimplicialModule: face shape");
  }
  for (int n = 0; n < a.max_degree; ++n) {
    const auto& s = a.degeneracies[static_cast<std::size_t>(n)];
    if (s.size() != static_cast<std::size_t>(n) + 1)
      throw ConstructionError("SimplicialModule: wrong number of degeneracies");
    for (const auto& m : s)
      if (m.rows() != a.rank(n + 1) || m.cols() != a.rank(n)) throw ConstructionError("SimplicialModule: degeneracy shape");
  }
  if (!a.labels.empty()) {
    if (a.labels.size() != d + 1) throw ConstructionError("SimplicialModule: label levels");
    for (int n = 0; n <= a.max_degree; ++n)
      if (static_cast<Index>(a.labels[static_cast<std::size_t>(n)].size()) != a.rank(n))
        throw ConstructionError("SimplicialModule: label count");
  }
}

SimplicialMap identity_map(const ModulePtr& a) {
  SimplicialMap f{a, a, {}};
  for (int n = 0; n <= a->max_degree; ++n) f.levels.push_back(sparse_identity(a->rank(n)));
  return f;
}

SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
  const int top = std::min(f.max_degree(), g.max_degree());
  SimplicialMap h{g.source, f.target, {}};
  for (int n = 0; n <= top; ++n) {
    if (f.at(n).cols() != g.at(n).rows()) throw CompositionError("compose: simplicial maps do not compose");
    h.levels.push_back(pruned(SparseMatrix(f.at(n) * g.at(n))));
  }
  return h;
}

SimplicialMap inverse(const SimplicialMap& f) {
  SimplicialMap g{f.target, f.source, {}};
  for (int n = 0; n <= f.max_degree(); ++n) {
    auto inv = integer_inverse(to_dense(f.at(n)));
    if (!inv) throw ConstructionError("inverse: level " + std::to_string(n) + " is not unimodular");
    g.levels.push_back(to_sparse(*inv));
  }
  return g;
}

namespace {

void compare_labelled(VerificationReport& report, int level, const std::string& what, const SparseMatrix& left,
                      const SparseMatrix& right, const std::vector<std::string>* cols,
                      const std::vector<std::string>* rows) {
  VerificationReport local;
  compare_matrices(local, level, left, right, cols, rows);
  for (auto w : local.witnesses) {
    w.label = what + " at " + w.label;
    report.add_witness(std::move(w));
  }
  if (local.mismatch_count > local.witnesses.size())
    report.mismatch_count += local.mismatch_count - local.witnesses.size();
}

const std::vector<std::string>* labels_or_null(const ModulePtr& a, int n) {
  if (!a || a->labels.empty()) return nullptr;
  return &a->basis_labels(n);
}

}  // namespace

VerificationReport check_simplicial_map(const SimplicialMap& f) {
  auto report = make_report("simplicial-map", {f.source->name, f.target->name}, f.max_degree());
  const int top = std::min({f.max_degree(), f.source->max_degree, f.target->max_degree});
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i <= n; ++i)
      compare_labelled(report, n, "d_" + std::to_string(i) + " f = f d_" + std::to_string(i),
                       SparseMatrix(f.target->face(n, i) * f.at(n)), SparseMatrix(f.at(n - 1) * f.source->face(n, i)),
                       labels_or_null(f.source, n), labels_or_null(f.target, n - 1));
  for (int n = 0; n < top; ++n)
    for (int j = 0; j <= n; ++j)
      compare_labelled(report, n, "s_" + std::to_string(j) + " f = f s_" + std::to_string(j),
                       SparseMatrix(f.target->degeneracy(n, j) * f.at(n)),
                       SparseMatrix(f.at(n + 1) * f.source->degeneracy(n, j)), labels_or_null(f.source, n),
                       labels_or_null(f.target, n + 1));
  return report;
}

SparseMatrix apply_word(const SimplicialModule& a, const OperatorWord& w) {
  int level = w.target_rank();
  if (level > a.max_degree) throw RangeError("apply_word: word starts above the truncation");
  SparseMatrix m = sparse_identity(a.rank(level));
  for (const auto& g : w.generators()) {
    if (g.kind == GeneratorKind::Face) {
      m = SparseMatrix(a.face(level, g.index) * m);
      --level;
    } else {
      m = SparseMatrix(a.degeneracy(level, g.index) * m);
      ++level;
    }
  }
  return pruned(std::move(m));
}

SparseMatrix apply_morphism(const SimplicialModule& a, const DeltaMorphism& f) {
  return apply_word(a, canonical_factorization(f));
}

ModulePtr free_on_standard_simplex(int p, int max_degree) {
  if (p < 0 || max_degree < 0) throw ConstructionError("free_on_standard_simplex: negative argument");
  auto a = std::make_shared<SimplicialModule>();
  a->max_degree = max_degree;
  a->name = "delta:" + std::to_string(p);
  std::vector<std::vector<DeltaMorphism>> basis;
  std::vector<std::map<std::vector<int>, Index>> position;
  for (int n = 0; n <= max_degree; ++n) {
    basis.push_back(monotone_maps(n, p));
    std::map<std::vector<int>, Index> pos;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < basis.back().size(); ++k) {
      pos[basis.back()[k].values()] = static_cast<Index>(k);
      names.push_back(to_string(basis.back()[k]));
    }
    position.push_back(std::move(pos));
    a->ranks.push_back(static_cast<Index>(basis.back().size()));
    a->labels.push_back(std::move(names));
  }
  a->faces.resize(static_cast<std::size_t>(max_degree) + 1);
  a->degeneracies.resize(static_cast<std::size_t>(max_degree) + 1);
  // A simplex x : [n] -> [p] has d_i x = x eps^i and s_j x = x eta^j.
  for (int n = 0; n <= max_degree; ++n) {
    const auto& here = basis[static_cast<std::size_t>(n)];
    if (n >= 1) {
      for (int i = 0; i <= n; ++i) {
        std::vector<Triplet> t;
        auto eps = DeltaMorphism::coface(n, i);
        for (std::size_t k = 0; k < here.size(); ++k)
          t.emplace_back(position[static_cast<std::size_t>(n) - 1].at(compose(here[k], eps).values()),
                         static_cast<Index>(k), 1);
        SparseMatrix m(a->rank(n - 1), a->rank(n));
        m.setFromTriplets(t.begin(), t.end());
        a->faces[static_cast<std::size_t>(n)].push_back(std::move(m));
      }
    }
    if (n < max_degree) {
      for (int j = 0; j <= n; ++j) {
        std::vector<Triplet> t;
        auto eta = DeltaMorphism::codegeneracy(n, j);
        for (std::size_t k = 0; k < here.size(); ++k)
          t.emplace_back(position[static_cast<std::size_t>(n) + 1].at(compose(here[k], eta).values()),
                         static_cast<Index>(k), 1);
        SparseMatrix m(a->rank(n + 1), a->rank(n));
        m.setFromTriplets(t.begin(), t.end());
        a->degeneracies[static_cast<std::size_t>(n)].push_back(std::move(m));
      }
    }
  }
  check_shapes(*a);
  return a;
}

ModulePtr constant_z(int max_degree) {
  auto a = std::make_shared<SimplicialModule>(*free_on_standard_simplex(0, max_degree));
  a->name = "const:Z";
  for (auto& level : a->labels) level = {"*"};
  return a;
}

int MonoidTable::validated_unit() const {
  const int m = size();
  if (m == 0) throw ConstructionError("monoid table is empty");
  for (const auto& row : product) {
    if (static_cast<int>(row.size()) != m) throw ConstructionError("monoid table is not square");
    for (int v : row)
      if (v < 0 || v >= m) throw ConstructionError("monoid table entry out of range");
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if ((*this)((*this)(a, b), c) != (*this)(a, (*this)(b, c)))
          throw ConstructionError("monoid table is not associative");
  for (int e = 0; e < m; ++e) {
    bool unit = true;
    for (int a = 0; a < m && unit; ++a) unit = (*this)(e, a) == a && (*this)(a, e) == a;
    if (unit) return e;
  }
  throw ConstructionError("monoid table has no unit");
}

bool MonoidTable::commutative() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if ((*this)(a, b) != (*this)(b, a)) return false;
  return true;
}

MonoidTable cyclic_group(int order) {
  MonoidTable t;
  for (int a = 0; a < order; ++a) {
    std::vector<int> row;
    for (int b = 0; b < order; ++b) row.push_back((a + b) % order);
    t.product.push_back(std::move(row));
    t.names.push_back(std::to_string(a));
  }
  return t;
}

MonoidTable trivial_monoid() { return MonoidTable{{{0}}, {"e"}}; }

ModulePtr free_on_nerve(const MonoidTable& m, int max_degree) {
  const int unit = m.validated_unit();
  if (max_degree < 0) throw ConstructionError("free_on_nerve: negative max_degree");
  const int size = m.size();
  auto a = std::make_shared<SimplicialModule>();
  a->max_degree = max_degree;
  a->name = size == 2 ? "nerve:z2" : "nerve:" + std::to_string(size);
  auto name_of = [&m](int x) {
    return static_cast<std::size_t>(x) < m.names.size() ? m.names[static_cast<std::size_t>(x)] : std::to_string(x);
  };
  // Tuples are encoded in base |M| with the first entry most significant.
  auto decode = [size](Index code, int n) {
    std::vector<int> t(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
      t[static_cast<std::size_t>(k)] = static_cast<int>(code % size);
      code /= size;
    }
    return t;
  };
  auto encode = [size](const std::vector<int>& t) {
    Index code = 0;
    for (int v : t) code = code * size + v;
    return code;
  };
  Index r = 1;
  for (int n = 0; n <= max_degree; ++n, r *= size) {
    a->ranks.push_back(r);
    std::vector<std::string> names;
    for (Index c = 0; c < r; ++c) {
      auto t = decode(c, n);
      std::string s = "(";
      for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + name_of(t[k]);
      names.push_back(s + ")");
    }
    a->labels.push_back(std::move(names));
  }
  a->faces.resize(static_cast<std::size_t>(max_degree) + 1);
  a->degeneracies.resize(static_cast<std::size_t>(max_degree) + 1);
  for (int n = 0; n <= max_degree; ++n) {
    if (n >= 1) {
      for (int i = 0; i <= n; ++i) {
        std::vector<Triplet> trip;
        for (Index c = 0; c < a->rank(n); ++c) {
          auto t = decode(c, n);
          std::vector<int> out;
          if (i == 0) {
            out.assign(t.begin() + 1, t.end());
          } else if (i == n) {
            out.assign(t.begin(), t.end() - 1);
          } else {
            out.assign(t.begin(), t.begin() + i - 1);
            out.push_back(m(t[static_cast<std::size_t>(i) - 1], t[static_cast<std::size_t>(i)]));
            out.insert(out.end(), t.begin() + i + 1, t.end());
          }
          trip.emplace_back(encode(out), c, 1);
        }
        SparseMatrix mat(a->rank(n - 1), a->rank(n));
        mat.setFromTriplets(trip.begin(), trip.end());
        a->faces[static_cast<std::size_t>(n)].push_back(std::move(mat));
      }
    }
    if (n < max_degree) {
      for (int j = 0; j <= n; ++j) {
        std::vector<Triplet> trip;
        for (Index c = 0; c < a->rank(n); ++c) {
          auto t = decode(c, n);
          t.insert(t.begin() + j, unit);
          trip.emplace_back(encode(t), c, 1);
        }
        SparseMatrix mat(a->rank(n + 1), a->rank(n));
        mat.setFromTriplets(trip.begin(), trip.end());
        a->degeneracies[static_cast<std::size_t>(n)].push_back(std::move(mat));
      }
    }
  }
  check_shapes(*a);
  return a;
}

ModulePtr tensor(const ModulePtr& a, const ModulePtr& b) {
  if (a->max_degree != b->max_degree) throw ConstructionError("tensor: truncation mismatch");
  auto t = std::make_shared<SimplicialModule>();
  t->max_degree = a->max_degree;
  t->name = "(" + a->name + " x " + b->name + ")";
  const bool labelled = !a->labels.empty() && !b->labels.empty();
  for (int n = 0; n <= t->max_degree; ++n) {
    t->ranks.push_back(a->rank(n) * b->rank(n));
    if (labelled) {
      std::vector<std::string> names;
      for (const auto& x : a->basis_labels(n))
        for (const auto& y : b->basis_labels(n)) names.push_back(x + "|" + y);
      t->labels.push_back(std::move(names));
    }
  }
  t->faces.resize(static_cast<std::size_t>(t->max_degree) + 1);
  t->degeneracies.resize(static_cast<std::size_t>(t->max_degree) + 1);
  for (int n = 1; n <= t->max_degree; ++n)
    for (int i = 0; i <= n; ++i) t->faces[static_cast<std::size_t>(n)].push_back(kron(a->face(n, i), b->face(n, i)));
  for (int n = 0; n < t->max_degree; ++n)
    for (int j = 0; j <= n; ++j)
      t->degeneracies[static_cast<std::size_t>(n)].push_back(kron(a->degeneracy(n, j), b->degeneracy(n, j)));
  check_shapes(*t);
  return t;
}

SimplicialMap tensor(const SimplicialMap& f, const SimplicialMap& g, const ModulePtr& source, const ModulePtr& target) {
  SimplicialMap h{source, target, {}};
  const int top = std::min(f.max_degree(), g.max_degree());
  for (int n = 0; n <= top; ++n) h.levels.push_back(kron(f.at(n), g.at(n)));
  return h;
}

SimplicialMap tensor(const SimplicialMap& f, const SimplicialMap& g) {
  return tensor(f, g, tensor(f.source, g.source), tensor(f.target, g.target));
}

SparseMatrix factor_permutation(const std::vector<Index>& ranks, const std::vector<int>& order) {
  const std::size_t k = ranks.size();
  if (order.size() != k) throw ConstructionError("factor_permutation: order has the wrong length");
  Index total = 1;
  for (Index r : ranks) total *= r;
  std::vector<Index> target_ranks(k), target_stride(k);
  for (std::size_t m = 0; m < k; ++m) target_ranks[m] = ranks[static_cast<std::size_t>(order[m])];
  Index stride = 1;
  for (std::size_t m = k; m-- > 0;) {
    target_stride[m] = stride;
    stride *= target_ranks[m];
  }
  // position_of[f] = slot m in the target holding factor f
  std::vector<std::size_t> position_of(k);
  for (std::size_t m = 0; m < k; ++m) position_of[static_cast<std::size_t>(order[m])] = m;
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(total));
  std::vector<Index> digits(k, 0);
  for (Index c = 0; c < total; ++c) {
    Index rest = c;
    for (std::size_t f = k; f-- > 0;) {
      digits[f] = rest % ranks[f];
      rest /= ranks[f];
    }
    Index row = 0;
    for (std::size_t f = 0; f < k; ++f) row += digits[f] * target_stride[position_of[f]];
    t.emplace_back(row, c, 1);
  }
  SparseMatrix m(total, total);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

SimplicialMap swap(const ModulePtr& a, const ModulePtr& b) {
  SimplicialMap s{tensor(a, b), tensor(b, a), {}};
  for (int n = 0; n <= a->max_degree; ++n) s.levels.push_back(factor_permutation({a->rank(n), b->rank(n)}, {1, 0}));
  return s;
}

SimplicialMap middle_swap(const ModulePtr& a, const ModulePtr& b, const ModulePtr& c, const ModulePtr& d) {
  SimplicialMap s{tensor(tensor(a, b), tensor(c, d)), tensor(tensor(a, c), tensor(b, d)), {}};
  for (int n = 0; n <= a->max_degree; ++n)
    s.levels.push_back(factor_permutation({a->rank(n), b->rank(n), c->rank(n), d->rank(n)}, {0, 2, 1, 3}));
  return s;
}

const char* const kClauseNames[5] = {"d_i d_j = d_{j-1} d_i", "d_i s_j = s_{j-1} d_i", "d_j s_j = d_{j+1} s_j = 1",
                                     "d_i s_j = s_j d_{i-1}", "s_i s_j = s_{j+1} s_i"};

VerificationReport validate(const SimplicialModule& a, ClauseTally* tally) {
  auto report = make_report("simplicial-identities", {a.name}, a.max_degree);
  try {
    check_shapes(a);
  } catch (const ConstructionError& e) {
    report.fail(0, "shape", e.what(), "declared ranks");
    return report;
  }
  auto labels = [&a](int n) { return a.labels.empty() ? nullptr : &a.basis_labels(n); };
  auto check = [&](int clause, int level, int i, int j, const SparseMatrix& left, const SparseMatrix& right,
                   const std::vector<std::string>* rows) {
    std::ostringstream what;
    what << kClauseNames[clause] << " [i=" << i << ", j=" << j << ", level " << level << "]";
    compare_labelled(report, level, what.str(), left, right, labels(level), rows);
    if (tally) {
      ++tally->instances[clause];
      if (a.rank(level) >= 2 && std::max(i, j) >= 1) ++tally->nontrivial[clause];
    }
  };
  // Each identity is checked on its source level n.
  for (int n = 2; n <= a.max_degree; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        check(0, n, i, j, SparseMatrix(a.face(n - 1, i) * a.face(n, j)),
              SparseMatrix(a.face(n - 1, j - 1) * a.face(n, i)), labels(n - 2));
  for (int n = 0; n < a.max_degree; ++n) {
    for (int j = 0; j <= n; ++j) {
      const SparseMatrix& s = a.degeneracy(n, j);
      for (int i = 0; i <= n + 1; ++i) {
        SparseMatrix left = a.face(n + 1, i) * s;
        if (i < j) {
          check(1, n, i, j, left, SparseMatrix(a.degeneracy(n - 1, j - 1) * a.face(n, i)), labels(n));
        } else if (i == j || i == j + 1) {
          check(2, n, i, j, left, sparse_identity(a.rank(n)), labels(n));
        } else {
          check(3, n, i, j, left, SparseMatrix(a.degeneracy(n - 1, j) * a.face(n, i - 1)), labels(n));
        }
      }
    }
  }
  for (int n = 0; n + 2 <= a.max_degree; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        check(4, n, i, j, SparseMatrix(a.degeneracy(n + 1, i) * a.degeneracy(n, j)),
              SparseMatrix(a.degeneracy(n + 1, j + 1) * a.degeneracy(n, i)), labels(n + 2));
  return report;
}

std::string serialize(const SimplicialModule& a) {
  std::ostringstream os;
  os << "simplicial-module " << a.name << "\n";
  os << "max-degree " << a.max_degree << "\n";
  os << "ranks";
  for (Index r : a.ranks) os << " " << r;
  os << "\n";
  auto dump = [&os](const SparseMatrix& m) {
    IntMatrix d = to_dense(m);
    for (Index r = 0; r < d.rows(); ++r) {
      os << " ";
      for (Index c = 0; c < d.cols(); ++c) os << " " << d(r, c);
      os << "\n";
    }
  };
  for (int n = 1; n <= a.max_degree; ++n)
    for (int i = 0; i <= n; ++i) {
      os << "face " << n << " " << i << "\n";
      dump(a.face(n, i));
    }
  for (int n = 0; n < a.max_degree; ++n)
    for (int j = 0; j <= n; ++j) {
      os << "degeneracy " << n << " " << j << "\n";
      dump(a.degeneracy(n, j));
    }
  return os.str();
}

}  // namespace dk
