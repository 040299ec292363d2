#include "dk/chain_complex.hpp"

#include "dk/errors.hpp"
#include "dk/smith.hpp"

#include <map>
#include <sstream>

namespace dk {

const SparseMatrix& ChainComplex::d(int n) const {
  if (n < 0 || n > max_degree) throw RangeError("differential d_" + std::to_string(n) + " beyond the truncation");
  return differentials[static_cast<std::size_t>(n)];
}

const std::vector<std::string>* ChainComplex::basis_labels(int n) const {
  if (labels.empty() || n < 0 || n > max_degree) return nullptr;
  return &labels[static_cast<std::size_t>(n)];
}

const SparseMatrix& ChainMap::at(int n) const {
  if (n < 0 || static_cast<std::size_t>(n) >= components.size())
    throw RangeError("chain map component " + std::to_string(n) + " is not available");
  return components[static_cast<std::size_t>(n)];
}

ComplexPtr make_complex(std::vector<Index> ranks, std::vector<SparseMatrix> differentials_from_1, std::string name) {
  if (ranks.empty()) throw ConstructionError("make_complex: no degrees");
  if (differentials_from_1.size() + 1 != ranks.size())
    throw ConstructionError("make_complex: need one differential per positive degree");
  auto c = std::make_shared<ChainComplex>();
  c->max_degree = static_cast<int>(ranks.size()) - 1;
  c->ranks = std::move(ranks);
  c->name = std::move(name);
  c->differentials.push_back(sparse_zero(0, c->ranks[0]));
  for (std::size_t n = 1; n < c->ranks.size(); ++n) {
    auto& d = differentials_from_1[n - 1];
    if (d.rows() != c->ranks[n - 1] || d.cols() != c->ranks[n])
      throw ConstructionError("make_complex: differential d_" + std::to_string(n) + " has the wrong shape");
    c->differentials.push_back(pruned(std::move(d)));
  }
  return c;
}

VerificationReport check_square_zero(const ChainComplex& c) {
  auto report = make_report("d-squared", {c.name}, c.max_degree);
  for (int n = 2; n <= c.max_degree; ++n)
    compare_matrices(report, n, SparseMatrix(c.d(n - 1) * c.d(n)), sparse_zero(c.rank(n - 2), c.rank(n)),
                     c.basis_labels(n), c.basis_labels(n - 2));
  return report;
}

ChainMap identity_chain_map(const ComplexPtr& c) {
  ChainMap f{c, c, {}, c->max_degree};
  for (int n = 0; n <= c->max_degree; ++n) f.components.push_back(sparse_identity(c->rank(n)));
  return f;
}

ChainMap zero_chain_map(const ComplexPtr& source, const ComplexPtr& target) {
  const int top = std::min(source->max_degree, target->max_degree);
  ChainMap f{source, target, {}, top};
  for (int n = 0; n <= top; ++n) f.components.push_back(sparse_zero(target->rank(n), source->rank(n)));
  return f;
}

ChainMap compose(const ChainMap& f, const ChainMap& g) {
  const int top = std::min(f.valid_range, g.valid_range);
  ChainMap h{g.source, f.target, {}, top};
  for (int n = 0; n <= top; ++n) {
    if (f.at(n).cols() != g.at(n).rows())
      throw CompositionError("compose: chain maps do not compose in degree " + std::to_string(n));
    h.components.push_back(pruned(SparseMatrix(f.at(n) * g.at(n))));
  }
  return h;
}

namespace {

ChainMap combine(const ChainMap& f, const ChainMap& g, int sign) {
  const int top = std::min(f.valid_range, g.valid_range);
  ChainMap h{f.source, f.target, {}, top};
  for (int n = 0; n <= top; ++n) {
    if (f.at(n).rows() != g.at(n).rows() || f.at(n).cols() != g.at(n).cols())
      throw CompositionError("chain maps of different shapes in degree " + std::to_string(n));
    h.components.push_back(pruned(sign > 0 ? SparseMatrix(f.at(n) + g.at(n)) : SparseMatrix(f.at(n) - g.at(n))));
  }
  return h;
}

void add_block(std::vector<Triplet>& t, const SparseMatrix& m, Index row, Index col, int sign = 1) {
  for (Index k = 0; k < m.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(m, k); it; ++it)
      if (it.value() != 0) t.emplace_back(row + it.row(), col + it.col(), sign > 0 ? it.value() : Integer(-it.value()));
}

SparseMatrix from_triplets(Index rows, Index cols, const std::vector<Triplet>& t) {
  SparseMatrix m(rows, cols);
  m.setFromTriplets(t.begin(), t.end());
  return pruned(std::move(m));
}

}  // namespace

ChainMap operator-(const ChainMap& f, const ChainMap& g) { return combine(f, g, -1); }
ChainMap operator+(const ChainMap& f, const ChainMap& g) { return combine(f, g, 1); }

ChainMap inverse(const ChainMap& f) {
  ChainMap g{f.target, f.source, {}, f.valid_range};
  for (int n = 0; n <= f.valid_range; ++n) {
    auto inv = integer_inverse(to_dense(f.at(n)));
    if (!inv) throw ConstructionError("inverse: degree " + std::to_string(n) + " is not unimodular");
    g.components.push_back(to_sparse(*inv));
  }
  return g;
}

VerificationReport check_chain_map(const ChainMap& f, const std::string& name) {
  auto report = make_report(name, {f.source->name, f.target->name}, f.valid_range);
  const int top = std::min({f.valid_range, f.source->max_degree, f.target->max_degree});
  for (int n = 1; n <= top; ++n)
    compare_matrices(report, n, SparseMatrix(f.target->d(n) * f.at(n)), SparseMatrix(f.at(n - 1) * f.source->d(n)),
                     f.source->basis_labels(n), f.target->basis_labels(n - 1));
  return report;
}

void compare_maps(VerificationReport& report, const ChainMap& f, const ChainMap& g, int top) {
  int limit = std::min(f.valid_range, g.valid_range);
  if (top >= 0) limit = std::min(limit, top);
  for (int n = 0; n <= limit; ++n)
    compare_matrices(report, n, f.at(n), g.at(n), f.source ? f.source->basis_labels(n) : nullptr,
                     f.target ? f.target->basis_labels(n) : nullptr);
}

ComplexPtr unnormalized_chains(const ModulePtr& a) {
  auto c = std::make_shared<ChainComplex>();
  c->max_degree = a->max_degree;
  c->ranks = a->ranks;
  c->labels = a->labels;
  c->name = "C(" + a->name + ")";
  c->differentials.push_back(sparse_zero(0, a->rank(0)));
  for (int n = 1; n <= a->max_degree; ++n) {
    SparseMatrix d = sparse_zero(a->rank(n - 1), a->rank(n));
    for (int i = 0; i <= n; ++i) d = i % 2 == 0 ? SparseMatrix(d + a->face(n, i)) : SparseMatrix(d - a->face(n, i));
    c->differentials.push_back(pruned(std::move(d)));
  }
  return c;
}

ChainMap chains_of(const SimplicialMap& f, const ComplexPtr& source, const ComplexPtr& target) {
  const int top = std::min({f.max_degree(), source->max_degree, target->max_degree});
  ChainMap g{source, target, {}, top};
  for (int n = 0; n <= top; ++n) g.components.push_back(f.at(n));
  return g;
}

std::vector<Index> block_offsets(const ChainComplex& a, const ChainComplex& b, int n) {
  std::vector<Index> off{0};
  for (int p = 0; p <= n; ++p) off.push_back(off.back() + a.rank(p) * b.rank(n - p));
  return off;
}

ComplexPtr tensor_chain(const ComplexPtr& a, const ComplexPtr& b) {
  auto t = std::make_shared<ChainComplex>();
  t->max_degree = std::min(a->max_degree, b->max_degree);
  t->name = "(" + a->name + " (x) " + b->name + ")";
  const bool labelled = !a->labels.empty() && !b->labels.empty();
  for (int n = 0; n <= t->max_degree; ++n) {
    t->ranks.push_back(block_offsets(*a, *b, n).back());
    if (labelled) {
      std::vector<std::string> names;
      for (int p = 0; p <= n; ++p)
        for (const auto& x : *a->basis_labels(p))
          for (const auto& y : *b->basis_labels(n - p)) names.push_back(x + " (x) " + y);
      t->labels.push_back(std::move(names));
    }
  }
  t->differentials.push_back(sparse_zero(0, t->ranks[0]));
  for (int n = 1; n <= t->max_degree; ++n) {
    auto src = block_offsets(*a, *b, n);
    auto dst = block_offsets(*a, *b, n - 1);
    std::vector<Triplet> trip;
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      if (p >= 1)
        add_block(trip, kron(a->d(p), sparse_identity(b->rank(q))), dst[static_cast<std::size_t>(p) - 1],
                  src[static_cast<std::size_t>(p)]);
      if (q >= 1)
        add_block(trip, kron(sparse_identity(a->rank(p)), b->d(q)), dst[static_cast<std::size_t>(p)],
                  src[static_cast<std::size_t>(p)], p % 2 == 0 ? 1 : -1);
    }
    t->differentials.push_back(from_triplets(t->rank(n - 1), t->rank(n), trip));
  }
  return t;
}

ChainMap tensor_maps(const ChainMap& f, const ChainMap& g, const ComplexPtr& source, const ComplexPtr& target) {
  const int top = std::min({f.valid_range, g.valid_range, source->max_degree, target->max_degree});
  ChainMap h{source, target, {}, top};
  for (int n = 0; n <= top; ++n) {
    auto src = block_offsets(*f.source, *g.source, n);
    auto dst = block_offsets(*f.target, *g.target, n);
    std::vector<Triplet> trip;
    for (int p = 0; p <= n; ++p)
      add_block(trip, kron(f.at(p), g.at(n - p)), dst[static_cast<std::size_t>(p)], src[static_cast<std::size_t>(p)]);
    h.components.push_back(from_triplets(dst.back(), src.back(), trip));
  }
  return h;
}

ChainMap tensor_maps(const ChainMap& f, const ChainMap& g) {
  return tensor_maps(f, g, tensor_chain(f.source, g.source), tensor_chain(f.target, g.target));
}

namespace {

// A bracketing of tensor factors; leaves refer to positions in a factor list.
struct Bracket {
  int leaf = -1;
  std::shared_ptr<const Bracket> left, right;
};
using BracketPtr = std::shared_ptr<const Bracket>;

BracketPtr leaf(int k) { return std::make_shared<const Bracket>(Bracket{k, nullptr, nullptr}); }
BracketPtr pair(BracketPtr l, BracketPtr r) { return std::make_shared<const Bracket>(Bracket{-1, std::move(l), std::move(r)}); }

void leaf_order(const BracketPtr& b, std::vector<int>& out) {
  if (b->leaf >= 0) {
    out.push_back(b->leaf);
    return;
  }
  leaf_order(b->left, out);
  leaf_order(b->right, out);
}

ComplexPtr build(const BracketPtr& b, const std::vector<ComplexPtr>& factors) {
  if (b->leaf >= 0) return factors[static_cast<std::size_t>(b->leaf)];
  return tensor_chain(build(b->left, factors), build(b->right, factors));
}

// (degree, index) of every factor, slot k for factor k.
using FactorTuple = std::vector<std::pair<int, Index>>;

void enumerate(const BracketPtr& b, const std::vector<ComplexPtr>& factors, int n, FactorTuple& cur,
               std::vector<FactorTuple>& out);

std::vector<FactorTuple> basis_tuples(const BracketPtr& b, const std::vector<ComplexPtr>& factors, int n) {
  std::vector<FactorTuple> out;
  FactorTuple cur(factors.size(), {0, 0});
  enumerate(b, factors, n, cur, out);
  return out;
}

void enumerate(const BracketPtr& b, const std::vector<ComplexPtr>& factors, int n, FactorTuple& cur,
               std::vector<FactorTuple>& out) {
  if (b->leaf >= 0) {
    auto& slot = cur[static_cast<std::size_t>(b->leaf)];
    for (Index i = 0; i < factors[static_cast<std::size_t>(b->leaf)]->rank(n); ++i) {
      slot = {n, i};
      out.push_back(cur);
    }
    return;
  }
  // Ascending split degree, then left factor outer: the tensor_chain order.
  for (int p = 0; p <= n; ++p) {
    std::vector<FactorTuple> lefts;
    enumerate(b->left, factors, p, cur, lefts);
    for (const auto& l : lefts) {
      FactorTuple base = l;
      std::vector<FactorTuple> rights;
      enumerate(b->right, factors, n - p, base, rights);
      for (auto& r : rights) out.push_back(std::move(r));
    }
  }
}

ChainMap rebracket(const BracketPtr& from, const BracketPtr& to, const std::vector<ComplexPtr>& factors,
                   const MonoidalConventions& conv) {
  auto source = build(from, factors);
  auto target = build(to, factors);
  std::vector<int> from_order, to_order;
  leaf_order(from, from_order);
  leaf_order(to, to_order);
  std::vector<std::size_t> to_position(factors.size());
  for (std::size_t m = 0; m < to_order.size(); ++m) to_position[static_cast<std::size_t>(to_order[m])] = m;
  const int top = std::min(source->max_degree, target->max_degree);
  ChainMap f{source, target, {}, top};
  for (int n = 0; n <= top; ++n) {
    auto src = basis_tuples(from, factors, n);
    auto dst = basis_tuples(to, factors, n);
    std::map<FactorTuple, Index> where;
    for (std::size_t r = 0; r < dst.size(); ++r) where.emplace(dst[r], static_cast<Index>(r));
    std::vector<Triplet> trip;
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto& t = src[c];
      int sign = 1;
      for (std::size_t x = 0; x < from_order.size(); ++x)
        for (std::size_t y = x + 1; y < from_order.size(); ++y) {
          auto a = static_cast<std::size_t>(from_order[x]);
          auto b = static_cast<std::size_t>(from_order[y]);
          if (to_position[a] > to_position[b]) sign *= conv.koszul_sign(t[a].first, t[b].first);
        }
      trip.emplace_back(where.at(t), static_cast<Index>(c), sign);
    }
    f.components.push_back(from_triplets(target->rank(n), source->rank(n), trip));
  }
  return f;
}

}  // namespace

ChainMap koszul_swap(const ComplexPtr& a, const ComplexPtr& b, const MonoidalConventions& conv) {
  return rebracket(pair(leaf(0), leaf(1)), pair(leaf(1), leaf(0)), {a, b}, conv);
}

ChainMap associator(const ComplexPtr& a, const ComplexPtr& b, const ComplexPtr& c) {
  return rebracket(pair(pair(leaf(0), leaf(1)), leaf(2)), pair(leaf(0), pair(leaf(1), leaf(2))), {a, b, c}, {});
}

ChainMap middle_swap(const ComplexPtr& a, const ComplexPtr& b, const ComplexPtr& c, const ComplexPtr& d,
                     const MonoidalConventions& conv) {
  return rebracket(pair(pair(leaf(0), leaf(1)), pair(leaf(2), leaf(3))),
                   pair(pair(leaf(0), leaf(2)), pair(leaf(1), leaf(3))), {a, b, c, d}, conv);
}

ComplexPtr unit_complex(int max_degree) {
  std::vector<Index> ranks(static_cast<std::size_t>(max_degree) + 1, 0);
  ranks[0] = 1;
  std::vector<SparseMatrix> diffs;
  for (int n = 1; n <= max_degree; ++n) diffs.push_back(sparse_zero(ranks[static_cast<std::size_t>(n) - 1], 0));
  auto c = std::make_shared<ChainComplex>(*make_complex(std::move(ranks), std::move(diffs), "Z[0]"));
  c->labels.assign(static_cast<std::size_t>(max_degree) + 1, {});
  c->labels[0] = {"1"};
  return c;
}

ChainMap right_unitor(const ComplexPtr& a, const ComplexPtr& unit) {
  auto source = tensor_chain(a, unit);
  ChainMap f{source, a, {}, source->max_degree};
  for (int n = 0; n <= source->max_degree; ++n) {
    auto off = block_offsets(*a, *unit, n);
    std::vector<Triplet> trip;
    add_block(trip, kron(sparse_identity(a->rank(n)), sparse_identity(unit->rank(0))), 0,
              off[static_cast<std::size_t>(n)]);
    f.components.push_back(from_triplets(a->rank(n), source->rank(n), trip));
  }
  return f;
}

ChainMap left_unitor(const ComplexPtr& a, const ComplexPtr& unit) {
  auto source = tensor_chain(unit, a);
  ChainMap f{source, a, {}, source->max_degree};
  for (int n = 0; n <= source->max_degree; ++n) {
    std::vector<Triplet> trip;
    add_block(trip, kron(sparse_identity(unit->rank(0)), sparse_identity(a->rank(n))), 0, 0);
    f.components.push_back(from_triplets(a->rank(n), source->rank(n), trip));
  }
  return f;
}

NormalizedChains quotient_chains(const ModulePtr& a) {
  NormalizedChains nc;
  nc.module = a;
  nc.unnormalized = unnormalized_chains(a);
  auto q = std::make_shared<ChainComplex>();
  q->max_degree = a->max_degree;
  q->name = "N(" + a->name + ")";
  const bool fast = a->set_like_degeneracies();
  std::vector<SparseMatrix> proj, lift;
  for (int n = 0; n <= a->max_degree; ++n) {
    std::vector<SparseMatrix> gens;
    for (int j = 0; j < n; ++j) gens.push_back(a->degeneracy(n - 1, j));
    SparseMatrix g = hstack(gens, a->rank(n));
    nc.degenerate.push_back(g);
    std::vector<std::string> names;
    if (fast) {
      std::vector<bool> hit(static_cast<std::size_t>(a->rank(n)), false);
      for (Index k = 0; k < g.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(g, k); it; ++it)
          if (it.value() != 0) hit[static_cast<std::size_t>(it.row())] = true;
      std::vector<Triplet> trip;
      Index kept = 0;
      for (Index r = 0; r < a->rank(n); ++r)
        if (!hit[static_cast<std::size_t>(r)]) {
          trip.emplace_back(kept++, r, 1);
          if (!a->labels.empty()) names.push_back(a->basis_labels(n)[static_cast<std::size_t>(r)]);
        }
      SparseMatrix p(kept, a->rank(n));
      p.setFromTriplets(trip.begin(), trip.end());
      lift.push_back(SparseMatrix(p.transpose()));
      proj.push_back(std::move(p));
    } else {
      auto snf = smith_normal_form(to_dense(g));
      for (Index i = 0; i < snf.rank; ++i)
        if (snf.S(i, i) != 1) throw ConstructionError("quotient_chains: degenerate part is not a direct summand");
      const Index keep = a->rank(n) - snf.rank;
      proj.push_back(pruned(to_sparse(snf.U.bottomRows(keep))));
      lift.push_back(pruned(to_sparse(snf.U_inverse.rightCols(keep))));
      for (Index k = 0; k < keep; ++k) names.push_back("n" + std::to_string(n) + "_" + std::to_string(k));
    }
    q->ranks.push_back(proj.back().rows());
    q->labels.push_back(std::move(names));
  }
  if (fast && a->labels.empty()) q->labels.clear();
  q->differentials.push_back(sparse_zero(0, q->ranks[0]));
  for (int n = 1; n <= a->max_degree; ++n)
    q->differentials.push_back(pruned(SparseMatrix(proj[static_cast<std::size_t>(n) - 1] * nc.unnormalized->d(n) *
                                                   lift[static_cast<std::size_t>(n)])));
  nc.complex = q;
  nc.projection = ChainMap{nc.unnormalized, q, std::move(proj), a->max_degree};
  nc.lift = ChainMap{q, nc.unnormalized, std::move(lift), a->max_degree};
  return nc;
}

MooreModel moore_model(const NormalizedChains& nc) {
  const auto& a = *nc.module;
  std::vector<SparseMatrix> basis;  // columns: Moore basis inside C(A)_n
  std::vector<SparseMatrix> comparison;
  for (int n = 0; n <= a.max_degree; ++n) {
    IntMatrix k;
    if (n == 0) {
      k = IntMatrix::Identity(a.rank(0), a.rank(0));
    } else {
      std::vector<SparseMatrix> faces;
      for (int i = 0; i < n; ++i) faces.push_back(a.face(n, i));
      k = integer_kernel(to_dense(vstack(faces, a.rank(n))));
    }
    IntMatrix m = to_dense(nc.projection.at(n)) * k;
    auto inv = integer_inverse(m);
    if (!inv)
      throw ConstructionError("moore_model: comparison with the quotient model is not invertible in degree " +
                              std::to_string(n));
    IntMatrix adjusted = k * *inv;
    basis.push_back(pruned(to_sparse(adjusted)));
    comparison.push_back(pruned(SparseMatrix(nc.projection.at(n) * basis.back())));
  }
  auto moore = std::make_shared<ChainComplex>();
  moore->max_degree = a.max_degree;
  moore->name = "Moore(" + a.name + ")";
  for (const auto& b : basis) moore->ranks.push_back(b.cols());
  moore->differentials.push_back(sparse_zero(0, moore->ranks[0]));
  for (int n = 1; n <= a.max_degree; ++n) {
    SparseMatrix image = a.face(n, n) * basis[static_cast<std::size_t>(n)];
    if (n % 2 != 0) image = -image;
    // Coordinates in the degree n-1 basis; projection is a left inverse there.
    SparseMatrix coords = pruned(SparseMatrix(nc.projection.at(n - 1) * image));
    if (!equal(SparseMatrix(basis[static_cast<std::size_t>(n) - 1] * coords), image))
      throw ConstructionError("moore_model: last face leaves the Moore subcomplex in degree " + std::to_string(n));
    moore->differentials.push_back(coords);
  }
  MooreModel mm;
  mm.complex = moore;
  mm.inclusion = ChainMap{moore, nc.unnormalized, basis, a.max_degree};
  mm.comparison = ChainMap{moore, nc.complex, std::move(comparison), a.max_degree};
  mm.comparison_inverse = inverse(mm.comparison);
  mm.section = compose(mm.inclusion, mm.comparison_inverse);
  return mm;
}

ChainMap normalized_map(const SimplicialMap& f, const NormalizedChains& source, const NormalizedChains& target,
                        VerificationReport* descent) {
  const int top = std::min({f.max_degree(), source.module->max_degree, target.module->max_degree});
  ChainMap g{source.complex, target.complex, {}, top};
  for (int n = 0; n <= top; ++n) {
    SparseMatrix pf = target.projection.at(n) * f.at(n);
    g.components.push_back(pruned(SparseMatrix(pf * source.lift.at(n))));
    if (descent) {
      const auto& gens = source.degenerate[static_cast<std::size_t>(n)];
      compare_matrices(*descent, n, SparseMatrix(pf * gens), sparse_zero(pf.rows(), gens.cols()));
    }
  }
  return g;
}

TensorQuotient tensor_quotient(const NormalizedChains& a, const NormalizedChains& b) {
  TensorQuotient t;
  t.unnormalized = tensor_chain(a.unnormalized, b.unnormalized);
  t.complex = tensor_chain(a.complex, b.complex);
  t.projection = tensor_maps(a.projection, b.projection, t.unnormalized, t.complex);
  t.lift = tensor_maps(a.lift, b.lift, t.complex, t.unnormalized);
  for (int n = 0; n <= t.unnormalized->max_degree; ++n) {
    auto off = block_offsets(*a.unnormalized, *b.unnormalized, n);
    std::vector<Triplet> trip;
    Index col = 0;
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      const auto& ga = a.degenerate[static_cast<std::size_t>(p)];
      const auto& gb = b.degenerate[static_cast<std::size_t>(q)];
      SparseMatrix left = kron(ga, sparse_identity(b.unnormalized->rank(q)));
      SparseMatrix right = kron(sparse_identity(a.unnormalized->rank(p)), gb);
      add_block(trip, left, off[static_cast<std::size_t>(p)], col);
      col += left.cols();
      add_block(trip, right, off[static_cast<std::size_t>(p)], col);
      col += right.cols();
    }
    t.degenerate.push_back(from_triplets(off.back(), col, trip));
  }
  return t;
}

VerificationReport verify_homotopy(const ChainHomotopy& h) {
  auto report = make_report("homotopy", {h.f.source->name, h.f.target->name}, h.valid_range);
  const auto& s = *h.f.source;
  const auto& t = *h.f.target;
  for (int n = 0; n < h.valid_range; ++n) {
    SparseMatrix lhs = t.d(n + 1) * h.components[static_cast<std::size_t>(n)];
    if (n >= 1) lhs = SparseMatrix(lhs + h.components[static_cast<std::size_t>(n) - 1] * s.d(n));
    compare_matrices(report, n, lhs, SparseMatrix(h.f.at(n) - h.g.at(n)), s.basis_labels(n), t.basis_labels(n));
  }
  return report;
}

namespace {

std::optional<std::vector<SparseMatrix>> solve_greedy(const ChainMap& f, const ChainMap& g, int range) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  std::vector<SparseMatrix> h;
  for (int n = 0; n < range; ++n) {
    SparseMatrix rhs = f.at(n) - g.at(n);
    if (n >= 1) rhs = SparseMatrix(rhs - h.back() * s.d(n));
    auto x = solve_integer_system(to_dense(t.d(n + 1)), to_dense(rhs));
    if (!x) return std::nullopt;
    h.push_back(pruned(to_sparse(*x)));
  }
  return h;
}

std::optional<std::vector<SparseMatrix>> solve_joint(const ChainMap& f, const ChainMap& g, int range,
                                                     const HomotopySearchOptions& options) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  // Unknown h_n is vectorized column-major: vec(A X B) = (B^T (x) A) vec X.
  std::vector<Index> unknown_offset{0}, equation_offset{0};
  for (int n = 0; n < range; ++n) {
    unknown_offset.push_back(unknown_offset.back() + t.rank(n + 1) * s.rank(n));
    equation_offset.push_back(equation_offset.back() + t.rank(n) * s.rank(n));
  }
  if (unknown_offset.back() > options.max_joint_unknowns)
    throw RangeError("solve_homotopy: joint system with " + std::to_string(unknown_offset.back()) +
                     " unknowns exceeds the configured limit");
  std::vector<Triplet> trip;
  IntMatrix rhs = IntMatrix::Zero(equation_offset.back(), 1);
  for (int n = 0; n < range; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    add_block(trip, kron(sparse_identity(s.rank(n)), t.d(n + 1)), equation_offset[nn], unknown_offset[nn]);
    if (n >= 1)
      add_block(trip, kron(SparseMatrix(s.d(n).transpose()), sparse_identity(t.rank(n))), equation_offset[nn],
                unknown_offset[nn - 1]);
    IntMatrix diff = to_dense(SparseMatrix(f.at(n) - g.at(n)));
    for (Index c = 0; c < diff.cols(); ++c)
      for (Index r = 0; r < diff.rows(); ++r) rhs(equation_offset[nn] + c * diff.rows() + r, 0) = diff(r, c);
  }
  SparseMatrix system = from_triplets(equation_offset.back(), unknown_offset.back(), trip);
  auto x = solve_integer_system(to_dense(system), rhs);
  if (!x) return std::nullopt;
  std::vector<SparseMatrix> h;
  for (int n = 0; n < range; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    IntMatrix m(t.rank(n + 1), s.rank(n));
    for (Index c = 0; c < m.cols(); ++c)
      for (Index r = 0; r < m.rows(); ++r) m(r, c) = (*x)(unknown_offset[nn] + c * m.rows() + r, 0);
    h.push_back(pruned(to_sparse(m)));
  }
  return h;
}

}  // namespace

std::optional<ChainHomotopy> solve_homotopy(const ChainMap& f, const ChainMap& g, const HomotopySearchOptions& options) {
  const int range = std::min({f.valid_range, g.valid_range, f.target->max_degree});
  ChainHomotopy h{f, g, {}, std::max(range, 0)};
  auto found = solve_greedy(f, g, h.valid_range);
  if (!found) found = solve_joint(f, g, h.valid_range, options);
  if (!found) return std::nullopt;
  h.components = std::move(*found);
  if (!verify_homotopy(h).passed()) throw std::logic_error("solve_homotopy: witness failed re-verification");
  return h;
}

namespace {

void dump_matrix(std::ostringstream& os, const SparseMatrix& m) {
  IntMatrix d = to_dense(m);
  for (Index r = 0; r < d.rows(); ++r) {
    os << " ";
    for (Index c = 0; c < d.cols(); ++c) os << " " << d(r, c);
    os << "\n";
  }
}

}  // namespace

std::string serialize(const ChainComplex& c) {
  std::ostringstream os;
  os << "chain-complex " << c.name << "\nmax-degree " << c.max_degree << "\nranks";
  for (Index r : c.ranks) os << " " << r;
  os << "\n";
  for (int n = 1; n <= c.max_degree; ++n) {
    os << "d " << n << " (" << c.rank(n - 1) << "x" << c.rank(n) << ")\n";
    dump_matrix(os, c.d(n));
  }
  return os.str();
}

std::string serialize(const ChainMap& f) {
  std::ostringstream os;
  os << "chain-map " << f.source->name << " -> " << f.target->name << "\nvalid-range " << f.valid_range << "\n";
  for (int n = 0; n <= f.valid_range; ++n) {
    os << "degree " << n << " (" << f.at(n).rows() << "x" << f.at(n).cols() << ")\n";
    dump_matrix(os, f.at(n));
  }
  return os.str();
}

std::string serialize(const ChainHomotopy& h) {
  std::ostringstream os;
  os << "chain-homotopy " << h.f.source->name << " -> " << h.f.target->name << "\nvalid-range " << h.valid_range
     << "\n";
  for (int n = 0; n < h.valid_range; ++n) {
    const auto& m = h.components[static_cast<std::size_t>(n)];
    os << "h " << n << " (" << m.rows() << "x" << m.cols() << ")\n";
    dump_matrix(os, m);
  }
  return os.str();
}

}  // namespace dk
