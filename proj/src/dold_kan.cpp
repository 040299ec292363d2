#include "dk/dold_kan.hpp"

#include "dk/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dk {

namespace {

struct GammaBlock {
  int k;
  DeltaMorphism sigma;
  Index offset;
};

struct GammaLevel {
  std::vector<GammaBlock> blocks;
  std::map<std::vector<int>, std::size_t> index;  // sigma values -> block
  Index total = 0;

  const GammaBlock& find(const DeltaMorphism& sigma) const {
    return blocks[index.at(sigma.values())];
  }
};

GammaLevel gamma_level(const std::vector<Index>& ranks, int n) {
  GammaLevel level;
  for (int k = 0; k <= n; ++k)
    for (auto& s : surjections(n, k)) {
      level.index.emplace(s.values(), level.blocks.size());
      level.blocks.push_back({k, s, level.total});
      level.total += ranks[static_cast<std::size_t>(k)];
    }
  return level;
}

void add_block(std::vector<Triplet>& t, const SparseMatrix& m, Index row, Index col, int sign = 1) {
  for (int o = 0; o < m.outerSize(); ++o)
    for (SparseMatrix::InnerIterator it(m, o); it; ++it)
      t.emplace_back(row + it.row(), col + it.col(), sign > 0 ? it.value() : Integer(-it.value()));
}

SparseMatrix from_triplets(Index rows, Index cols, const std::vector<Triplet>& t) {
  SparseMatrix m(rows, cols);
  m.setFromTriplets(t.begin(), t.end());
  return pruned(std::move(m));
}

// Matrix of Gamma(C)(theta) : Gamma_m -> Gamma_n for theta : [n] -> [m].
SparseMatrix gamma_action(const ChainComplex& c, const std::vector<GammaLevel>& levels, const DeltaMorphism& theta) {
  const int n = theta.source_rank();
  const int m = theta.target_rank();
  const auto& src = levels[static_cast<std::size_t>(m)];
  const auto& dst = levels[static_cast<std::size_t>(n)];
  std::vector<Triplet> trip;
  for (const auto& b : src.blocks) {
    auto st = compose(b.sigma, theta);  // [n] -> [k]
    std::vector<int> image(st.values());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    const int k = b.k;
    const int kk = static_cast<int>(image.size()) - 1;
    std::vector<int> tau_values;
    for (int v : st.values())
      tau_values.push_back(static_cast<int>(std::lower_bound(image.begin(), image.end(), v) - image.begin()));
    DeltaMorphism tau(kk, tau_values);
    if (kk == k) {
      add_block(trip, sparse_identity(c.rank(k)), dst.find(tau).offset, b.offset);
    } else if (kk == k - 1 && image.back() == k - 1) {
      add_block(trip, c.d(k), dst.find(tau).offset, b.offset, k % 2 == 0 ? 1 : -1);
    }
  }
  return from_triplets(dst.total, src.total, trip);
}

std::string label_of(const ChainComplex& c, int k, Index b) {
  const auto* labels = c.basis_labels(k);
  if (labels && static_cast<std::size_t>(b) < labels->size()) return (*labels)[static_cast<std::size_t>(b)];
  return "e" + std::to_string(b);
}

void compare_levels(VerificationReport& r, const SimplicialMap& f, const SimplicialMap& g, int top) {
  const int last = std::min({top, f.max_degree(), g.max_degree()});
  for (int n = 0; n <= last; ++n) {
    const auto* cl = f.source && n <= f.source->max_degree ? &f.source->basis_labels(n) : nullptr;
    const auto* rl = f.target && n <= f.target->max_degree ? &f.target->basis_labels(n) : nullptr;
    if (f.at(n).rows() != g.at(n).rows() || f.at(n).cols() != g.at(n).cols()) {
      r.fail(n, "shape", std::to_string(f.at(n).rows()) + "x" + std::to_string(f.at(n).cols()),
             std::to_string(g.at(n).rows()) + "x" + std::to_string(g.at(n).cols()));
      continue;
    }
    compare_matrices(r, n, f.at(n), g.at(n), cl, rl);
  }
}

// Unit data from an existing quotient model and Gamma N A.
SimplicialAdjunction unit_from(const NormalizedChains& nc, ModulePtr gamma_n) {
  SimplicialAdjunction adj;
  adj.module = nc.module;
  adj.normalized = nc;
  adj.moore = moore_model(nc);
  adj.gamma_of_normalized = std::move(gamma_n);
  const auto& a = *nc.module;
  const auto& c = *nc.complex;
  adj.psi = SimplicialMap{adj.gamma_of_normalized, nc.module, {}};
  for (int n = 0; n <= a.max_degree; ++n) {
    auto level = gamma_level(c.ranks, n);
    std::vector<SparseMatrix> blocks;
    for (const auto& b : level.blocks)
      blocks.push_back(SparseMatrix(apply_morphism(a, b.sigma) * adj.moore.section.at(b.k)));
    adj.psi.levels.push_back(pruned(hstack(blocks, a.rank(n))));
  }
  adj.unit = inverse(adj.psi);
  return adj;
}

ChainAdjunction counit_from(const ComplexPtr& c, ModulePtr g, const NormalizedChains& nc) {
  ChainAdjunction adj;
  adj.complex = c;
  adj.gamma = std::move(g);
  adj.normalized = nc;
  const int top = adj.gamma->max_degree;
  adj.counit = ChainMap{nc.complex, c, {}, top};
  for (int n = 0; n <= top; ++n) {
    // The identity surjection is the last summand of level n.
    const Index rn = c->rank(n);
    const Index total = adj.gamma->rank(n);
    std::vector<Triplet> trip;
    for (Index i = 0; i < rn; ++i) trip.emplace_back(i, total - rn + i, Integer(1));
    auto extract = from_triplets(rn, total, trip);
    adj.counit.components.push_back(pruned(SparseMatrix(extract * nc.lift.at(n))));
  }
  adj.counit_inverse = inverse(adj.counit);
  return adj;
}

}  // namespace

ModulePtr gamma(const ComplexPtr& c, int max_degree) {
  if (max_degree < 0) throw RangeError("gamma: negative truncation");
  if (max_degree > c->max_degree)
    throw RangeError("gamma: complex known up to degree " + std::to_string(c->max_degree) + ", need " +
                     std::to_string(max_degree));
  std::vector<GammaLevel> levels;
  for (int n = 0; n <= max_degree; ++n) levels.push_back(gamma_level(c->ranks, n));
  auto g = std::make_shared<SimplicialModule>();
  g->max_degree = max_degree;
  g->name = "gamma(" + c->name + ")";
  g->faces.resize(static_cast<std::size_t>(max_degree) + 1);
  g->degeneracies.resize(static_cast<std::size_t>(max_degree) + 1);
  for (int n = 0; n <= max_degree; ++n) {
    const auto& level = levels[static_cast<std::size_t>(n)];
    g->ranks.push_back(level.total);
    std::vector<std::string> labels;
    for (const auto& b : level.blocks)
      for (Index i = 0; i < c->rank(b.k); ++i) labels.push_back(to_string(b.sigma) + ":" + label_of(*c, b.k, i));
    g->labels.push_back(std::move(labels));
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        g->faces[static_cast<std::size_t>(n)].push_back(gamma_action(*c, levels, DeltaMorphism::coface(n, i)));
    if (n < max_degree)
      for (int j = 0; j <= n; ++j)
        g->degeneracies[static_cast<std::size_t>(n)].push_back(
            gamma_action(*c, levels, DeltaMorphism::codegeneracy(n, j)));
  }
  check_shapes(*g);
  return g;
}

SimplicialMap gamma(const ChainMap& f, const ModulePtr& source, const ModulePtr& target) {
  const int top = std::min(source->max_degree, target->max_degree);
  if (f.valid_range < top) throw RangeError("gamma: chain map not valid up to degree " + std::to_string(top));
  SimplicialMap g{source, target, {}};
  for (int n = 0; n <= top; ++n) {
    auto src = gamma_level(f.source->ranks, n);
    auto dst = gamma_level(f.target->ranks, n);
    if (src.total != source->rank(n) || dst.total != target->rank(n))
      throw CompositionError("gamma: objects do not match the chain map in level " + std::to_string(n));
    std::vector<Triplet> trip;
    for (std::size_t b = 0; b < src.blocks.size(); ++b)
      add_block(trip, f.at(src.blocks[b].k), dst.blocks[b].offset, src.blocks[b].offset);
    g.levels.push_back(from_triplets(dst.total, src.total, trip));
  }
  return g;
}

SimplicialAdjunction build_adjunction(const ModulePtr& a) {
  auto nc = quotient_chains(a);
  auto g = gamma(nc.complex, a->max_degree);
  return unit_from(nc, g);
}

ChainAdjunction build_adjunction(const ComplexPtr& c, int max_degree) {
  auto g = gamma(c, max_degree);
  return counit_from(c, g, quotient_chains(g));
}

VerificationReport check_triangle_n(const ModulePtr& a) {
  auto report = make_report("triangle-n", {a->name}, a->max_degree);
  const int top = a->max_degree;
  auto unit = build_adjunction(a);
  auto nc_gamma = quotient_chains(unit.gamma_of_normalized);
  auto counit = counit_from(unit.normalized.complex, unit.gamma_of_normalized, nc_gamma);
  auto n_eta = normalized_map(unit.unit, unit.normalized, nc_gamma);
  compare_maps(report, compose(counit.counit, n_eta), identity_chain_map(unit.normalized.complex), top);
  return report;
}

VerificationReport check_triangle_gamma(const ComplexPtr& c, int max_degree) {
  auto report = make_report("triangle-gamma", {c->name}, max_degree);
  auto counit = build_adjunction(c, max_degree);
  auto g_n_g = gamma(counit.normalized.complex, max_degree);
  auto unit = unit_from(counit.normalized, g_n_g);
  auto g_eps = gamma(counit.counit, g_n_g, counit.gamma);
  compare_levels(report, compose(g_eps, unit.unit), identity_map(counit.gamma), max_degree);
  return report;
}

VerificationReport check_gamma_valid(const ComplexPtr& c, int max_degree) {
  auto report = validate(*gamma(c, max_degree));
  report.check_name = "gamma-valid";
  report.objects = {c->name};
  return report;
}

VerificationReport check_counit_iso(const ComplexPtr& c, int max_degree) {
  auto report = make_report("counit-iso", {c->name}, max_degree);
  auto sq = check_square_zero(*c);
  report.absorb(sq);
  if (!sq.passed()) return report;
  ChainAdjunction counit;
  try {
    counit = build_adjunction(c, max_degree);
  } catch (const ConstructionError& e) {
    report.fail(0, "counit", "not invertible", e.what());
    return report;
  }
  report.absorb(check_chain_map(counit.counit, "counit"));
  report.absorb(check_chain_map(counit.counit_inverse, "counit-inverse"));
  compare_maps(report, compose(counit.counit, counit.counit_inverse), identity_chain_map(c), max_degree);
  try {
    auto unit = unit_from(counit.normalized, gamma(counit.normalized.complex, max_degree));
    report.absorb(check_simplicial_map(unit.psi));
    report.absorb(check_simplicial_map(unit.unit));
  } catch (const ConstructionError& e) {
    report.fail(0, "unit", "not invertible", e.what());
  }
  return report;
}

ModulePtr GammaWorkspace::gamma(const ComplexPtr& c) {
  auto it = gammas_.find(c.get());
  if (it != gammas_.end()) return it->second;
  keep_alive_.push_back(c);
  auto g = dk::gamma(c, max_degree_);
  gammas_.emplace(c.get(), g);
  return g;
}

ComplexPtr GammaWorkspace::tensor(const ComplexPtr& x, const ComplexPtr& y) {
  Key key{x.get(), y.get()};
  auto it = tensors_.find(key);
  if (it != tensors_.end()) return it->second;
  keep_alive_.push_back(x);
  keep_alive_.push_back(y);
  auto t = tensor_chain(x, y);
  tensors_.emplace(key, t);
  return t;
}

const ChainAdjunction& GammaWorkspace::counit(const ComplexPtr& c) {
  auto it = counits_.find(c.get());
  if (it != counits_.end()) return it->second;
  auto g = gamma(c);
  return counits_.emplace(c.get(), counit_from(c, g, chains_.normalized(g))).first->second;
}

const SimplicialAdjunction& GammaWorkspace::unit(const ModulePtr& a) {
  auto it = units_.find(a.get());
  if (it != units_.end()) return it->second;
  const auto& nc = chains_.normalized(a);
  return units_.emplace(a.get(), unit_from(nc, gamma(nc.complex))).first->second;
}

SimplicialMap GammaWorkspace::lax(const ComplexPtr& x, const ComplexPtr& y) {
  Key key{x.get(), y.get()};
  auto it = lax_.find(key);
  if (it != lax_.end()) return it->second;
  auto gx = gamma(x);
  auto gy = gamma(y);
  auto a = chains_.tensor(gx, gy);
  auto aw = chains_.aw(gx, gy, true);
  auto ee = tensor_maps(counit(x).counit, counit(y).counit, aw.target, tensor(x, y));
  const auto& u = unit(a);
  auto l = compose(dk::gamma(compose(ee, aw), u.gamma_of_normalized, gamma(tensor(x, y))), u.unit);
  return lax_.emplace(key, std::move(l)).first->second;
}

SimplicialMap GammaWorkspace::colax(const ComplexPtr& x, const ComplexPtr& y) {
  Key key{x.get(), y.get()};
  auto it = colax_.find(key);
  if (it != colax_.end()) return it->second;
  auto gx = gamma(x);
  auto gy = gamma(y);
  auto a = chains_.tensor(gx, gy);
  auto nabla = chains_.nabla(gx, gy, true);
  auto ei = tensor_maps(counit(x).counit_inverse, counit(y).counit_inverse, tensor(x, y), nabla.source);
  const auto& u = unit(a);
  auto c = compose(u.psi, dk::gamma(compose(nabla, ei), gamma(tensor(x, y)), u.gamma_of_normalized));
  return colax_.emplace(key, std::move(c)).first->second;
}

ChainMap GammaWorkspace::colax_from_lax(const ModulePtr& a, const ModulePtr& b) {
  auto na = chains_.normalized_complex(a);
  auto nb = chains_.normalized_complex(b);
  const auto& ua = unit(a);
  const auto& ub = unit(b);
  auto etas = dk::tensor(ua.unit, ub.unit, chains_.tensor(a, b), chains_.tensor(gamma(na), gamma(nb)));
  auto h = compose(lax(na, nb), etas);
  auto nh = chains_.apply(h, true);
  return compose(counit(tensor(na, nb)).counit, nh);
}

SimplicialMap transfer_colax_to_lax(GammaWorkspace& ws, const ComplexPtr& x, const ComplexPtr& y) {
  return ws.lax(x, y);
}

TransferredPair pair_transfer(GammaWorkspace& ws, const ComplexPtr& x, const ComplexPtr& y) {
  return {ws.colax(x, y), ws.lax(x, y)};
}

SimplicialMap GammaFunctor::image_of_middle_swap(const Object& a, const Object& b, const Object& c, const Object& d) {
  auto s = dk::middle_swap(a, b, c, d, ws.chains().conventions());
  return dk::gamma(s, ws.gamma(ws.tensor(ws.tensor(a, b), ws.tensor(c, d))),
                   ws.gamma(ws.tensor(ws.tensor(a, c), ws.tensor(b, d))));
}

SimplicialMap GammaFunctor::target_middle_swap(const Object& a, const Object& b, const Object& c, const Object& d) {
  return ws.chains().middle_swap(ws.gamma(a), ws.gamma(b), ws.gamma(c), ws.gamma(d));
}

void GammaFunctor::compare(VerificationReport& r, const Map& f, const Map& g, int top) { compare_levels(r, f, g, top); }

VerificationReport check_colax_lax_roundtrip(GammaWorkspace& ws, const ModulePtr& a, const ModulePtr& b) {
  auto report = make_report("colax-lax-roundtrip", {a->name, b->name}, ws.max_degree());
  compare_maps(report, ws.colax_from_lax(a, b), ws.chains().aw(a, b, true), ws.max_degree());
  return report;
}

VerificationReport check_transfer_inverse(GammaWorkspace& ws, const ComplexPtr& x, const ComplexPtr& y) {
  auto report = make_report("transfer-inverse", {x->name, y->name}, ws.max_degree());
  auto p = pair_transfer(ws, x, y);
  compare_levels(report, compose(p.lax, p.colax), identity_map(ws.gamma(ws.tensor(x, y))), ws.max_degree());
  return report;
}

VerificationReport check_transfer_lax_associative(GammaWorkspace& ws, const ComplexPtr& x, const ComplexPtr& y,
                                                  const ComplexPtr& z) {
  auto report = make_report("transfer-lax-associative", {x->name, y->name, z->name}, ws.max_degree());
  auto& cw = ws.chains();
  auto gx = ws.gamma(x), gy = ws.gamma(y), gz = ws.gamma(z);
  auto xy = ws.tensor(x, y);
  auto yz = ws.tensor(y, z);
  auto lhs = compose(ws.lax(xy, z), dk::tensor(ws.lax(x, y), identity_map(gz), cw.tensor(cw.tensor(gx, gy), gz),
                                                cw.tensor(ws.gamma(xy), gz)));
  auto inner = compose(ws.lax(x, yz), dk::tensor(identity_map(gx), ws.lax(y, z), cw.tensor(gx, cw.tensor(gy, gz)),
                                                 cw.tensor(gx, ws.gamma(yz))));
  auto back = inverse(associator(x, y, z));
  auto rhs = compose(dk::gamma(back, ws.gamma(ws.tensor(x, yz)), ws.gamma(ws.tensor(xy, z))), inner);
  compare_levels(report, lhs, rhs, ws.max_degree());
  return report;
}

VerificationReport check_transfer_bialgebra(GammaWorkspace& ws, const ComplexPtr& x, const ComplexPtr& y,
                                            const ComplexPtr& z, const ComplexPtr& w) {
  GammaFunctor f{ws};
  return check_bialgebra(f, x, y, z, w, ws.max_degree(), "transfer-bialgebra");
}

}  // namespace dk
