#include "dk/eilenberg_zilber.hpp"

#include "dk/errors.hpp"
#include "dk/homology.hpp"

#include <algorithm>

namespace dk {

ShuffleTable enumerate_shuffles(int k, int l, const MonoidalConventions& conv) {
  if (k < 0 || l < 0) throw RangeError("enumerate_shuffles: negative size");
  ShuffleTable t{k, l, {}};
  const int n = k + l;
  // Walk the k-subsets of {0..n-1} in lexicographic order.
  std::vector<int> alpha(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) alpha[static_cast<std::size_t>(i)] = i;
  while (true) {
    ShuffleEntry e;
    e.alpha = alpha;
    std::size_t next = 0;
    int inversions = 0;
    for (int v = 0; v < n; ++v) {
      if (next < alpha.size() && alpha[next] == v) {
        ++next;
      } else {
        e.beta.push_back(v);
        inversions += static_cast<int>(alpha.size() - next);  // alphas above this beta
      }
    }
    e.sign = conv.shuffle_sign == MonoidalConventions::ShuffleSign::AlwaysPositive || inversions % 2 == 0 ? 1 : -1;
    t.entries.push_back(std::move(e));
    int i = k - 1;
    while (i >= 0 && alpha[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++alpha[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) alpha[static_cast<std::size_t>(j)] = alpha[static_cast<std::size_t>(j) - 1] + 1;
  }
  return t;
}

SparseMatrix back_faces(const SimplicialModule& a, int n, int p) {
  SparseMatrix m = sparse_identity(a.rank(n));
  for (int level = n; level > p; --level) m = SparseMatrix(a.face(level, level) * m);
  return m;
}

SparseMatrix front_faces(const SimplicialModule& a, int n, int q) {
  SparseMatrix m = sparse_identity(a.rank(n));
  for (int level = n; level > q; --level) m = SparseMatrix(a.face(level, 0) * m);
  return m;
}

SparseMatrix degeneracy_string(const SimplicialModule& a, int level, const std::vector<int>& indices) {
  SparseMatrix m = sparse_identity(a.rank(level));
  for (int i : indices) m = SparseMatrix(a.degeneracy(level++, i) * m);
  return m;
}

ModulePtr ChainWorkspace::tensor(const ModulePtr& a, const ModulePtr& b) {
  Key key{a.get(), b.get()};
  auto it = tensors_.find(key);
  if (it != tensors_.end()) return it->second;
  auto t = dk::tensor(a, b);
  tensors_.emplace(key, t);
  // The factors must outlive the cache keys that point at them.
  keep_alive_.push_back(a);
  keep_alive_.push_back(b);
  return t;
}

ComplexPtr ChainWorkspace::chains(const ModulePtr& a) {
  auto it = chains_.find(a.get());
  if (it != chains_.end()) return it->second.second;
  auto c = unnormalized_chains(a);
  chains_.emplace(a.get(), std::make_pair(a, c));
  return c;
}

const NormalizedChains& ChainWorkspace::normalized(const ModulePtr& a) {
  auto it = normalized_.find(a.get());
  if (it != normalized_.end()) return it->second.second;
  return normalized_.emplace(a.get(), std::make_pair(a, quotient_chains(a))).first->second.second;
}

const TensorQuotient& ChainWorkspace::tensor_quotient(const ModulePtr& a, const ModulePtr& b) {
  Key key{a.get(), b.get()};
  auto it = tensor_quotients_.find(key);
  if (it != tensor_quotients_.end()) return it->second;
  return tensor_quotients_.emplace(key, dk::tensor_quotient(normalized(a), normalized(b))).first->second;
}

ComplexPtr ChainWorkspace::tensor_chains(const ModulePtr& a, const ModulePtr& b, bool normalized) {
  if (normalized) return tensor_quotient(a, b).complex;
  Key key{a.get(), b.get()};
  auto it = tensor_chains_.find(key);
  if (it != tensor_chains_.end()) return it->second;
  auto t = tensor_chain(chains(a), chains(b));
  tensor_chains_.emplace(key, t);
  return t;
}

ChainMap ChainWorkspace::aw(const ModulePtr& a, const ModulePtr& b, bool normalized, VerificationReport* descent) {
  auto key = std::make_pair(Key{a.get(), b.get()}, normalized);
  auto it = aw_.find(key);
  if (it != aw_.end() && !descent) return it->second;
  auto ab = tensor(a, b);
  ChainMap result;
  if (!normalized) {
    auto source = chains(ab);
    auto target = tensor_chains(a, b, false);
    const int top = std::min(source->max_degree, target->max_degree);
    ChainMap f{source, target, {}, top};
    for (int n = 0; n <= top; ++n) {
      std::vector<SparseMatrix> blocks;
      for (int p = 0; p <= n; ++p) blocks.push_back(kron(back_faces(*a, n, p), front_faces(*b, n, n - p)));
      f.components.push_back(pruned(vstack(blocks, ab->rank(n))));
    }
    result = std::move(f);
  } else {
    ChainMap u = aw(a, b, false);
    const auto& nab = this->normalized(ab);
    const auto& tq = tensor_quotient(a, b);
    result = compose(tq.projection, compose(u, nab.lift));
    result.source = nab.complex;
    result.target = tq.complex;
    if (descent) {
      for (int n = 0; n <= result.valid_range; ++n) {
        SparseMatrix image = tq.projection.at(n) * u.at(n) * nab.degenerate[static_cast<std::size_t>(n)];
        compare_matrices(*descent, n, image, sparse_zero(image.rows(), image.cols()));
      }
    }
  }
  aw_.insert_or_assign(key, result);
  return result;
}

ChainMap ChainWorkspace::nabla(const ModulePtr& a, const ModulePtr& b, bool normalized, VerificationReport* descent) {
  auto key = std::make_pair(Key{a.get(), b.get()}, normalized);
  auto it = nabla_.find(key);
  if (it != nabla_.end() && !descent) return it->second;
  auto ab = tensor(a, b);
  ChainMap result;
  if (!normalized) {
    auto source = tensor_chains(a, b, false);
    auto target = chains(ab);
    const int top = std::min(source->max_degree, target->max_degree);
    ChainMap f{source, target, {}, top};
    for (int n = 0; n <= top; ++n) {
      std::vector<SparseMatrix> blocks;
      for (int k = 0; k <= n; ++k) {
        const int l = n - k;
        SparseMatrix block = sparse_zero(ab->rank(n), a->rank(k) * b->rank(l));
        for (const auto& e : enumerate_shuffles(k, l, conv_).entries) {
          SparseMatrix term = kron(degeneracy_string(*a, k, e.beta), degeneracy_string(*b, l, e.alpha));
          block = e.sign > 0 ? SparseMatrix(block + term) : SparseMatrix(block - term);
        }
        blocks.push_back(pruned(std::move(block)));
      }
      f.components.push_back(pruned(hstack(blocks, ab->rank(n))));
    }
    result = std::move(f);
  } else {
    ChainMap u = nabla(a, b, false);
    const auto& nab = this->normalized(ab);
    const auto& tq = tensor_quotient(a, b);
    result = compose(nab.projection, compose(u, tq.lift));
    result.source = tq.complex;
    result.target = nab.complex;
    if (descent) {
      for (int n = 0; n <= result.valid_range; ++n) {
        SparseMatrix image = nab.projection.at(n) * u.at(n) * tq.degenerate[static_cast<std::size_t>(n)];
        compare_matrices(*descent, n, image, sparse_zero(image.rows(), image.cols()));
      }
    }
  }
  nabla_.insert_or_assign(key, result);
  return result;
}

ChainMap ChainWorkspace::apply(const SimplicialMap& f, bool normalized, VerificationReport* descent) {
  if (!normalized) return chains_of(f, chains(f.source), chains(f.target));
  return normalized_map(f, this->normalized(f.source), this->normalized(f.target), descent);
}

SimplicialMap ChainWorkspace::swap(const ModulePtr& a, const ModulePtr& b) {
  SimplicialMap s{tensor(a, b), tensor(b, a), {}};
  for (int n = 0; n <= a->max_degree; ++n) s.levels.push_back(factor_permutation({a->rank(n), b->rank(n)}, {1, 0}));
  return s;
}

SimplicialMap ChainWorkspace::middle_swap(const ModulePtr& a, const ModulePtr& b, const ModulePtr& c,
                                          const ModulePtr& d) {
  SimplicialMap s{tensor(tensor(a, b), tensor(c, d)), tensor(tensor(a, c), tensor(b, d)), {}};
  for (int n = 0; n <= a->max_degree; ++n)
    s.levels.push_back(factor_permutation({a->rank(n), b->rank(n), c->rank(n), d->rank(n)}, {0, 2, 1, 3}));
  return s;
}

ChainMap aw_map(const ModulePtr& a, const ModulePtr& b, bool normalized) {
  ChainWorkspace ws;
  return ws.aw(a, b, normalized);
}

ChainMap shuffle_map(const ModulePtr& a, const ModulePtr& b, bool normalized, const MonoidalConventions& conv) {
  ChainWorkspace ws(conv);
  return ws.nabla(a, b, normalized);
}

namespace {

ChainMap limited(ChainMap f, int top) {
  f.valid_range = std::min(f.valid_range, top);
  return f;
}

std::string flavour(bool normalized) { return normalized ? "normalized" : "unnormalized"; }

}  // namespace

VerificationReport check_aw_nabla_identity(ChainWorkspace& ws, const ModulePtr& a, const ModulePtr& b, bool normalized,
                                           int max_level) {
  auto report = make_report("aw-nabla-identity", {a->name, b->name}, max_level);
  report.notes.push_back(flavour(normalized));
  auto composite = compose(ws.aw(a, b, normalized), ws.nabla(a, b, normalized));
  compare_maps(report, composite, identity_chain_map(ws.tensor_chains(a, b, normalized)), max_level);
  return report;
}

VerificationReport check_nabla_symmetric(ChainWorkspace& ws, const ModulePtr& a, const ModulePtr& b, bool normalized,
                                         int max_level) {
  auto report = make_report("nabla-symmetric", {a->name, b->name}, max_level);
  report.notes.push_back(flavour(normalized));
  auto lhs = compose(ws.nabla(b, a, normalized),
                     koszul_swap(ws.chains(a, normalized), ws.chains(b, normalized), ws.conventions()));
  auto rhs = compose(ws.apply(ws.swap(a, b), normalized), ws.nabla(a, b, normalized));
  compare_maps(report, lhs, rhs, max_level);
  return report;
}

VerificationReport check_aw_chain_map(ChainWorkspace& ws, const ModulePtr& a, const ModulePtr& b, bool normalized,
                                      int max_level) {
  auto report = check_chain_map(limited(ws.aw(a, b, normalized), max_level), "aw-chain-map");
  report.objects = {a->name, b->name};
  report.notes.push_back(flavour(normalized));
  return report;
}

VerificationReport check_nabla_chain_map(ChainWorkspace& ws, const ModulePtr& a, const ModulePtr& b, bool normalized,
                                         int max_level) {
  auto report = check_chain_map(limited(ws.nabla(a, b, normalized), max_level), "nabla-chain-map");
  report.objects = {a->name, b->name};
  report.notes.push_back(flavour(normalized));
  return report;
}

VerificationReport check_descent(ChainWorkspace& ws, const ModulePtr& a, const ModulePtr& b, int max_level) {
  auto report = make_report("descent", {a->name, b->name}, max_level);
  VerificationReport aw_part, nabla_part;
  ws.aw(a, b, true, &aw_part);
  ws.nabla(a, b, true, &nabla_part);
  for (auto* part : {&aw_part, &nabla_part}) {
    for (auto w : part->witnesses) {
      if (w.level > max_level) continue;
      w.label = (part == &aw_part ? "aw: " : "nabla: ") + w.label;
      report.add_witness(std::move(w));
    }
  }
  return report;
}

VerificationReport check_aw_coassociative(ChainWorkspace& ws, const ModulePtr& a, const ModulePtr& b,
                                          const ModulePtr& c, bool normalized, int max_level) {
  auto report = make_report("aw-coassociative", {a->name, b->name, c->name}, max_level);
  report.notes.push_back(flavour(normalized));
  auto ca = ws.chains(a, normalized);
  auto cb = ws.chains(b, normalized);
  auto cc = ws.chains(c, normalized);
  auto lhs = compose(associator(ca, cb, cc),
                     compose(tensor_maps(ws.aw(a, b, normalized), identity_chain_map(cc)),
                             ws.aw(ws.tensor(a, b), c, normalized)));
  auto rhs = compose(tensor_maps(identity_chain_map(ca), ws.aw(b, c, normalized)),
                     ws.aw(a, ws.tensor(b, c), normalized));
  compare_maps(report, lhs, rhs, max_level);
  return report;
}

VerificationReport check_nabla_associative(ChainWorkspace& ws, const ModulePtr& a, const ModulePtr& b,
                                           const ModulePtr& c, bool normalized, int max_level) {
  auto report = make_report("nabla-associative", {a->name, b->name, c->name}, max_level);
  report.notes.push_back(flavour(normalized));
  auto ca = ws.chains(a, normalized);
  auto cb = ws.chains(b, normalized);
  auto cc = ws.chains(c, normalized);
  auto lhs = compose(ws.nabla(ws.tensor(a, b), c, normalized),
                     tensor_maps(ws.nabla(a, b, normalized), identity_chain_map(cc)));
  auto rhs = compose(ws.nabla(a, ws.tensor(b, c), normalized),
                     compose(tensor_maps(identity_chain_map(ca), ws.nabla(b, c, normalized)), associator(ca, cb, cc)));
  compare_maps(report, lhs, rhs, max_level);
  return report;
}

namespace {

// alpha: F(Z) -> Z[0] and kappa: Z[0] -> F(Z), both scale times the canonical map.
ChainMap unit_counit(const ComplexPtr& fz, const ComplexPtr& z0, long long scale, bool towards_unit) {
  ChainMap m{towards_unit ? fz : z0, towards_unit ? z0 : fz, {}, std::min(fz->max_degree, z0->max_degree)};
  for (int n = 0; n <= m.valid_range; ++n) {
    SparseMatrix block = towards_unit ? sparse_zero(z0->rank(n), fz->rank(n)) : sparse_zero(fz->rank(n), z0->rank(n));
    if (n == 0) block = sparse_from_rows(block.rows(), block.cols(), std::vector<long long>(1, scale));
    m.components.push_back(pruned(std::move(block)));
  }
  return m;
}

SimplicialMap identity_matrices(const ModulePtr& source, const ModulePtr& target) {
  SimplicialMap f{source, target, {}};
  for (int n = 0; n <= source->max_degree; ++n) f.levels.push_back(sparse_identity(source->rank(n)));
  return f;
}

}  // namespace

VerificationReport unit_coherence_check(ChainWorkspace& ws, const ModulePtr& a, int max_level,
                                        const UnitCoherenceOptions& options) {
  auto report = make_report("unit-coherence", {a->name}, max_level);
  const bool nz = options.normalized;
  report.notes.push_back(flavour(nz));
  auto u = constant_z(a->max_degree);
  auto fa = ws.chains(a, nz);
  auto fu = ws.chains(u, nz);
  if (nz && (fu->rank(0) != 1 || std::any_of(fu->ranks.begin() + 1, fu->ranks.end(), [](Index r) { return r != 0; })))
    throw std::logic_error("unit_coherence_check: N of the constant object is not Z[0]");
  auto z0 = unit_complex(a->max_degree);
  auto alpha = unit_counit(fu, z0, options.unit_scale, true);
  auto kappa = unit_counit(fu, z0, options.unit_scale, false);
  auto id_a = identity_chain_map(fa);
  auto au = ws.tensor(a, u);
  auto ua = ws.tensor(u, a);
  // A (x) Z and Z (x) A have the basis of A, so the unitors are identity matrices.
  auto rho = ws.apply(identity_matrices(au, a), nz);
  auto lambda = ws.apply(identity_matrices(ua, a), nz);
  auto rho_inv = ws.apply(identity_matrices(a, au), nz);
  auto lambda_inv = ws.apply(identity_matrices(a, ua), nz);

  auto sub = [&report, max_level](const std::string& what, const ChainMap& l, const ChainMap& r) {
    VerificationReport part;
    compare_maps(part, l, r, max_level);
    for (auto w : part.witnesses) {
      w.label = what + ": " + w.label;
      report.add_witness(std::move(w));
    }
  };
  sub("colax right", compose(right_unitor(fa, z0), compose(tensor_maps(id_a, alpha), ws.aw(a, u, nz))), rho);
  sub("colax left", compose(left_unitor(fa, z0), compose(tensor_maps(alpha, id_a), ws.aw(u, a, nz))), lambda);
  sub("lax right", compose(ws.nabla(a, u, nz), tensor_maps(id_a, kappa)), compose(rho_inv, right_unitor(fa, z0)));
  sub("lax left", compose(ws.nabla(u, a, nz), tensor_maps(kappa, id_a)), compose(lambda_inv, left_unitor(fa, z0)));
  return report;
}

VerificationReport unit_coherence_check(const ModulePtr& a, const UnitCoherenceOptions& options) {
  ChainWorkspace ws;
  return unit_coherence_check(ws, a, a->max_degree, options);
}

namespace {

void homotopy_report(VerificationReport& report, const ChainMap& f, const ChainMap& g, const std::string& what) {
  auto h = solve_homotopy(f, g);
  if (!h) {
    report.fail(f.valid_range, what, "no integer homotopy", "homotopy required");
    return;
  }
  report.artifacts.push_back({what + " homotopy", serialize(*h)});
  for (int n = 0; n + 1 <= h->valid_range; ++n) {
    auto hs = homology(*f.source, n);
    auto ht = homology(*f.target, n);
    IntMatrix mf = induced_map_on_homology(f, hs, ht);
    IntMatrix mg = induced_map_on_homology(g, hs, ht);
    compare_matrices(report, n, to_sparse(mf), to_sparse(mg));
  }
}

}  // namespace

VerificationReport check_nabla_aw_homotopy(ChainWorkspace& ws, const ModulePtr& a, const ModulePtr& b, int max_level) {
  auto report = make_report("nabla-aw", {a->name, b->name}, max_level);
  const int range = std::min(a->max_degree, max_level + 1);
  auto f = limited(compose(ws.nabla(a, b, false), ws.aw(a, b, false)), range);
  auto g = limited(identity_chain_map(ws.chains(ws.tensor(a, b))), range);
  homotopy_report(report, f, g, "nabla o aw - id");
  return report;
}

VerificationReport check_aw_symmetry_homotopy(ChainWorkspace& ws, const ModulePtr& a, const ModulePtr& b,
                                              int max_level) {
  auto report = make_report("aw-symmetry", {a->name, b->name}, max_level);
  const int range = std::min(a->max_degree, max_level + 1);
  auto f = limited(compose(ws.aw(b, a, false), ws.apply(ws.swap(a, b), false)), range);
  auto g = limited(compose(koszul_swap(ws.chains(a), ws.chains(b), ws.conventions()), ws.aw(a, b, false)), range);
  bool differs = false;
  for (int n = 0; n <= range && !differs; ++n) differs = !equal(f.at(n), g.at(n));
  report.notes.push_back(differs ? "strict symmetry defect is nonzero" : "strict symmetry defect is zero");
  homotopy_report(report, f, g, "aw o swap - swap o aw");
  return report;
}

}  // namespace dk
