#include "dk/monoid.hpp"

#include "dk/errors.hpp"

#include <algorithm>

namespace dk {

namespace {

std::vector<int> decode(Index code, int n, int size) {
  std::vector<int> t(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    t[static_cast<std::size_t>(k)] = static_cast<int>(code % size);
    code /= size;
  }
  return t;
}

Index encode(const std::vector<int>& t, int size) {
  Index code = 0;
  for (int v : t) code = code * size + v;
  return code;
}

void compare_levels(VerificationReport& r, const SimplicialMap& f, const SimplicialMap& g, const ModulePtr& source,
                    const ModulePtr& target) {
  const int top = std::min(f.max_degree(), g.max_degree());
  for (int n = 0; n <= top; ++n)
    compare_matrices(r, n, f.at(n), g.at(n), &source->basis_labels(n), &target->basis_labels(n));
}

}  // namespace

SimplicialRing nerve_ring(const MonoidTable& m, int max_degree) {
  const int e = m.validated_unit();
  if (!m.commutative()) throw ConstructionError("nerve_ring: the levelwise product needs a commutative monoid");
  const int size = m.size();
  SimplicialRing r;
  r.module = free_on_nerve(m, max_degree);
  const auto& a = *r.module;
  r.multiplication = SimplicialMap{tensor(r.module, r.module), r.module, {}};
  r.unit = SimplicialMap{constant_z(max_degree), r.module, {}};
  for (int n = 0; n <= max_degree; ++n) {
    const Index rank = a.rank(n);
    std::vector<Triplet> trip;
    for (Index x = 0; x < rank; ++x) {
      auto tx = decode(x, n, size);
      for (Index y = 0; y < rank; ++y) {
        auto ty = decode(y, n, size);
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) p[static_cast<std::size_t>(k)] = m(tx[static_cast<std::size_t>(k)], ty[static_cast<std::size_t>(k)]);
        trip.emplace_back(encode(p, size), x * rank + y, Integer(1));
      }
    }
    SparseMatrix mult(rank, rank * rank);
    mult.setFromTriplets(trip.begin(), trip.end());
    r.multiplication.levels.push_back(std::move(mult));
    SparseMatrix u(rank, 1);
    u.insert(encode(std::vector<int>(static_cast<std::size_t>(n), e), size), 0) = 1;
    r.unit.levels.push_back(std::move(u));
  }
  return r;
}

SimplicialRing tensor(ChainWorkspace& ws, const SimplicialRing& a, const SimplicialRing& b) {
  SimplicialRing r;
  r.module = ws.tensor(a.module, b.module);
  auto aa = ws.tensor(a.module, a.module);
  auto bb = ws.tensor(b.module, b.module);
  auto mm = tensor(a.multiplication, b.multiplication, ws.tensor(aa, bb), r.module);
  r.multiplication = compose(mm, ws.middle_swap(a.module, b.module, a.module, b.module));
  r.unit = SimplicialMap{a.unit.source, r.module, {}};
  for (int n = 0; n <= r.module->max_degree; ++n) r.unit.levels.push_back(kron(a.unit.at(n), b.unit.at(n)));
  return r;
}

VerificationReport check_ring(ChainWorkspace& ws, const SimplicialRing& r) {
  const auto& a = r.module;
  auto report = make_report("ring", {a->name}, a->max_degree);
  report.absorb(check_simplicial_map(r.multiplication));
  report.absorb(check_simplicial_map(r.unit));
  auto id = identity_map(a);
  auto aa = ws.tensor(a, a);
  // The simplicial associator is the identity matrix on Kronecker products.
  auto left = compose(r.multiplication, tensor(r.multiplication, id, ws.tensor(aa, a), a));
  auto right = compose(r.multiplication, tensor(id, r.multiplication, ws.tensor(a, aa), a));
  compare_levels(report, left, right, ws.tensor(aa, a), a);
  auto z = r.unit.source;
  auto unit_left = compose(r.multiplication, tensor(r.unit, id, ws.tensor(z, a), aa));
  auto unit_right = compose(r.multiplication, tensor(id, r.unit, ws.tensor(a, z), aa));
  compare_levels(report, unit_left, id, a, a);
  compare_levels(report, unit_right, id, a, a);
  return report;
}

DGAlgebra to_dga(ChainWorkspace& ws, const SimplicialRing& r, bool normalized) {
  DGAlgebra alg;
  alg.complex = ws.chains(r.module, normalized);
  alg.product = compose(ws.apply(r.multiplication, normalized), ws.nabla(r.module, r.module, normalized));
  const int top = alg.complex->max_degree;
  auto fu = ws.apply(r.unit, normalized);
  auto z = unit_complex(top);
  alg.unit = ChainMap{z, alg.complex, {}, top};
  for (int n = 0; n <= top; ++n)
    alg.unit.components.push_back(n == 0 ? fu.at(0) : sparse_zero(alg.complex->rank(n), 0));
  return alg;
}

VerificationReport check_dga_associative(const DGAlgebra& a, int max_level) {
  auto report = make_report("dga-associative", {a.complex->name}, max_level);
  auto id = identity_chain_map(a.complex);
  auto left = compose(a.product, tensor_maps(a.product, id));
  auto right = compose(compose(a.product, tensor_maps(id, a.product)), associator(a.complex, a.complex, a.complex));
  compare_maps(report, left, right, max_level);
  return report;
}

VerificationReport check_dga_unital(const DGAlgebra& a, int max_level) {
  auto report = make_report("dga-unital", {a.complex->name}, max_level);
  auto id = identity_chain_map(a.complex);
  auto z = a.unit.source;
  compare_maps(report, compose(a.product, tensor_maps(a.unit, id)), left_unitor(a.complex, z), max_level);
  compare_maps(report, compose(a.product, tensor_maps(id, a.unit)), right_unitor(a.complex, z), max_level);
  return report;
}

VerificationReport check_aw_multiplicative(ChainWorkspace& ws, const SimplicialRing& a, const SimplicialRing& b,
                                           int max_level, bool normalized) {
  auto report = make_report("aw-multiplicative", {a.module->name, b.module->name}, max_level);
  report.notes.push_back(normalized ? "normalized" : "unnormalized");
  auto ab = tensor(ws, a, b);
  auto fa = to_dga(ws, a, normalized);
  auto fb = to_dga(ws, b, normalized);
  auto fab = to_dga(ws, ab, normalized);
  auto aw = ws.aw(a.module, b.module, normalized);
  auto left = compose(aw, fab.product);
  auto swap = middle_swap(fa.complex, fb.complex, fa.complex, fb.complex, ws.conventions());
  auto right = compose(compose(tensor_maps(fa.product, fb.product), swap), tensor_maps(aw, aw));
  compare_maps(report, left, right, max_level);
  return report;
}

}  // namespace dk
