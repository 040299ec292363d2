#include "dk/dold_kan.hpp"
#include "dk/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace dk;

namespace {

ComplexPtr literal(std::vector<Index> ranks, std::vector<std::vector<long long>> entries, int top,
                   const std::string& name) {
  std::vector<SparseMatrix> d;
  for (std::size_t n = 1; n < ranks.size(); ++n) d.push_back(sparse_from_rows(ranks[n - 1], ranks[n], entries[n - 1]));
  while (static_cast<int>(ranks.size()) <= top) {
    d.push_back(SparseMatrix(ranks.back(), 0));
    ranks.push_back(0);
  }
  return make_complex(ranks, d, name);
}

ComplexPtr z0(int top) { return literal({1}, {}, top, "Z[0]"); }
ComplexPtr z1(int top) { return literal({0, 1}, {{}}, top, "Z[1]"); }
ComplexPtr two(int top) { return literal({1, 1}, {{2}}, top, "Z-2->Z"); }

}  // namespace

TEST_CASE("Gamma ranks are sums of binomials") {
  oracle::Gen g(3);
  for (int t = 0; t < 10; ++t) {
    auto c = oracle::random_complex(g, 4, g.uniform(1, 5)).complex;
    auto gc = gamma(c, 4);
    for (int n = 0; n <= 4; ++n) {
      long long expected = 0;
      for (int k = 0; k <= n; ++k) expected += oracle::binomial(n, k) * c->rank(k);
      CHECK(gc->rank(n) == expected);
    }
  }
  auto g1 = gamma(z1(4), 4);
  for (int n = 0; n <= 4; ++n) CHECK(g1->rank(n) == n);
  CHECK_THROWS_AS(gamma(z1(2), 3), RangeError);
}

TEST_CASE("Gamma labels name the surjection and the basis element") {
  auto g1 = gamma(z1(3), 3);
  CHECK(g1->basis_labels(1) == std::vector<std::string>{"<01>:e0"});
  CHECK(g1->basis_labels(2) == std::vector<std::string>{"<001>:e0", "<011>:e0"});
}

TEST_CASE("property: Gamma of a complex is a simplicial module") {
  oracle::Gen g(7);
  for (int t = 0; t < 10; ++t) {
    auto c = oracle::random_complex(g, 4, g.uniform(1, 5)).complex;
    CHECK(check_gamma_valid(c, 4).passed());
    CHECK(check_gamma_valid(c, 3).passed());
  }
}

TEST_CASE("property: counit isomorphism and triangle identities") {
  oracle::Gen g(13);
  for (int t = 0; t < 10; ++t) {
    auto c = oracle::random_complex(g, 3, g.uniform(1, 4)).complex;
    CHECK(check_counit_iso(c, 3).passed());
    CHECK(check_triangle_gamma(c, 3).passed());
    // N Gamma C has the ranks of C.
    auto adj = build_adjunction(c, 3);
    for (int n = 0; n <= 3; ++n) CHECK(adj.normalized.complex->rank(n) == c->rank(n));
  }
  for (auto c : {z0(3), z1(3), two(3)}) {
    CHECK(check_counit_iso(c, 3).passed());
    CHECK(check_triangle_gamma(c, 3).passed());
  }
}

TEST_CASE("unit and counit are unimodular") {
  for (auto c : {z0(3), z1(3), two(3)}) {
    auto adj = build_adjunction(c, 3);
    for (int n = 0; n <= 3; ++n) {
      auto det = oracle::determinant(to_dense(adj.counit.at(n)));
      CHECK((det == 1 || det == -1));
    }
  }
  for (auto a : {free_on_standard_simplex(1, 3), free_on_standard_simplex(2, 3), free_on_nerve(cyclic_group(2), 3)}) {
    auto adj = build_adjunction(a);
    CHECK(check_simplicial_map(adj.unit).passed());
    CHECK(check_simplicial_map(adj.psi).passed());
    for (int n = 0; n <= 3; ++n) {
      auto det = oracle::determinant(to_dense(adj.unit.at(n)));
      CHECK((det == 1 || det == -1));
    }
    CHECK(check_triangle_n(a).passed());
  }
}

TEST_CASE("Gamma is functorial on chain maps") {
  auto c = two(3);
  auto gc = gamma(c, 3);
  auto id = identity_chain_map(c);
  auto gid = gamma(id, gc, gc);
  for (int n = 0; n <= 3; ++n) CHECK(equal(gid.at(n), sparse_identity(gc->rank(n))));
  auto twice = id + id;
  auto g4 = gamma(compose(twice, twice), gc, gc);
  auto gg = compose(gamma(twice, gc, gc), gamma(twice, gc, gc));
  for (int n = 0; n <= 3; ++n) CHECK(equal(g4.at(n), gg.at(n)));
  CHECK(check_simplicial_map(gamma(twice, gc, gc)).passed());
}

TEST_CASE("transferred structures") {
  GammaWorkspace ws(3);
  const auto a = z0(3), b = z1(3), c = two(3);
  for (auto x : {a, b, c})
    for (auto y : {a, b, c}) {
      CHECK(check_transfer_inverse(ws, x, y).passed());
      auto pair = pair_transfer(ws, x, y);
      CHECK(check_simplicial_map(pair.lax).passed());
      CHECK(check_simplicial_map(pair.colax).passed());
    }
  CHECK(check_transfer_lax_associative(ws, b, c, b).passed());
  CHECK(check_transfer_lax_associative(ws, c, c, a).passed());
  CHECK(check_transfer_lax_associative(ws, b, b, b).passed());
  CHECK(check_transfer_lax_associative(ws, a, b, a).passed());
  auto l = ws.lax(a, a), co = ws.colax(a, a);
  for (int n = 0; n <= 3; ++n) {
    CHECK(equal(l.at(n), sparse_identity(1)));
    CHECK(equal(co.at(n), sparse_identity(1)));
  }
}

TEST_CASE("colax to lax and back recovers Alexander-Whitney") {
  GammaWorkspace ws(3);
  auto d1 = free_on_standard_simplex(1, 3), d2 = free_on_standard_simplex(2, 3);
  CHECK(check_colax_lax_roundtrip(ws, d1, d1).passed());
  CHECK(check_colax_lax_roundtrip(ws, d2, d1).passed());
  auto r = make_report("aw");
  compare_maps(r, ws.colax_from_lax(d1, d1), ws.chains().aw(d1, d1, true), 3);
  CHECK(r.passed());
}

TEST_CASE("colax after lax is not the identity on Gamma Z[1] (x) Gamma Z[1]") {
  GammaWorkspace ws(3);
  auto b = z1(3);
  auto cl = compose(ws.colax(b, b), ws.lax(b, b));
  // Gamma(Z[1] (x) Z[1]) vanishes at level 1 while Gamma Z[1] (x) Gamma Z[1] does not.
  CHECK(cl.source->rank(1) == 1);
  CHECK(is_zero(cl.at(1)));
  auto r = check_transfer_bialgebra(ws, z0(3), b, b, z0(3));
  CHECK(r.failed());
  CHECK_FALSE(r.witnesses.empty());
  CHECK(check_transfer_bialgebra(ws, z0(3), z0(3), z0(3), z0(3)).passed());
}

TEST_CASE("the counit is natural") {
  const int top = 3;
  auto one = literal({1, 1}, {{1}}, top, "Z-1->Z");
  auto tw = two(top);
  // (1, 2) : (Z -1-> Z) -> (Z -2-> Z) is a chain map, as is any multiple of it.
  oracle::Gen g(9);
  for (int t = 0; t < 5; ++t) {
    const long long k = g.uniform(-3, 3);
    ChainMap f{one, tw, {}, top + 1};
    f.components = {sparse_from_rows(1, 1, {2 * k}), sparse_from_rows(1, 1, {k}), SparseMatrix(0, 0),
                    SparseMatrix(0, 0)};
    REQUIRE(check_chain_map(f).passed());
    auto src = build_adjunction(one, top), tgt = build_adjunction(tw, top);
    auto ngf = normalized_map(gamma(f, src.gamma, tgt.gamma), src.normalized, tgt.normalized);
    auto r = make_report("counit-natural");
    compare_maps(r, compose(tgt.counit, ngf), compose(f, src.counit), top);
    CHECK(r.passed());
  }
}

TEST_CASE("the unit is natural") {
  for (auto a : {free_on_standard_simplex(1, 3), free_on_nerve(cyclic_group(2), 3)}) {
    auto aa = tensor(a, a);
    auto f = dk::swap(a, a);
    auto adj = build_adjunction(aa);
    auto nf = normalized_map(f, adj.normalized, adj.normalized);
    auto gnf = gamma(nf, adj.gamma_of_normalized, adj.gamma_of_normalized);
    auto left = compose(adj.unit, f), right = compose(gnf, adj.unit);
    for (int n = 0; n <= 3; ++n) CHECK(equal(left.at(n), right.at(n)));
  }
}
