#include "dk/bialgebra.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace dk;

TEST_CASE("the four-fold point is trivial") {
  ChainWorkspace ws;
  auto pt = free_on_standard_simplex(0, 3);
  for (bool normalized : {true, false}) {
    BialgebraInstance inst{pt, pt, pt, pt, normalized, 3};
    CHECK(check_bialgebra(ws, inst).passed());
  }
  BialgebraInstance inst{pt, pt, pt, pt, true, 3};
  auto lhs = bialgebra_lhs(ws, inst);
  for (int n = 0; n <= 3; ++n) CHECK(equal(lhs.at(n), sparse_identity(lhs.source->rank(n))));
}

TEST_CASE("property: the bialgebra identity holds on random quadruples") {
  std::vector<ModulePtr> objs = {free_on_standard_simplex(0, 2), free_on_standard_simplex(1, 2),
                                 free_on_nerve(cyclic_group(2), 2), constant_z(2)};
  oracle::Gen g(19);
  ChainWorkspace ws;
  for (int t = 0; t < 10; ++t) {
    auto pick = [&] { return objs[static_cast<std::size_t>(g.uniform(0, 3))]; };
    BialgebraInstance inst{pick(), pick(), pick(), pick(), t % 2 == 0, 2};
    auto lhs = bialgebra_lhs(ws, inst), rhs = bialgebra_rhs(ws, inst);
    auto r = make_report("bialgebra");
    compare_maps(r, lhs, rhs, 2);
    CHECK(r.passed());
    CHECK(check_bialgebra(ws, inst).passed());
  }
}

TEST_CASE("the identity functor passes the harness") {
  oracle::Gen g(4);
  IdentityChainFunctor f;
  for (int t = 0; t < 6; ++t) {
    auto x = oracle::random_complex(g, 2, 2).complex, y = oracle::random_complex(g, 2, 2).complex;
    CHECK(check_bialgebra(f, x, y, y, x, 2).passed());
  }
}

TEST_CASE("a zero Koszul sign breaks the identity") {
  MonoidalConventions conv;
  conv.koszul = MonoidalConventions::Koszul::Zero;
  ChainWorkspace ws(conv);
  auto d1 = free_on_standard_simplex(1, 3);
  BialgebraInstance inst{d1, d1, d1, d1, true, 3};
  auto r = check_bialgebra(ws, inst);
  CHECK(r.failed());
  CHECK_FALSE(r.witnesses.empty());
  CHECK(r.mismatch_count >= r.witnesses.size());
}
