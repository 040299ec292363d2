#include "dk/errors.hpp"
#include "dk/monoid.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace dk;

TEST_CASE("nerve rings") {
  for (int m = 1; m <= 3; ++m) {
    auto r = nerve_ring(cyclic_group(m), 3);
    for (int n = 0; n <= 3; ++n) {
      long long expected = 1;
      for (int k = 0; k < n; ++k) expected *= m;
      CHECK(r.module->rank(n) == expected);
    }
    ChainWorkspace ws;
    CHECK(check_ring(ws, r).passed());
  }
  auto trivial = nerve_ring(trivial_monoid(), 3);
  CHECK(trivial.module->ranks == std::vector<Index>{1, 1, 1, 1});
}

TEST_CASE("non-commutative monoids are refused") {
  MonoidTable right_zero{{{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}, {"e", "a", "b"}};
  CHECK_THROWS_AS(nerve_ring(right_zero, 2), ConstructionError);
}

TEST_CASE("tensor products of rings are rings") {
  ChainWorkspace ws;
  auto a = nerve_ring(cyclic_group(2), 2), b = nerve_ring(cyclic_group(3), 2);
  CHECK(check_ring(ws, tensor(ws, a, b)).passed());
}

TEST_CASE("chains on a nerve ring form a DGA") {
  ChainWorkspace ws;
  auto r = nerve_ring(cyclic_group(2), 3);
  for (bool normalized : {true, false}) {
    auto alg = to_dga(ws, r, normalized);
    CHECK(check_chain_map(alg.product).passed());
    CHECK(check_dga_associative(alg, 2).passed());
    CHECK(check_dga_unital(alg, 2).passed());
  }
}

TEST_CASE("AW is multiplicative and the positive-sign fault is caught") {
  auto a = nerve_ring(cyclic_group(2), 3);
  ChainWorkspace ws;
  for (bool normalized : {true, false}) CHECK(check_aw_multiplicative(ws, a, a, 2, normalized).passed());
  MonoidalConventions conv;
  conv.shuffle_sign = MonoidalConventions::ShuffleSign::AlwaysPositive;
  ChainWorkspace bad(conv);
  auto r = check_aw_multiplicative(bad, a, a, 2, true);
  CHECK(r.failed());
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses.front().level == 2);
}
