#include "dk/delta.hpp"
#include "dk/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace dk;

namespace {

OperatorWord random_word(oracle::Gen& g, int max_rank, int max_length) {
  const int source = g.uniform(0, max_rank);
  int rank = source;
  std::vector<Generator> reversed;
  const int length = g.uniform(0, max_length);
  for (int k = 0; k < length; ++k) {
    if (rank == 0 || (rank < max_rank && g.uniform(0, 1) == 0)) {
      reversed.push_back(Generator::face(g.uniform(0, rank + 1)));
      ++rank;
    } else {
      reversed.push_back(Generator::degeneracy(g.uniform(0, rank - 1)));
      --rank;
    }
  }
  return OperatorWord(source, std::vector<Generator>(reversed.rbegin(), reversed.rend()));
}

DeltaMorphism random_map(oracle::Gen& g, int q, int p) {
  auto all = monotone_maps(q, p);
  return all[static_cast<std::size_t>(g.uniform(0, static_cast<int>(all.size()) - 1))];
}

}  // namespace

TEST_CASE("coface then codegeneracy is the identity of [0]") {
  auto f = compose(DeltaMorphism::codegeneracy(0, 0), DeltaMorphism::coface(1, 0));
  CHECK(f == DeltaMorphism::identity(0));
}

TEST_CASE("codegeneracy then coface is the constant map") {
  auto f = compose(DeltaMorphism::coface(1, 1), DeltaMorphism::codegeneracy(0, 0));
  CHECK(f == DeltaMorphism(1, {0, 0}));
}

TEST_CASE("invalid maps and compositions are rejected") {
  CHECK_THROWS_AS(compose(DeltaMorphism::identity(1), DeltaMorphism::identity(2)), CompositionError);
  CHECK_THROWS_AS(DeltaMorphism(1, {1, 0}), ConstructionError);
  CHECK_THROWS_AS(DeltaMorphism(1, {0, 2}), ConstructionError);
}

TEST_CASE("canonical factorization of small maps") {
  CHECK(canonical_factorization(DeltaMorphism::identity(2)).empty());

  auto w = canonical_factorization(DeltaMorphism(1, {0, 0}));
  REQUIRE(w.generators().size() == 2);
  CHECK(w.generators()[0] == Generator::face(1));
  CHECK(w.generators()[1] == Generator::degeneracy(0));

  auto inclusion = canonical_factorization(DeltaMorphism(2, {0, 2}));
  REQUIRE(inclusion.generators().size() == 1);
  CHECK(inclusion.generators()[0] == Generator::face(1));
}

TEST_CASE("monotone map and surjection counts") {
  for (int q = 0; q <= 5; ++q)
    for (int p = 0; p <= 5; ++p) {
      CHECK(static_cast<long long>(monotone_maps(q, p).size()) == oracle::binomial(p + q + 1, q + 1));
      CHECK(static_cast<long long>(surjections(q, p).size()) == oracle::binomial(q, p));
    }
}

TEST_CASE("canonical factorization round-trips and is injective") {
  for (int q = 0; q <= 4; ++q)
    for (int p = 0; p <= 4; ++p) {
      std::set<std::string> words;
      for (const auto& f : monotone_maps(q, p)) {
        auto w = canonical_factorization(f);
        CHECK(w.canonical());
        CHECK(evaluate(w) == f);
        int s = 0, t = 0;
        for (const auto& g : w.generators()) (g.kind == GeneratorKind::Face ? s : t)++;
        CHECK(q - t + s == p);
        words.insert(to_action_text(w) + "@" + std::to_string(p));
      }
      CHECK(words.size() == monotone_maps(q, p).size());
    }
}

TEST_CASE("simplicial identities as word rewrites") {
  // d_0 s_0 = 1
  CHECK(normalize(parse_action_word("d0 s0", 1)).empty());
  // d_2 s_0 = s_0 d_1 on 1-simplices
  CHECK(normalize(parse_action_word("d2 s0", 1)) == normalize(parse_action_word("s0 d1", 1)));
  CHECK(normalize(parse_action_word("d2 s0", 1)) == parse_action_word("s0 d1", 1));
  // the last face after the last degeneracy
  CHECK(normalize(parse_action_word("d2 s1", 1)).empty());
  CHECK(normalize(parse_action_word("d3 s2", 2)).empty());
}

TEST_CASE("action text round trip") {
  oracle::Gen g(7);
  for (int i = 0; i < 300; ++i) {
    auto w = random_word(g, 5, 7);
    CHECK(parse_action_word(to_action_text(w), w.target_rank()) == w);
  }
  CHECK_THROWS_AS(parse_action_word("d3", 1), CompositionError);
  CHECK_THROWS(parse_action_word("x0", 1));
}

TEST_CASE("property: normalization agrees with evaluation") {
  oracle::Gen g(11);
  for (int i = 0; i < 500; ++i) {
    auto w = random_word(g, 5, 9);
    auto n = normalize(w);
    CHECK(n.canonical());
    CHECK(evaluate(n) == evaluate(w));
    CHECK(n == canonical_factorization(evaluate(w)));
    CHECK(normalize(n) == n);
  }
}

TEST_CASE("property: composition is associative and words concatenate") {
  oracle::Gen g(13);
  for (int i = 0; i < 300; ++i) {
    const int a = g.uniform(0, 4), b = g.uniform(0, 4), c = g.uniform(0, 4), d = g.uniform(0, 4);
    auto f = random_map(g, c, d), h = random_map(g, b, c), k = random_map(g, a, b);
    CHECK(compose(f, compose(h, k)) == compose(compose(f, h), k));
    CHECK(compose(f, DeltaMorphism::identity(c)) == f);
    auto joined = concatenate(canonical_factorization(f), canonical_factorization(h));
    CHECK(evaluate(joined) == compose(f, h));
  }
}

TEST_CASE("faces commute past degeneracies") {
  CHECK(commute_faces_past_degeneracies(FaceEnd::Front, 3, {}, 4) == CommutedFaces{{}, 3});
  CHECK(commute_faces_past_degeneracies(FaceEnd::Front, 1, {0}, 2) == CommutedFaces{{}, 0});
  CHECK(commute_faces_past_degeneracies(FaceEnd::Back, 1, {0}, 2) == CommutedFaces{{0}, 1});
}

TEST_CASE("property: commuted faces evaluate to the same map") {
  for (int level = 1; level <= 6; ++level)
    for (unsigned mask = 0; mask < (1u << level); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < level; ++i)
        if ((mask >> i) & 1u) s.push_back(i);
      const int base = level - static_cast<int>(s.size());
      for (auto kind : {FaceEnd::Front, FaceEnd::Back})
        for (int power = 0; power <= level; ++power) {
          auto lhs = faces_after_degeneracies(kind, power, s, level);
          auto r = commute_faces_past_degeneracies(kind, power, s, level);
          std::string text;
          for (auto it = r.degeneracies.rbegin(); it != r.degeneracies.rend(); ++it)
            text += "s" + std::to_string(*it) + " ";
          int dim = base;
          std::vector<std::string> faces;
          for (int k = 0; k < r.residual_power; ++k, --dim)
            faces.push_back("d" + std::to_string(kind == FaceEnd::Front ? 0 : dim));
          for (auto it = faces.rbegin(); it != faces.rend(); ++it) text += *it + " ";
          auto rhs = parse_action_word(text, base);
          CHECK(evaluate(lhs) == evaluate(rhs));
        }
    }
}
