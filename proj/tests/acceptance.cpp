// Acceptance run: one PASS/FAIL line per criterion, each with its time bound.
// Exit status 0 only if every criterion passes.

#include "dk/bialgebra.hpp"
#include "dk/delta.hpp"
#include "dk/dold_kan.hpp"
#include "dk/monoid.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace dk;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Tally {
  int passed = 0;
  int total = 0;
  std::string first_failure;

  void add(const VerificationReport& r) {
    ++total;
    if (r.passed()) {
      ++passed;
      return;
    }
    if (first_failure.empty()) {
      std::ostringstream os;
      os << r.check_name << " (";
      for (std::size_t k = 0; k < r.objects.size(); ++k) os << (k ? ", " : "") << r.objects[k];
      os << ")";
      for (const auto& n : r.notes) os << " [" << n << "]";
      if (!r.witnesses.empty()) {
        const auto& w = r.witnesses.front();
        os << " witness level " << w.level << " at " << w.label << ": " << w.left << " vs " << w.right;
      }
      first_failure = os.str();
    }
  }
  bool ok() const { return passed == total; }
  std::string summary(const std::string& what) const {
    std::string s = what + " " + std::to_string(passed) + "/" + std::to_string(total);
    if (!first_failure.empty()) s += "; first failure: " + first_failure;
    return s;
  }
};

std::vector<ModulePtr> simplices(int top) {
  return {free_on_standard_simplex(0, top), free_on_standard_simplex(1, top), free_on_standard_simplex(2, top)};
}

ComplexPtr small_complex(std::vector<Index> ranks, std::vector<std::vector<long long>> entries, int top,
                         const std::string& name) {
  std::vector<SparseMatrix> d;
  for (std::size_t n = 1; n < ranks.size(); ++n) d.push_back(sparse_from_rows(ranks[n - 1], ranks[n], entries[n - 1]));
  while (static_cast<int>(ranks.size()) <= top) {
    d.push_back(SparseMatrix(ranks.back(), 0));
    ranks.push_back(0);
  }
  return make_complex(ranks, d, name);
}

std::vector<ComplexPtr> test_complexes(int top) {
  return {small_complex({1}, {}, top, "Z[0]"), small_complex({0, 1}, {{}}, top, "Z[1]"),
          small_complex({1, 1}, {{2}}, top, "Z-2->Z")};
}

Outcome criterion1() {
  Outcome o;
  ClauseTally total;
  Tally t;
  auto run = [&](const ModulePtr& a) {
    ClauseTally tally;
    auto r = validate(*a, &tally);
    r.check_name = "validate";
    r.objects = {a->name};
    t.add(r);
    for (int k = 0; k < 5; ++k) {
      total.instances[k] += tally.instances[k];
      total.nontrivial[k] += tally.nontrivial[k];
    }
  };
  for (int p = 0; p <= 3; ++p) run(free_on_standard_simplex(p, 4));
  run(free_on_nerve(cyclic_group(2), 3));
  o.ok = t.ok();
  std::ostringstream os;
  os << t.summary("objects valid") << "; nontrivial instances per clause:";
  for (int k = 0; k < 5; ++k) {
    os << " " << total.nontrivial[k];
    if (total.nontrivial[k] == 0) o.ok = false;
  }
  o.detail = os.str();
  return o;
}

Outcome criterion2() {
  Outcome o;
  int maps = 0, bad = 0;
  for (int q = 0; q <= 4; ++q)
    for (int p = 0; p <= 4; ++p)
      for (const auto& f : monotone_maps(q, p)) {
        ++maps;
        auto w = canonical_factorization(f);
        int faces = 0, degeneracies = 0;
        for (const auto& g : w.generators()) (g.kind == GeneratorKind::Face ? faces : degeneracies)++;
        if (!(evaluate(w) == f) || !w.canonical() || q - degeneracies + faces != p) ++bad;
      }
  o.ok = bad == 0;
  o.detail = std::to_string(maps) + " monotone maps, " + std::to_string(bad) + " bad factorizations";
  return o;
}

Outcome criterion3() {
  ChainWorkspace ws;
  Tally normalized, unnormalized;
  for (const auto& a : simplices(4))
    for (const auto& b : simplices(4)) {
      normalized.add(check_aw_nabla_identity(ws, a, b, true, 4));
      unnormalized.add(check_aw_nabla_identity(ws, a, b, false, 4));
    }
  return {normalized.ok() && unnormalized.ok(),
          normalized.summary("N(A)(x)N(B)") + " | " + unnormalized.summary("C(A)(x)C(B)")};
}

Outcome criterion4() {
  ChainWorkspace ws;
  Tally t;
  auto objs = simplices(3);
  for (bool normalized : {false, true})
    for (const auto& x : objs)
      for (const auto& y : objs)
        for (const auto& z : objs)
          for (const auto& w : objs) t.add(check_bialgebra(ws, BialgebraInstance{x, y, z, w, normalized, 3}));
  return {t.ok(), t.summary("instances")};
}

Outcome criterion5() {
  ChainWorkspace ws;
  Tally t;
  for (bool normalized : {false, true})
    for (const auto& a : simplices(4))
      for (const auto& b : simplices(4)) t.add(check_nabla_symmetric(ws, a, b, normalized, 4));
  return {t.ok(), t.summary("pairs")};
}

Outcome criterion6() {
  ChainWorkspace ws;
  Tally t;
  // One extra level so that h_3 has a target.
  auto d1 = free_on_standard_simplex(1, 4), d2 = free_on_standard_simplex(2, 4);
  for (auto [a, b] : {std::pair{d1, d1}, std::pair{d2, d1}}) {
    t.add(check_nabla_aw_homotopy(ws, a, b, 3));
    t.add(check_aw_symmetry_homotopy(ws, a, b, 3));
  }
  return {t.ok(), t.summary("homotopies found, verified and compared on homology")};
}

Outcome criterion7() {
  Tally t;
  for (const auto& c : test_complexes(3)) {
    t.add(check_counit_iso(c, 3));
    t.add(check_triangle_gamma(c, 3));
  }
  for (const auto& a : simplices(3)) t.add(check_triangle_n(a));
  t.add(check_triangle_n(free_on_nerve(cyclic_group(2), 3)));
  return {t.ok(), t.summary("checks")};
}

Outcome criterion8() {
  GammaWorkspace ws(3);
  Tally roundtrip, bialgebra;
  for (const auto& a : simplices(3))
    for (const auto& b : simplices(3)) roundtrip.add(check_colax_lax_roundtrip(ws, a, b));
  auto cs = test_complexes(3);
  for (const auto& x : cs)
    for (const auto& y : cs)
      for (const auto& z : cs)
        for (const auto& w : cs) bialgebra.add(check_transfer_bialgebra(ws, x, y, z, w));
  return {roundtrip.ok() && bialgebra.ok(),
          roundtrip.summary("round trips") + " | " + bialgebra.summary("transferred bialgebra")};
}

Outcome criterion9() {
  ChainWorkspace ws;
  Tally t;
  auto r = nerve_ring(cyclic_group(2), 3);
  for (bool normalized : {true, false}) {
    auto alg = to_dga(ws, r, normalized);
    t.add(check_dga_associative(alg, 2));
    t.add(check_dga_unital(alg, 2));
    t.add(check_aw_multiplicative(ws, r, r, 2, normalized));
  }
  return {t.ok(), t.summary("checks")};
}

Outcome criterion10() {
  std::vector<std::string> lines;
  bool ok = true;
  auto expect_failure = [&](const std::string& name, const VerificationReport& r) {
    const bool caught = r.failed() && !r.witnesses.empty();
    ok = ok && caught;
    std::string line = name + (caught ? " caught" : " NOT caught");
    if (caught) line += " at level " + std::to_string(r.witnesses.front().level);
    lines.push_back(line);
  };

  auto corrupted = std::make_shared<SimplicialModule>(*free_on_standard_simplex(2, 3));
  corrupted->faces[2][0].coeffRef(0, 0) += 1;
  expect_failure("corrupted face", validate(*corrupted));

  MonoidalConventions positive;
  positive.shuffle_sign = MonoidalConventions::ShuffleSign::AlwaysPositive;
  ChainWorkspace flipped(positive);
  auto ring = nerve_ring(cyclic_group(2), 3);
  expect_failure("positive shuffle signs", check_aw_multiplicative(flipped, ring, ring, 2, true));

  MonoidalConventions zero;
  zero.koszul = MonoidalConventions::Koszul::Zero;
  ChainWorkspace koszul(zero);
  auto d1 = free_on_standard_simplex(1, 3);
  expect_failure("zero Koszul exponent", check_bialgebra(koszul, BialgebraInstance{d1, d1, d1, d1, true, 3}));

  std::string detail;
  for (std::size_t k = 0; k < lines.size(); ++k) detail += (k ? "; " : "") + lines[k];
  return {ok, detail};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    double bound_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "simplicial identities", 1, criterion1},
      {2, "canonical factorization", 1, criterion2},
      {3, "AW after nabla is the identity", 5, criterion3},
      {4, "bialgebra axiom", 120, criterion4},
      {5, "nabla symmetric", 5, criterion5},
      {6, "homotopies", 10, criterion6},
      {7, "Dold-Kan equivalence", 5, criterion7},
      {8, "transfer to Gamma", 30, criterion8},
      {9, "monoid transfer", 10, criterion9},
      {10, "fault injection", 5, criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.bound_seconds;
    const bool pass = o.ok && in_time;
    failures += !pass;
    std::printf("criterion %2d %s: %s (%.3fs, bound %.0fs%s) %s\n", c.number, c.title.c_str(), pass ? "PASS" : "FAIL",
                seconds, c.bound_seconds, in_time ? "" : ", over time", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
