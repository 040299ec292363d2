#include "dk/checks.hpp"

#include "dk/bialgebra.hpp"
#include "dk/delta.hpp"
#include "dk/dold_kan.hpp"
#include "dk/eilenberg_zilber.hpp"
#include "dk/errors.hpp"
#include "dk/monoid.hpp"
#include "dk/objects.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>

namespace dk {

namespace {

enum class Models { None, Both, NormalizedOnly };

class Context {
 public:
  Context(const CheckConfig& config, int truncation)
      : config(config), truncation(truncation), ws(config.conventions) {}

  const CheckConfig& config;
  int truncation;
  ChainWorkspace ws;

  GammaWorkspace& gamma() {
    if (!gamma_) gamma_ = std::make_unique<GammaWorkspace>(truncation, config.conventions);
    return *gamma_;
  }

  const TestObject& object(const std::string& descriptor) {
    auto it = objects_.find(descriptor);
    if (it == objects_.end()) it = objects_.emplace(descriptor, parse_object(descriptor, truncation)).first;
    return it->second;
  }

  ModulePtr module(const std::string& d) {
    const auto& o = object(d);
    if (o.module) return o.module;
    auto it = gammas_.find(d);
    if (it == gammas_.end()) it = gammas_.emplace(d, as_module(o, truncation)).first;
    return it->second;
  }
  ComplexPtr complex(const std::string& d) { return as_complex(object(d), ws); }
  const SimplicialRing& ring(const std::string& d) { return as_ring(object(d)); }

 private:
  std::unique_ptr<GammaWorkspace> gamma_;
  std::map<std::string, TestObject> objects_;
  std::map<std::string, ModulePtr> gammas_;
};

using Args = std::vector<std::string>;
// Runs one instance under one model (ignored when the check has none).
using Runner = std::function<VerificationReport(Context&, const Args&, bool normalized)>;

struct Entry {
  CheckInfo info;
  Models models = Models::None;
  int extra_levels = 0;  // objects are truncated at max_level + extra_levels
  Runner run;
};

const std::vector<std::vector<std::string>> kPairs = {
    {"delta:1", "delta:1"}, {"delta:2", "delta:1"}, {"nerve:z2", "delta:1"}};
const std::vector<std::vector<std::string>> kComplexes = {
    {"complex:[1]"}, {"complex:[0,1]"}, {"complex:[1,1;2]"}};

VerificationReport simplicial_identities(Context& cx, const Args& a, bool) {
  ClauseTally tally;
  auto report = validate(*cx.module(a[0]), &tally);
  for (int k = 0; k < 5; ++k) {
    std::ostringstream note;
    note << "clause " << kClauseNames[k] << ": " << tally.instances[k] << " instances, " << tally.nontrivial[k]
         << " nontrivial";
    report.notes.push_back(note.str());
  }
  return report;
}

VerificationReport canonical_factorization_check(Context& cx, const Args&, bool) {
  const int bound = cx.config.max_level + 1;
  auto report = make_report("canonical-factorization", {}, bound);
  std::size_t count = 0;
  for (int q = 0; q <= bound; ++q)
    for (int p = 0; p <= bound; ++p)
      for (const auto& f : monotone_maps(q, p)) {
        ++count;
        auto w = canonical_factorization(f);
        int faces = 0, degeneracies = 0;
        for (const auto& g : w.generators()) (g.kind == GeneratorKind::Face ? faces : degeneracies)++;
        const auto label = to_string(f);
        if (!w.canonical()) report.fail(q, label, "canonical word", to_action_text(w));
        if (!(evaluate(w) == f)) report.fail(q, label, label, to_string(evaluate(w)));
        if (q - degeneracies + faces != p)
          report.fail(q, label, std::to_string(p), std::to_string(q - degeneracies + faces));
        if (!(parse_action_word(to_action_text(w), p) == w)) report.fail(q, label, "round trip", to_action_text(w));
      }
  report.notes.push_back(std::to_string(count) + " monotone maps with source and target rank <= " +
                         std::to_string(bound));
  return report;
}

VerificationReport word_normalization(Context& cx, const Args&, bool) {
  const int bound = cx.config.max_level + 1;
  auto report = make_report("word-normalization", {}, bound);
  std::mt19937_64 rng(cx.config.seed);
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int trials = 400;
  for (int t = 0; t < trials; ++t) {
    const int source = uniform(0, bound);
    int rank = source;
    std::vector<Generator> reversed;
    const int length = uniform(0, 8);
    for (int k = 0; k < length; ++k) {
      const bool face = rank == 0 || (rank < bound + 2 && uniform(0, 1) == 0);
      if (face) {
        reversed.push_back(Generator::face(uniform(0, rank + 1)));
        ++rank;
      } else {
        reversed.push_back(Generator::degeneracy(uniform(0, rank - 1)));
        --rank;
      }
    }
    OperatorWord w(source, std::vector<Generator>(reversed.rbegin(), reversed.rend()));
    auto n = normalize(w);
    const auto text = to_action_text(w);
    if (!n.canonical()) report.fail(rank, text, "canonical word", to_action_text(n));
    if (!(evaluate(n) == evaluate(w))) report.fail(rank, text, to_string(evaluate(w)), to_string(evaluate(n)));
    if (!(n == canonical_factorization(evaluate(w))))
      report.fail(rank, text, to_action_text(canonical_factorization(evaluate(w))), to_action_text(n));
  }
  report.notes.push_back(std::to_string(trials) + " random words, seed " + std::to_string(cx.config.seed));
  return report;
}

template <class Fn>
Runner pair_check(Fn fn) {
  return [fn](Context& cx, const Args& a, bool normalized) {
    return fn(cx.ws, cx.module(a[0]), cx.module(a[1]), normalized, cx.config.max_level);
  };
}

template <class Fn>
Runner triple_check(Fn fn) {
  return [fn](Context& cx, const Args& a, bool normalized) {
    return fn(cx.ws, cx.module(a[0]), cx.module(a[1]), cx.module(a[2]), normalized, cx.config.max_level);
  };
}

std::vector<Entry> build_catalog() {
  std::vector<Entry> c;
  auto add = [&c](std::string suite, std::string name, int arity, std::string summary,
                  std::vector<std::vector<std::string>> defaults, Models models, Runner run, int extra = 0) {
    c.push_back({{std::move(suite), std::move(name), arity, std::move(summary), std::move(defaults)},
                 models,
                 extra,
                 std::move(run)});
  };

  add("axioms", "simplicial-identities", 1, "the five simplicial identity families, with per-clause counts",
      {{"delta:0"}, {"delta:1"}, {"delta:2"}, {"delta:3"}, {"nerve:z2"}, {"const:Z"}}, Models::None,
      simplicial_identities);
  add("axioms", "canonical-factorization", 0,
      "every monotone map up to rank max-level + 1 has a canonical word that evaluates back to it", {{}},
      Models::None, canonical_factorization_check);
  add("axioms", "word-normalization", 0, "random words (seeded) rewrite to the canonical factorization", {{}},
      Models::None, word_normalization);
  add("axioms", "aw-chain-map", 2, "Alexander-Whitney commutes with the differentials", kPairs, Models::Both,
      [](Context& cx, const Args& a, bool n) {
        return check_aw_chain_map(cx.ws, cx.module(a[0]), cx.module(a[1]), n, cx.config.max_level);
      });
  add("axioms", "nabla-chain-map", 2, "the shuffle map commutes with the differentials", kPairs, Models::Both,
      [](Context& cx, const Args& a, bool n) {
        return check_nabla_chain_map(cx.ws, cx.module(a[0]), cx.module(a[1]), n, cx.config.max_level);
      });
  add("axioms", "aw-nabla-identity", 2, "AW after the shuffle map is the identity (a normalized-chains statement)",
      kPairs, Models::NormalizedOnly, pair_check(check_aw_nabla_identity));
  add("axioms", "nabla-symmetric", 2, "the shuffle map intertwines the Koszul swap and the simplicial swap", kPairs,
      Models::Both, pair_check(check_nabla_symmetric));
  add("axioms", "aw-coassociative", 3, "colax associativity of Alexander-Whitney",
      {{"delta:1", "delta:1", "delta:1"}, {"delta:1", "delta:2", "nerve:z2"}}, Models::Both,
      triple_check(check_aw_coassociative));
  add("axioms", "nabla-associative", 3, "lax associativity of the shuffle map",
      {{"delta:1", "delta:1", "delta:1"}, {"delta:1", "delta:2", "nerve:z2"}}, Models::Both,
      triple_check(check_nabla_associative));
  add("axioms", "unit-coherence", 1, "unit diagrams for both structures against the constant group Z",
      {{"delta:1"}, {"delta:2"}, {"nerve:z2"}}, Models::Both, [](Context& cx, const Args& a, bool n) {
        return unit_coherence_check(cx.ws, cx.module(a[0]), cx.config.max_level, {1, n});
      });
  add("axioms", "descent", 2, "both structures preserve degenerate chains", kPairs, Models::None,
      [](Context& cx, const Args& a, bool) {
        return check_descent(cx.ws, cx.module(a[0]), cx.module(a[1]), cx.config.max_level);
      });

  add("bialgebra", "bialgebra", 4, "the bialgebra axiom for (AW, shuffle map) on chains",
      {{"delta:1", "delta:1", "delta:1", "delta:1"},
       {"delta:2", "delta:1", "delta:0", "delta:2"},
       {"nerve:z2", "delta:1", "nerve:z2", "delta:1"}},
      Models::Both, [](Context& cx, const Args& a, bool n) {
        BialgebraInstance inst{cx.module(a[0]), cx.module(a[1]), cx.module(a[2]), cx.module(a[3]), n,
                               cx.config.max_level};
        return check_bialgebra(cx.ws, inst);
      });
  add("bialgebra", "identity-functor", 4, "harness self-test: the identity functor with identity structures",
      {{"complex:[1]", "complex:[0,1]", "complex:[1,1;2]", "complex:[0,1]"}}, Models::None,
      [](Context& cx, const Args& a, bool) {
        IdentityChainFunctor f{cx.config.conventions};
        return check_bialgebra(f, cx.complex(a[0]), cx.complex(a[1]), cx.complex(a[2]), cx.complex(a[3]),
                               cx.config.max_level, "identity-functor");
      });

  add("dold-kan", "gamma-valid", 1, "Gamma of a complex satisfies the simplicial identities", kComplexes,
      Models::None, [](Context& cx, const Args& a, bool) { return check_gamma_valid(cx.complex(a[0]), cx.truncation); });
  add("dold-kan", "counit-iso", 1, "the counit N Gamma C -> C and the unit at Gamma C are unimodular", kComplexes,
      Models::None, [](Context& cx, const Args& a, bool) { return check_counit_iso(cx.complex(a[0]), cx.truncation); });
  add("dold-kan", "adjunction", 1, "triangle identities (at N A for modules, at Gamma C for complexes)",
      {{"delta:1"}, {"nerve:z2"}, {"complex:[0,1]"}, {"complex:[1,1;2]"}}, Models::None,
      [](Context& cx, const Args& a, bool) {
        const auto& o = cx.object(a[0]);
        auto r = o.module ? check_triangle_n(o.module) : check_triangle_gamma(o.complex, cx.truncation);
        r.check_name = "adjunction";
        return r;
      });
  add("dold-kan", "colax-lax-roundtrip", 2, "AW to a lax structure on Gamma and back recovers AW",
      {{"delta:1", "delta:1"}, {"delta:2", "delta:1"}, {"nerve:z2", "delta:0"}}, Models::None,
      [](Context& cx, const Args& a, bool) {
        return check_colax_lax_roundtrip(cx.gamma(), cx.module(a[0]), cx.module(a[1]));
      });
  add("dold-kan", "transfer-inverse", 2, "transferred lax after transferred colax is the identity",
      {{"complex:[0,1]", "complex:[1,1;2]"}, {"complex:[1]", "complex:[0,1]"}}, Models::None,
      [](Context& cx, const Args& a, bool) {
        return check_transfer_inverse(cx.gamma(), cx.complex(a[0]), cx.complex(a[1]));
      });
  add("dold-kan", "transfer-lax-associative", 3, "associativity of the transferred lax structure",
      {{"complex:[0,1]", "complex:[1,1;2]", "complex:[1]"}}, Models::None, [](Context& cx, const Args& a, bool) {
        return check_transfer_lax_associative(cx.gamma(), cx.complex(a[0]), cx.complex(a[1]), cx.complex(a[2]));
      });
  add("dold-kan", "transfer-bialgebra", 4, "the bialgebra axiom for the structures transferred to Gamma",
      {{"complex:[1]", "complex:[1]", "complex:[1]", "complex:[1]"},
       {"complex:[1]", "complex:[0,1]", "complex:[1]", "complex:[0,1]"},
       {"complex:[1]", "complex:[0,1]", "complex:[0,1]", "complex:[1]"}},
      Models::None, [](Context& cx, const Args& a, bool) {
        return check_transfer_bialgebra(cx.gamma(), cx.complex(a[0]), cx.complex(a[1]), cx.complex(a[2]),
                                        cx.complex(a[3]));
      });

  add("homotopy", "nabla-aw", 2, "a chain homotopy from the shuffle map after AW to the identity",
      {{"delta:1", "delta:1"}, {"delta:2", "delta:1"}}, Models::None,
      [](Context& cx, const Args& a, bool) {
        return check_nabla_aw_homotopy(cx.ws, cx.module(a[0]), cx.module(a[1]), cx.config.max_level);
      },
      1);
  add("homotopy", "aw-symmetry", 2, "a chain homotopy between AW and its conjugate by the swaps",
      {{"delta:1", "delta:1"}, {"delta:2", "delta:1"}}, Models::None,
      [](Context& cx, const Args& a, bool) {
        return check_aw_symmetry_homotopy(cx.ws, cx.module(a[0]), cx.module(a[1]), cx.config.max_level);
      },
      1);

  add("monoid", "ring", 1, "the simplicial ring laws of a nerve", {{"nerve:z2"}}, Models::None,
      [](Context& cx, const Args& a, bool) { return check_ring(cx.ws, cx.ring(a[0])); });
  add("monoid", "dga-associative", 1, "the induced chain product is associative", {{"nerve:z2"}}, Models::Both,
      [](Context& cx, const Args& a, bool n) {
        return check_dga_associative(to_dga(cx.ws, cx.ring(a[0]), n), cx.config.max_level);
      });
  add("monoid", "dga-unital", 1, "the induced chain product is unital", {{"nerve:z2"}}, Models::Both,
      [](Context& cx, const Args& a, bool n) {
        return check_dga_unital(to_dga(cx.ws, cx.ring(a[0]), n), cx.config.max_level);
      });
  add("monoid", "aw-multiplicative", 2, "Alexander-Whitney is a map of the induced algebras",
      {{"nerve:z2", "nerve:z2"}}, Models::Both, [](Context& cx, const Args& a, bool n) {
        return check_aw_multiplicative(cx.ws, cx.ring(a[0]), cx.ring(a[1]), cx.config.max_level, n);
      });
  return c;
}

const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = build_catalog();
  return entries;
}

std::vector<bool> models_for(const Entry& e, const CheckConfig& config) {
  if (e.models == Models::None) return {false};
  if (config.normalized) return {*config.normalized};
  if (e.models == Models::NormalizedOnly) return {true};
  return {false, true};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"axioms", "bialgebra", "dold-kan", "homotopy", "monoid"};
  return names;
}

std::vector<CheckInfo> check_catalog() {
  std::vector<CheckInfo> out;
  for (const auto& e : catalog()) out.push_back(e.info);
  return out;
}

std::vector<VerificationReport> run_checks(const std::string& suite, const std::optional<std::string>& check,
                                           const CheckConfig& config) {
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw ParseError("unknown suite '" + suite + "'");
  if (config.max_level < 0) throw ParseError("--max-level must be non-negative");
  std::vector<const Entry*> selected;
  for (const auto& e : catalog()) {
    if (suite != "all" && e.info.suite != suite) continue;
    if (check && e.info.name != *check) continue;
    if (config.objects && static_cast<int>(config.objects->size()) != e.info.arity) {
      if (check) {
        throw ParseError("check '" + *check + "' takes " + std::to_string(e.info.arity) + " objects, got " +
                         std::to_string(config.objects->size()));
      }
      continue;
    }
    selected.push_back(&e);
  }
  if (selected.empty()) {
    if (check) throw ParseError("no check named '" + *check + "' in suite '" + suite + "'");
    throw ParseError("no check in suite '" + suite + "' takes " + std::to_string(config.objects->size()) + " objects");
  }
  std::vector<VerificationReport> reports;
  for (const auto* e : selected) {
    Context cx(config, config.max_level + e->extra_levels);
    auto instances = config.objects ? std::vector<std::vector<std::string>>{*config.objects} : e->info.default_objects;
    for (const auto& args : instances) {
      for (bool normalized : models_for(*e, config)) {
        const auto start = std::chrono::steady_clock::now();
        auto r = e->run(cx, args, normalized);
        r.check_name = e->info.name;
        if (e->models != Models::None) {
          const std::string model = normalized ? "normalized" : "unnormalized";
          if (std::find(r.notes.begin(), r.notes.end(), model) == r.notes.end()) r.notes.insert(r.notes.begin(), model);
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        reports.push_back(std::move(r));
      }
    }
  }
  return reports;
}

}  // namespace dk
