#include "dk/checks.hpp"
#include "dk/errors.hpp"
#include "dk/objects.hpp"
#include "dk/report.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

void list_checks() {
  for (const auto& c : dk::check_catalog())
    std::cout << c.suite << "  " << c.name << "  (" << c.arity << " object" << (c.arity == 1 ? "" : "s") << ")  "
              << c.summary << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for simplicial modules, chain complexes and the Dold-Kan correspondence"};
  app.require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "run a verification suite");

  std::string suite = "all";
  std::optional<std::string> check;
  std::string objects;
  int max_level = 3;
  bool normalized = false, unnormalized = false, list = false, timing = false;
  std::string format = "text";
  std::uint64_t seed = 1;

  verify->add_option("suite", suite, "axioms, bialgebra, dold-kan, homotopy, monoid or all")->capture_default_str();
  verify->add_option("--check", check, "run a single check of the suite");
  verify->add_option("--objects", objects,
                     "comma-separated descriptors: delta:<p>, nerve:z2, const:Z, complex:[r0,r1,..;d1;d2..]");
  verify->add_option("--max-level", max_level, "highest simplicial level / chain degree checked")
      ->capture_default_str()
      ->check(CLI::Range(0, 6));
  auto* norm = verify->add_flag("--normalized", normalized, "use normalized chains only");
  verify->add_flag("--unnormalized", unnormalized, "use unnormalized chains only")->excludes(norm);
  verify->add_option("--format", format, "text or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--seed", seed, "seed for the randomized checks")->capture_default_str();
  verify->add_flag("--list-checks", list, "list the available checks and exit");
  verify->add_flag("--timing", timing, "include wall-clock timings in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (list) {
    list_checks();
    return kExitPass;
  }

  dk::CheckConfig config;
  config.max_level = max_level;
  config.seed = seed;
  if (normalized) config.normalized = true;
  if (unnormalized) config.normalized = false;

  std::vector<dk::VerificationReport> reports;
  try {
    if (!objects.empty()) config.objects = dk::split_objects(objects);
    reports = dk::run_checks(suite, check, config);
  } catch (const dk::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dk::RangeError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }

  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& r : reports) {
    if (r.status == dk::Status::Pass) ++passed;
    if (r.status == dk::Status::Fail) ++failed;
    if (r.status == dk::Status::Skipped) ++skipped;
  }
  if (format == "json") {
    std::cout << dk::to_json(reports, timing) << "\n";
  } else {
    for (const auto& r : reports) std::cout << dk::to_text(r, timing) << "\n";
    std::cout << reports.size() << " checks: " << passed << " passed, " << failed << " failed, " << skipped
              << " skipped\n";
  }
  return failed > 0 ? kExitFail : kExitPass;
}
