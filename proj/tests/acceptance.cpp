// Acceptance run: one PASS/FAIL line per criterion.
//
// Every criterion is exact: the tolerance on mismatches, violations and
// disagreements is zero. Criterion 7 asks for fig5 numbers that the walk
// definition does not produce (see README); it is evaluated as written, prints
// FAIL, and is listed in kKnownUnattainable so that it alone does not make the
// run exit non-zero. Any other failure does.
//
// Usage: acceptance [--jobs N] [--report DIR]

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include "wtc/suites.hpp"

namespace {

using namespace wtc;

constexpr std::size_t kTolerance = 0;  // allowed failures per criterion
const std::set<int> kKnownUnattainable{7};

struct Criterion {
  int id;
  const char* title;
  SuiteReport (*run)(const SuiteOptions&);
};

const Criterion kCriteria[] = {
    {1, "oracle equivalence", suites::oracle_equivalence},
    {2, "containment chain", suites::chain},
    {3, "convex geometry dichotomy", suites::geometry_dichotomy},
    {4, "claw example", suites::claw_example},
    {5, "end-vertex walk certificates", suites::gimbel_walks},
    {6, "trees", suites::trees},
    {7, "fig5 graphs", suites::fig5_graphs},
    {8, "proper interval graphs", suites::prop7},
    {9, "twin-free interval graphs", suites::thm9},
    {10, "interval formula cross-validation", suites::corollary10},
    {11, "B_8 clique path", suites::b8_clique_path},
    {12, "extreme vertex lemmas", suites::lemmas},
};

}  // namespace

int main(int argc, char** argv) {
  SuiteOptions opts;
  std::filesystem::path report_dir = ".";
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc) opts.jobs = static_cast<unsigned>(std::atoi(argv[++i]));
    else if (!std::strcmp(argv[i], "--report") && i + 1 < argc) report_dir = argv[++i];
    else {
      std::cerr << "usage: acceptance [--jobs N] [--report DIR]\n";
      return 2;
    }
  }

  int unexpected = 0, known = 0;
  for (const auto& c : kCriteria) {
    SuiteReport r;
    try {
      r = c.run(opts);
    } catch (const std::exception& e) {
      r = SuiteReport(c.title);
      r.fail(std::string("exception: ") + e.what());
    }
    const bool pass = r.failed <= kTolerance;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << ": " << r.checked << " checked, "
              << r.failed << " failed (tolerance " << kTolerance << ")";
    if (!pass && kKnownUnattainable.count(c.id)) std::cout << " [known unattainable]";
    std::cout << '\n';
    for (const auto& i : r.info) std::cout << "        " << i << '\n';
    for (const auto& f : r.failures) std::cout << "        - " << f << '\n';

    if (c.id == 10) {
      // full per-graph report, discrepancies with their replay data
      const auto path = report_dir / "cross_validation_report.json";
      std::ofstream(path) << r.details.dump(1) << '\n';
      for (const auto& rec : r.details["records"])
        for (const auto& d : rec["discrepancies"])
          std::cout << "        " << rec["name"].get<std::string>() << ": " << d.get<std::string>() << '\n';
      std::cout << "        report: " << path.string() << '\n';
    }

    if (!pass) (kKnownUnattainable.count(c.id) ? known : unexpected)++;
  }
  std::cout << (unexpected ? "FAILED" : "OK") << ": " << unexpected << " unexpected failure(s), " << known
            << " known unattainable\n";
  return unexpected ? 1 : 0;
}
