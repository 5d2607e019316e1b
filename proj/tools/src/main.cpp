#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "intcomb_cli/experiments.hpp"

namespace {

using namespace intcomb::cli;

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open " + path + " for writing");
  out << text;
}

void add_flags(CLI::App* sub, Options& o) {
  sub->add_option("--g", o.g, "coupling g (rational)");
  sub->add_option("--a", o.a, "asymmetry a (rational)");
  sub->add_option("--a2", o.a2, "second asymmetry a' (rational)");
  sub->add_option("--size", o.size, "matrix / ASM size");
  sub->add_option("--window", o.window, "window or mode range");
  sub->add_option("--order", o.order, "series order");
  sub->add_option("--nmax", o.nmax, "largest index n");
  sub->add_option("--type", o.type, "Cartan type letter");
  sub->add_option("--rank", o.rank, "rank");
  sub->add_option("--depth", o.depth, "word depth");
  sub->add_option("--lambda", o.lambda, "highest weight, e.g. \"5/7,3/2\"");
  sub->add_option("--mu", o.mu, "Whittaker parameters, e.g. \"1,1\"");
  sub->add_option("--nvars", o.nvars, "number of variables N");
  sub->add_option("--degree-cap", o.degree_cap, "maximal test degree");
  sub->add_option("--spec", o.spec, "occupation spec as JSON");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for integrable-combinatorics identities"};
  app.require_subcommand(1);
  Options opt;
  std::string json_path, csv_path, suite = "quick";
  bool timing = false;
  app.add_option("--json", json_path, "write JSON report to path (- for stdout)");
  app.add_option("--csv", csv_path, "write CSV summary to path (- for stdout)");
  app.add_option("--seed", opt.seed, "random seed");
  app.add_flag("--timing", timing, "include wall time in reports");

  std::string chosen;
  for (const auto& e : registry()) {
    auto* sub = app.add_subcommand(e.name, e.description);
    add_flags(sub, opt);
    sub->callback([&chosen, name = e.name] { chosen = name; });
  }
  auto* all = app.add_subcommand("run-all", "run every experiment");
  all->add_option("--suite", suite, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  all->callback([&chosen] { chosen = "run-all"; });
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::vector<ExperimentReport> reports;
    if (chosen == "run-all") {
      reports = run_all(suite == "full" ? Suite::Full : Suite::Quick, opt.seed);
    } else {
      reports.push_back(run(chosen, opt));
    }
    bool ok = true;
    for (const auto& r : reports) {
      ok = ok && r.status == Status::Pass;
      std::cerr << (r.status == Status::Pass ? "PASS " : r.status == Status::Fail ? "FAIL " : "INCONCLUSIVE ")
                << r.experiment << ": " << r.summary;
      if (timing) std::cerr << " [" << r.wall_seconds << " s]";
      std::cerr << '\n';
    }
    if (!json_path.empty()) {
      Json j;
      if (chosen == "run-all") {
        j = {{"suite", suite}, {"seed", opt.seed}, {"status", ok ? "pass" : "fail"}, {"reports", Json::array()}};
        for (const auto& r : reports) j["reports"].push_back(r.to_json(timing));
      } else {
        j = reports.front().to_json(timing);
      }
      write_file(json_path, j.dump(2) + "\n");
    }
    if (!csv_path.empty()) write_file(csv_path, to_csv(reports));
    return ok ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
