#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace intcomb::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Raw flag values; each experiment fills in its own defaults.
struct Options {
  std::optional<std::string> g, a, a2, lambda, mu, spec, type;
  std::optional<int> size, window, order, nmax, rank, depth, nvars, degree_cap;
  std::uint64_t seed = kDefaultSeed;
};

enum class Status { Pass, Fail, Inconclusive };

std::string to_string(Status s);

struct ExperimentReport {
  std::string experiment;
  Json params = Json::object();
  Status status = Status::Fail;
  Json details = Json::object();
  double wall_seconds = 0;
  /// One-line human summary; also the CSV summary column.
  std::string summary;

  [[nodiscard]] Json to_json(bool with_timing) const;
};

/// Bad flags or parameters; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Suite { Quick, Full };

struct Experiment {
  std::string name;
  std::string description;
  std::function<ExperimentReport(const Options&)> run;
  Options quick;  // run-all --suite quick
  Options full;   // run-all --suite full; the acceptance-scale parameters
};

/// Registration order is the report order.
const std::vector<Experiment>& registry();

/// Throws UsageError for unknown names or invalid parameters. Verification
/// breakdowns (domain errors) become Status::Inconclusive.
ExperimentReport run(const std::string& name, const Options& opt);

/// Every registered experiment with suite-specific parameters.
std::vector<ExperimentReport> run_all(Suite suite, std::uint64_t seed);

/// Header row plus one row per report: experiment,status,params,summary.
std::string to_csv(const std::vector<ExperimentReport>& reports);

}  // namespace intcomb::cli
