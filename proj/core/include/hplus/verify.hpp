#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hplus {

/// Inputs shared by every suite. Empty N lists fall back to a per-suite default.
struct SuiteConfig {
  std::string group = "cyclic:2";
  std::vector<std::uint64_t> Ns;
  std::size_t max_len = 3;      ///< word / tuple length bound
  std::size_t max_points = 6;   ///< k + l bound for decorated-shape suites
  std::size_t max_partition = 12;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::size_t samples = 200;    ///< randomized cases where a suite samples
  std::size_t exhaustive_limit = 20000;  ///< above this many tuples, sample instead
  double x = 4.0;               ///< multiplier parameter for the decay suite
};

struct Failure {
  std::string input;
  std::string detail;
  std::string repro;  ///< command line reproducing the case
};

struct SuiteReport {
  using Fields = std::vector<std::pair<std::string, std::string>>;

  std::string suite;
  std::string group;
  Fields bounds;   ///< the finite truncation that was checked
  Fields results;  ///< measured quantities worth reporting
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;  ///< the first kMaxStoredFailures of them
  bool applicable = true;
  std::string note;
  double wall_seconds = 0.0;  ///< not serialized, so reports stay byte-identical

  bool ok() const { return failure_count == 0; }
};

inline constexpr std::size_t kMaxStoredFailures = 50;

/// Suite names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();
std::string suite_description(const std::string& name);

/// Throws InvalidArgument for unknown names or malformed configs.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

// Individual suites.
SuiteReport suite_one_point_counts(const SuiteConfig& cfg);
SuiteReport suite_coefficient_law(const SuiteConfig& cfg);
SuiteReport suite_trivial_multiplicity(const SuiteConfig& cfg);
SuiteReport suite_ring(const SuiteConfig& cfg);
SuiteReport suite_mprime(const SuiteConfig& cfg);
SuiteReport suite_reductions(const SuiteConfig& cfg);
SuiteReport suite_dimension(const SuiteConfig& cfg);
SuiteReport suite_diagrams(const SuiteConfig& cfg);
SuiteReport suite_gram_rank(const SuiteConfig& cfg);
SuiteReport suite_gram_backends(const SuiteConfig& cfg);
SuiteReport suite_support_conjugation(const SuiteConfig& cfg);
SuiteReport suite_support_separation(const SuiteConfig& cfg);
SuiteReport suite_decay(const SuiteConfig& cfg);
SuiteReport suite_rotation(const SuiteConfig& cfg);

}  // namespace hplus
