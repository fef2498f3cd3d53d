#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cocenter {

struct Target {
  std::string group;
  std::string lattice = "sc";
  int length = 0;
};

struct CheckResult {
  std::string property;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string counterexample;  // first failing instance, element grammar
  bool observation = false;    // reported, never counted against the suite
};

struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct SuiteReport {
  std::string suite;
  Target target;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CheckResult> checks;
  std::vector<Table> tables;
  double wall_seconds = 0;  // kept out of the serialized report

  bool passed() const;
};

struct SuiteOptions {
  std::optional<std::string> group;
  std::string lattice = "sc";
  std::optional<int> length;
  std::uint64_t seed = 0;
  int jobs = 1;
  int random_strategies = 500;
  std::optional<int> cap;
  std::string cache_dir;  // per-class normal forms are loaded from and saved to here when set
};

// anchor, length, newton, reduction, alcove, levi, positivity, cocenter, rigid
const std::vector<std::string>& suite_names();
std::vector<Target> default_targets(const std::string& suite);

// One report per target: the default targets, or the single group named in the options.
std::vector<SuiteReport> run_suite(const std::string& name, const SuiteOptions& options);
std::vector<SuiteReport> run_all(const SuiteOptions& options);

std::string report_text(const SuiteReport& r);
std::string report_json(const SuiteReport& r);  // one line
std::string report_tsv(const SuiteReport& r);

}  // namespace cocenter
