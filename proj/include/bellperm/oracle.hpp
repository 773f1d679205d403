#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bellperm/codes.hpp"
#include "bellperm/partitions.hpp"
#include "bellperm/permutation.hpp"

// Brute-force baselines and exhaustive equivalence checks. Nothing in here
// reaches a result through the code path it is checking: permutations come
// from std::next_permutation, subexceedant words from an odometer, and
// partitions from recursive block insertion (no RGFs).
namespace bellperm::oracle {

/// Largest n for scans of S_n or F_n without `allow_large`.
inline constexpr int kMaxScanN = 8;
/// Largest n for partition scans without `allow_large`.
inline constexpr int kMaxPartitionN = 10;

void for_each_permutation(int n, std::function<void(Permutation const&)> const& visit,
                          bool allow_large = false);
void for_each_subexceedant(int n,
                           std::function<void(SubexceedantFunction const&)> const& visit,
                           bool allow_large = false);
void for_each_partition(int n, std::function<void(SetPartition const&)> const& visit,
                        bool allow_large = false);

std::vector<Permutation> all_permutations(int n, bool allow_large = false);
std::vector<SubexceedantFunction> all_subexceedant(int n, bool allow_large = false);
std::vector<SetPartition> all_partitions(int n, bool allow_large = false);

struct Counterexample {
  std::string input;
  std::string expected;
  std::string actual;
};

struct DiscrepancyReport {
  std::string check;
  int n = 0;
  std::optional<int> k;
  std::size_t tested = 0;
  std::size_t discrepancies = 0;  // total, including those beyond the cap
  std::vector<Counterexample> counterexamples;

  bool passed() const { return discrepancies == 0; }
};

/// Replacement points for mutation testing of the checks themselves.
struct Hooks {
  std::function<bool(Permutation const&)> bp2_recognizer;
};

struct CheckOptions {
  std::size_t cap = 10;
  bool allow_large = false;
  Hooks hooks;
};

std::vector<std::string> const& check_names();

/// Throws InvalidArgument for an unknown name or out-of-guard n.
DiscrepancyReport run_check(std::string_view name, int n,
                            std::optional<int> k = {},
                            CheckOptions const& options = {});

/// Every named check (all when `names` is empty) for n = 1..n_max.
std::vector<DiscrepancyReport> run_suite(int n_max,
                                         std::vector<std::string> const& names = {},
                                         CheckOptions const& options = {});

std::string format_text(DiscrepancyReport const& report);
/// One JSON object, no trailing newline.
std::string format_json(DiscrepancyReport const& report);

}  // namespace bellperm::oracle
