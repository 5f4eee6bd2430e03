#pragma once

// The identity corpus behind `dunkl verify`: every module property run as a
// named check over a fixed set of (group, kappa) entries.

#include "dunkl/reflection.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dunkl {

struct CorpusEntry {
  std::string label;  // e.g. "b2 kappa=(1/2,3/2)"
  DunklContext ctx;
};

/// z2^2 (1/2,1/2), z2^3 (1,1/2,0), a2 (1), b2 (1/2,3/2), each followed by its kappa = 0
/// twin. An empty filter keeps every family.
std::vector<CorpusEntry> default_corpus(const std::vector<GroupFamily>& families = {});

/// Comma list of z2, a, b, d. Throws std::invalid_argument on unknown names.
std::vector<GroupFamily> parse_families(std::string_view text);

std::string kappa_label(const DunklContext& ctx);

enum class FaultInjection {
  None,
  ProjSignFlip,  // negates every j >= 1 term of the projection formula
};

struct VerifyOptions {
  unsigned max_degree = 6;
  std::vector<GroupFamily> families;
  std::uint64_t seed = 20240615;
  std::uint64_t mc_samples = 200000;
  FaultInjection fault = FaultInjection::None;
};

struct CheckResult {
  std::string name;
  std::string group;
  std::string kappa;
  std::string degrees;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;  // inputs and both sides of the first failure
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  /// Distinct check names.
  std::vector<std::string> check_groups() const;
  bool all_passed() const { return failed() == 0; }
};

/// Runs every check on every selected corpus entry. Deterministic for fixed
/// options. Throws std::invalid_argument for max_degree < 2.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace dunkl
