#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cqexp/channel.hpp"
#include "cqexp/geomean.hpp"
#include "cqexp/majorization.hpp"

namespace cqexp {

struct SuiteConfig {
  int trials = 1000;
  int d_min = 2;
  int d_max = 6;
  std::uint64_t seed = 0xC0FFEEULL;
  double slack = 1e-9;  // relative; singular-input suites floor it at 1e-6
  int workers = 1;
};

/// Aggregate outcome of a randomized inequality suite. Margins are
/// normalized per trial by max(1, magnitude of the larger side); a trial
/// counts as a violation when its margin drops below -slack. worst_seed is
/// the stream seed of the worst trial and replays it bit-for-bit.
struct InequalityReport {
  std::string suite;
  int trials = 0;
  int violations = 0;
  double worst_margin = 0.0;
  std::uint64_t worst_seed = 0;
  double slack = 0.0;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> params;
};

// Lemma suites. Violations are data, never exceptions.
InequalityReport check_lemma_logmajor(const SuiteConfig& cfg);
InequalityReport check_lemma_logmajor_singular(const SuiteConfig& cfg);
InequalityReport check_lemma_norm_power(const SuiteConfig& cfg);
InequalityReport check_lemma_vector_power(const SuiteConfig& cfg);
InequalityReport check_lemma_trace_convex(const SuiteConfig& cfg);
InequalityReport check_lemma_holder(const SuiteConfig& cfg);
InequalityReport check_core_lemma(const SuiteConfig& cfg);
InequalityReport check_core_lemma_singular(const SuiteConfig& cfg);

/// One report per geometric-mean property (a)-(h), in order.
std::vector<InequalityReport> check_geomean_properties(const SuiteConfig& cfg);

/// Every inequality step of the concavity proof on random channels.
InequalityReport check_proof_chain(const SuiteConfig& cfg);

/// Midpoint concavity of E0 over s in [0, 8] on random channels (including
/// rank-deficient outputs), plus the s in [0, 1] subrange as its own suite.
InequalityReport check_concavity_theorem(const SuiteConfig& cfg);
InequalityReport check_concavity_subrange(const SuiteConfig& cfg);

/// All suites a selector can name, in canonical order.
const std::vector<std::string>& suite_selectors();

/// Run the suites named by `selector` ("all" or one selector).
/// Throws std::invalid_argument for an unknown selector.
std::vector<InequalityReport> run_suites(const std::string& selector,
                                         const SuiteConfig& cfg);

/// Re-run one trial of a suite on a given stream seed; returns the margin
/// bit-identical to the aggregated run's.
double replay_trial(const std::string& suite, std::uint64_t stream,
                    const SuiteConfig& cfg);

}  // namespace cqexp
