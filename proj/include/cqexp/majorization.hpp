#pragma once

#include "cqexp/matops.hpp"

namespace cqexp {

/// Outcome of a (weak) majorization comparison x vs y. Margins are the
/// per-prefix differences RHS - LHS (positive = comfortable); the verdict
/// holds when the worst margin clears -slack, slack = rel_slack * max(1,
/// largest prefix magnitude). Margins may be +-inf in the log-domain checks.
struct MajorizationVerdict {
  bool holds = false;
  Vec prefix_margins;
  double worst_margin = 0.0;
  double scale = 1.0;  // max(1, largest finite prefix magnitude)
  double slack = 0.0;

  /// Worst margin divided by the prefix scale, for cross-trial reporting.
  double normalized_margin() const { return worst_margin / scale; }
};

/// Entries of x sorted descending.
Vec decreasing_rearrangement(const Vec& x);

/// Weak majorization x <_w y: every prefix sum of x-sorted-descending is at
/// most the matching prefix sum of y. Inputs must be finite and equal length.
MajorizationVerdict weak_majorizes(const Vec& x, const Vec& y,
                                   double rel_slack = kSlack);

/// Weak log-majorization: weak_majorizes(log x, log y). Entries must be
/// nonnegative; zeros enter as log 0 = -inf (harmless on the left, an
/// automatic failure on the right against a positive left prefix).
MajorizationVerdict log_majorizes(const Vec& x, const Vec& y,
                                  double rel_slack = kSlack);

/// Eigenvalues of a Hermitian matrix, sorted descending.
Vec eigenvalue_vector(const Mat& a);

}  // namespace cqexp
