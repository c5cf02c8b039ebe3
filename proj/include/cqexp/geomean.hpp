#pragma once

#include <vector>

#include "cqexp/matops.hpp"

namespace cqexp {

/// Controls the epsilon-regularized evaluation of the geometric mean on
/// singular inputs: A and B are shifted by eps I along eps_schedule until the
/// iterates settle.
struct GeomeanConfig {
  // Geometric ladder ending well above sqrt(machine eps): below that the
  // shifted inverse inside the mean cancels catastrophically and iterates
  // turn into noise (the tail guard in weighted_geomean_limit also trips).
  std::vector<double> eps_schedule{1e-3, 1e-4, 1e-5, 1e-6, 1e-7};
  double convergence_tol = 1e-7;  // relative Frobenius between iterates

  void validate() const;
};

/// Thrown when the epsilon schedule is exhausted and the iterates neither
/// settled nor decayed geometrically. Carries the last two iterates for triage.
struct NonConvergenceError : std::runtime_error {
  Mat last;
  Mat previous;
  NonConvergenceError(std::string msg, Mat last_it, Mat prev_it)
      : std::runtime_error(std::move(msg)),
        last(std::move(last_it)),
        previous(std::move(prev_it)) {}
};

/// s-weighted geometric mean A^{1/2} (A^{-1/2} B A^{-1/2})^s A^{1/2}.
/// A must be positive definite; B must be PSD, and positive definite when
/// s lies outside [0,1]. Singular operands belong to weighted_geomean_limit.
Mat weighted_geomean(const Mat& a, const Mat& b, double s);

/// Continuous extension of the geometric mean to singular PSD operands,
/// s in [0,1]: the limit of (A + eps I) #_s (B + eps I) as eps drops to 0.
/// Positive definite A short-circuits to the exact direct formula.
Mat weighted_geomean_limit(const Mat& a, const Mat& b, double s,
                           const GeomeanConfig& cfg = {});

}  // namespace cqexp
