#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "cqexp/matops.hpp"

namespace cqexp {

struct ProbabilityDistribution {
  Vec weights;

  static ProbabilityDistribution uniform(int n);
  /// Validates nonnegativity and unit sum (1e-12); keeps the entries as given.
  static ProbabilityDistribution from_weights(Vec w);

  int size() const { return static_cast<int>(weights.size()); }
};

/// Classical-quantum channel: finite alphabet, one density operator per letter.
struct CQChannel {
  std::vector<Mat> states;

  /// Validates each output (PSD, unit trace within 1e-10, common dimension).
  static CQChannel from_states(std::vector<Mat> outputs);

  int alphabet_size() const { return static_cast<int>(states.size()); }
  int dim() const { return states.empty() ? 0 : static_cast<int>(states[0].rows()); }
};

/// Row-stochastic transition matrix Q(y|x); rows indexed by inputs.
struct ClassicalChannel {
  Eigen::MatrixXd rows;

  static ClassicalChannel from_rows(Eigen::MatrixXd q);

  int inputs() const { return static_cast<int>(rows.rows()); }
  int outputs() const { return static_cast<int>(rows.cols()); }
};

struct OptimizerConfig {
  std::uint64_t seed = 2024;
  int starts = 8;
  double tol = 1e-7;
  int max_iters = 5000;
  double coarse_step = 0.05;   // outer grid over s
  double golden_tol = 1e-6;    // width of the refined s bracket
  double slope_delta = 1e-3;   // finite-difference step for the s_max slope test
};

/// One point of an exponent curve. value is in bits and +infinity when the
/// sphere-packing objective is still climbing at the s cap.
struct ExponentPoint {
  double rate = 0.0;
  double value = 0.0;
  bool divergent = false;
  double arg_s = 0.0;
  ProbabilityDistribution arg_p;
  bool s_cap_hit = false;
  bool converged = true;
};

/// Auxiliary function of a classical-quantum channel, in bits:
/// -log2 Tr[(sum_x P(x) W_x^{1/(1+s)})^{1+s}], s >= 0.
double e0_quantum(const CQChannel& w, const ProbabilityDistribution& p,
                  double s);

/// Classical auxiliary function -log2 sum_y (sum_x P(x) Q(y|x)^{1/(1+s)})^{1+s}.
double e0_classical(const ClassicalChannel& q, const ProbabilityDistribution& p,
                    double s);

/// log2 Tr[(E W^{1/t})^t] for t >= 1; equals -e0_quantum(w, p, t-1).
double f_map(const CQChannel& w, const ProbabilityDistribution& p, double t);

/// Central-difference (dE0/ds, d2E0/ds2); requires s >= h > 0.
std::pair<double, double> e0_derivatives(const CQChannel& w,
                                         const ProbabilityDistribution& p,
                                         double s, double h = 1e-4);

struct InnerMaximum {
  ProbabilityDistribution arg_p;
  double value = 0.0;
  bool converged = true;
};

/// max_P E0(s, P) by multistart exponentiated-gradient ascent on the simplex.
/// Deterministic given opt.seed; a non-converged run returns best-so-far with
/// the flag cleared.
InnerMaximum max_e0_over_inputs(const CQChannel& w, double s,
                                const OptimizerConfig& opt = {});

/// Memoizes max_e0_over_inputs across the many s probes of an outer search.
/// Values are deterministic functions of (channel, s, opt.seed), so the cache
/// never changes results, only cost. Safe for concurrent lookups.
class E0Maximizer {
 public:
  E0Maximizer(const CQChannel& w, OptimizerConfig opt = {})
      : w_(&w), opt_(std::move(opt)) {}

  const InnerMaximum& at(double s) const;
  double value(double s) const { return at(s).value; }
  const OptimizerConfig& config() const { return opt_; }

 private:
  const CQChannel* w_;
  OptimizerConfig opt_;
  mutable std::mutex mu_;
  mutable std::map<double, InnerMaximum> cache_;
};

/// E_r(R) = max over s in [0,1] of max_P E0(s,P) - sR  (coarse grid, then
/// golden-section refinement).
ExponentPoint random_coding_exponent(const E0Maximizer& phi, double rate);
ExponentPoint random_coding_exponent(const CQChannel& w, double rate,
                                     const OptimizerConfig& opt = {});

/// E_sp(R) = sup over s in [0, s_max]; flagged divergent (value = +inf,
/// s_cap_hit) when the objective still climbs at s_max.
ExponentPoint sphere_packing_exponent(const E0Maximizer& phi, double rate,
                                      double s_max = 64.0);
ExponentPoint sphere_packing_exponent(const CQChannel& w, double rate,
                                      double s_max = 64.0,
                                      const OptimizerConfig& opt = {});

/// Diagonal embedding W_x = diag(Q(.|x)); e0_quantum on it reproduces
/// e0_classical on Q.
CQChannel embed_classical(const ClassicalChannel& q);

// ---- seeded generators for suites and tests

ProbabilityDistribution random_distribution(int n, Rng& rng);

/// Random density operator of the given rank (eigenvalues Dirichlet(1) on the
/// support, Haar-ish eigenbasis).
Mat random_density(int d, Rng& rng, int rank);

CQChannel random_channel(int alphabet, int d, Rng& rng,
                         bool allow_rank_deficient);

}  // namespace cqexp
