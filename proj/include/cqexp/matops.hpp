#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "cqexp/rng.hpp"

namespace cqexp {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;

// Default tolerances. herm_tol gates what counts as Hermitian, psd_tol what
// counts as positive semi-definite, slack is the default inequality slack.
inline constexpr double kHermTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kSlack = 1e-9;

/// Thrown when an operation needs an invertible operand and got a singular one.
struct SingularMatrixError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Spectral decomposition of a Hermitian matrix.
struct EigenSystem {
  Vec eigenvalues;  // sorted descending
  Mat basis;        // unitary; column k belongs to eigenvalues[k]

  Mat reconstruct() const {
    return basis * eigenvalues.cast<Cplx>().asDiagonal() * basis.adjoint();
  }
};

inline double max_abs(const Mat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline Mat hermitian_part(const Mat& m) { return 0.5 * (m + m.adjoint()); }

inline bool is_hermitian(const Mat& m, double tol = kHermTol) {
  if (m.rows() != m.cols()) return false;
  const double skew = max_abs(m - m.adjoint());
  return skew <= tol * std::max(1.0, max_abs(m));
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
/// Throws std::invalid_argument if the input fails the Hermitian invariant.
EigenSystem eigh(const Mat& m);

/// Largest |eigenvalue| of a Hermitian matrix.
double spectral_norm(const Mat& m);

double min_eigenvalue(const Mat& m);

bool is_psd(const Mat& m, double tol = kPsdTol);
bool is_pd(const Mat& m, double tol = kPsdTol);

/// A^p for PSD A via the spectral decomposition. Eigenvalues within the PSD
/// tolerance of zero map to zero when p > 0; p <= 0 requires positive
/// definite input (SingularMatrixError otherwise).
Mat matrix_power(const Mat& a, double p);

/// Sum of the k largest singular values (|eigenvalues| for Hermitian input).
double kyfan_norm(const Mat& a, int k);

/// Loewner order: A <= B iff min eig(B - A) >= -tol * max(1, ||B - A||_2).
bool loewner_leq(const Mat& a, const Mat& b, double tol = kPsdTol);

/// Tr f(A) evaluated on the spectrum; throws std::domain_error when f is
/// undefined (non-finite) at an eigenvalue.
template <class F>
double trace_fn(const Mat& a, F&& f) {
  const EigenSystem es = eigh(a);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues.size(); ++i) {
    const double y = f(es.eigenvalues[i]);
    if (!std::isfinite(y)) {
      throw std::domain_error("trace_fn: f undefined at eigenvalue " +
                              std::to_string(es.eigenvalues[i]));
    }
    acc += y;
  }
  return acc;
}

// ---- seeded random matrices (trial generators for the verification suites)

/// d x d matrix of standard complex Gaussians.
Mat random_gaussian(int d, Rng& rng);

Mat random_hermitian(int d, Rng& rng);

/// G G^dagger + floor I; deterministic function of the rng stream.
Mat random_pd(int d, Rng& rng, double floor_ev);

/// Convenience overload matching the (d, seed, floor) contract.
Mat random_pd(int d, std::uint64_t seed, double floor_ev);

/// Haar-ish random unitary (eigenbasis of a random Hermitian).
Mat random_unitary(int d, Rng& rng);

Mat from_eigenvalues(const Vec& eigenvalues, const Mat& unitary);

/// Random PD matrix with condition number drawn log-uniform from
/// [1, kappa_max] and spectral norm drawn uniform from [scale_lo, scale_hi].
Mat random_pd_cond(int d, Rng& rng, double kappa_max, double scale_lo = 0.5,
                   double scale_hi = 2.0);

/// Zero out the `zeros` smallest eigenvalues of a PSD matrix and reassemble.
Mat rank_deficient(const Mat& psd, int zeros);

}  // namespace cqexp
