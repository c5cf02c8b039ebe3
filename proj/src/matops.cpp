#include "cqexp/matops.hpp"

#include <algorithm>

namespace cqexp {

EigenSystem eigh(const Mat& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("eigh: matrix is not square");
  }
  if (!is_hermitian(m)) {
    throw std::invalid_argument("eigh: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(hermitian_part(m));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigh: eigensolver failed to converge");
  }
  EigenSystem es;
  es.eigenvalues = solver.eigenvalues().reverse();
  es.basis = solver.eigenvectors().rowwise().reverse();
  return es;
}

double spectral_norm(const Mat& m) {
  const EigenSystem es = eigh(m);
  if (es.eigenvalues.size() == 0) return 0.0;
  return es.eigenvalues.cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Mat& m) { return eigh(m).eigenvalues.minCoeff(); }

bool is_psd(const Mat& m, double tol) {
  if (!is_hermitian(m)) return false;
  const EigenSystem es = eigh(m);
  const double lmax = std::max(0.0, es.eigenvalues.maxCoeff());
  return es.eigenvalues.minCoeff() >= -tol * std::max(1.0, lmax);
}

bool is_pd(const Mat& m, double tol) {
  if (!is_hermitian(m)) return false;
  const EigenSystem es = eigh(m);
  const double lmax = std::max(0.0, es.eigenvalues.maxCoeff());
  return es.eigenvalues.minCoeff() > tol * std::max(1.0, lmax);
}

Mat matrix_power(const Mat& a, double p) {
  if (p == 1.0) {
    if (!is_hermitian(a)) throw std::invalid_argument("matrix_power: input is not Hermitian");
    return a;
  }
  const EigenSystem es = eigh(a);
  const int d = static_cast<int>(es.eigenvalues.size());
  const double lmax = d ? std::max(0.0, es.eigenvalues.maxCoeff()) : 0.0;
  const double floor_ev = kPsdTol * std::max(1.0, lmax);
  if (d && es.eigenvalues.minCoeff() < -floor_ev) {
    throw std::invalid_argument("matrix_power: input is not PSD");
  }
  if (p <= 0.0 && d && es.eigenvalues.minCoeff() <= floor_ev) {
    throw SingularMatrixError(
        "matrix_power: power <= 0 requires a positive definite input");
  }
  Vec powered(d);
  for (int i = 0; i < d; ++i) {
    const double ev = es.eigenvalues[i];
    // 0^p = 0 on the support for p > 0; negatives here are within the PSD
    // tolerance and count as zeros.
    powered[i] = (ev <= 0.0 && p > 0.0) ? 0.0 : std::pow(ev, p);
  }
  return es.basis * powered.cast<Cplx>().asDiagonal() * es.basis.adjoint();
}

double kyfan_norm(const Mat& a, int k) {
  const EigenSystem es = eigh(a);
  const int d = static_cast<int>(es.eigenvalues.size());
  if (k < 1 || k > d) {
    throw std::invalid_argument("kyfan_norm: k out of range [1, d]");
  }
  Vec sv = es.eigenvalues.cwiseAbs();
  std::sort(sv.data(), sv.data() + d, std::greater<double>());
  return sv.head(k).sum();
}

bool loewner_leq(const Mat& a, const Mat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("loewner_leq: dimension mismatch");
  }
  const EigenSystem es = eigh(hermitian_part(b - a));
  if (es.eigenvalues.size() == 0) return true;
  const double norm2 = es.eigenvalues.cwiseAbs().maxCoeff();
  return es.eigenvalues.minCoeff() >= -tol * std::max(1.0, norm2);
}

Mat random_gaussian(int d, Rng& rng) {
  Mat g(d, d);
  const double inv_sqrt2 = 0.70710678118654752440;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      g(i, j) = Cplx(rng.normal(), rng.normal()) * inv_sqrt2;
    }
  }
  return g;
}

Mat random_hermitian(int d, Rng& rng) {
  return hermitian_part(random_gaussian(d, rng));
}

Mat random_pd(int d, Rng& rng, double floor_ev) {
  if (d < 1) throw std::invalid_argument("random_pd: d must be >= 1");
  if (!(floor_ev > 0.0)) {
    throw std::invalid_argument("random_pd: floor must be positive");
  }
  const Mat g = random_gaussian(d, rng);
  return hermitian_part(g * g.adjoint()) + floor_ev * Mat::Identity(d, d);
}

Mat random_pd(int d, std::uint64_t seed, double floor_ev) {
  Rng rng(seed);
  return random_pd(d, rng, floor_ev);
}

Mat random_unitary(int d, Rng& rng) {
  return eigh(random_hermitian(d, rng)).basis;
}

Mat from_eigenvalues(const Vec& eigenvalues, const Mat& unitary) {
  return unitary * eigenvalues.cast<Cplx>().asDiagonal() * unitary.adjoint();
}

Mat random_pd_cond(int d, Rng& rng, double kappa_max, double scale_lo,
                   double scale_hi) {
  const double kappa = rng.log_uniform(1.0, kappa_max);
  const double scale = rng.uniform(scale_lo, scale_hi);
  Vec ev(d);
  for (int i = 0; i < d; ++i) ev[i] = rng.log_uniform(scale / kappa, scale);
  ev[0] = scale;
  if (d > 1) ev[d - 1] = scale / kappa;
  std::sort(ev.data(), ev.data() + d, std::greater<double>());
  return from_eigenvalues(ev, random_unitary(d, rng));
}

Mat rank_deficient(const Mat& psd, int zeros) {
  EigenSystem es = eigh(psd);
  const int d = static_cast<int>(es.eigenvalues.size());
  if (zeros < 0 || zeros > d) {
    throw std::invalid_argument("rank_deficient: bad zero count");
  }
  Vec ev = es.eigenvalues.cwiseMax(0.0);
  for (int i = d - zeros; i < d; ++i) ev[i] = 0.0;  // spectrum is descending
  return from_eigenvalues(ev, es.basis);
}

}  // namespace cqexp
