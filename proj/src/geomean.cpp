#include "cqexp/geomean.hpp"

namespace cqexp {

void GeomeanConfig::validate() const {
  if (eps_schedule.empty()) {
    throw std::invalid_argument("GeomeanConfig: empty eps schedule");
  }
  double prev = std::numeric_limits<double>::infinity();
  for (double e : eps_schedule) {
    if (!(e > 0.0) || !(e < prev)) {
      throw std::invalid_argument(
          "GeomeanConfig: eps schedule must be strictly decreasing and positive");
    }
    prev = e;
  }
  if (!(convergence_tol > 0.0)) {
    throw std::invalid_argument("GeomeanConfig: convergence_tol must be positive");
  }
}

Mat weighted_geomean(const Mat& a, const Mat& b, double s) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("weighted_geomean: dimension mismatch");
  }
  if (!is_pd(a)) {
    throw SingularMatrixError(
        "weighted_geomean: A must be positive definite; "
        "use weighted_geomean_limit for singular operands");
  }
  if (!is_psd(b)) {
    throw std::invalid_argument("weighted_geomean: B must be PSD");
  }
  if ((s < 0.0 || s > 1.0) && !is_pd(b)) {
    throw SingularMatrixError(
        "weighted_geomean: s outside [0,1] requires positive definite B");
  }
  if (s == 0.0) return a;
  if (s == 1.0) return b;
  const Mat a_half = matrix_power(a, 0.5);
  const Mat a_ihalf = matrix_power(a, -0.5);
  const Mat inner = hermitian_part(a_ihalf * b * a_ihalf);
  return hermitian_part(a_half * matrix_power(inner, s) * a_half);
}

namespace {

double rel_frobenius(const Mat& delta, const Mat& ref) {
  return delta.norm() / std::max(1.0, ref.norm());
}

Mat psd_project(const Mat& m) {
  const EigenSystem es = eigh(hermitian_part(m));
  return from_eigenvalues(es.eigenvalues.cwiseMax(0.0), es.basis);
}

}  // namespace

Mat weighted_geomean_limit(const Mat& a, const Mat& b, double s,
                           const GeomeanConfig& cfg) {
  cfg.validate();
  if (s < 0.0 || s > 1.0) {
    throw std::invalid_argument("weighted_geomean_limit: s must lie in [0,1]");
  }
  if (!is_psd(a) || !is_psd(b)) {
    throw std::invalid_argument("weighted_geomean_limit: operands must be PSD");
  }
  if (is_pd(a)) return weighted_geomean(a, b, s);

  const Eigen::Index d = a.rows();
  const Mat eye = Mat::Identity(d, d);
  std::vector<Mat> iterates;
  std::vector<double> diff_norms;  // diff_norms[k] = ||G_{k+1} - G_k||
  iterates.reserve(cfg.eps_schedule.size());
  for (double eps : cfg.eps_schedule) {
    iterates.push_back(weighted_geomean(a + eps * eye, b + eps * eye, s));
    const std::size_t n = iterates.size();
    if (n < 2) continue;
    const double dn = (iterates[n - 1] - iterates[n - 2]).norm();
    if (dn / std::max(1.0, iterates[n - 1].norm()) < cfg.convergence_tol) {
      return iterates[n - 1];
    }
    diff_norms.push_back(dn);
    if (diff_norms.size() >= 2 &&
        diff_norms.back() >= 0.9 * diff_norms[diff_norms.size() - 2]) {
      // The differences stopped contracting: this shift sits below the
      // precision floor of the shifted inverse and the iterate is noise.
      // Keep the clean prefix and extrapolate from it.
      iterates.pop_back();
      diff_norms.pop_back();
      break;
    }
  }

  // The iterates decrease monotonically to the limit; for the generic
  // power-law gap ~ eps^alpha the difference norms form a geometric sequence,
  // so G* ~ G_n + D_n rho / (1 - rho) recovers the limit.
  const std::size_t n = iterates.size();
  if (n >= 3) {
    const double rho = diff_norms.back() / diff_norms[diff_norms.size() - 2];
    if (rho < 0.9) {
      const Mat d_last = iterates[n - 1] - iterates[n - 2];
      return psd_project(iterates[n - 1] + d_last * (rho / (1.0 - rho)));
    }
  }
  throw NonConvergenceError(
      "weighted_geomean_limit: eps schedule exhausted without convergence",
      iterates[n - 1], n >= 2 ? iterates[n - 2] : iterates[n - 1]);
}

}  // namespace cqexp
