#include <doctest.h>

#include <cmath>

#include "cqexp/matops.hpp"

using namespace cqexp;

namespace {

Mat diag2(double a, double b) {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

double rel_err(const Mat& x, const Mat& y) {
  return (x - y).norm() / std::max(1.0, y.norm());
}

}  // namespace

TEST_CASE("eigh sorts descending and reconstructs") {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 3.0;
  m(2, 2) = 2.0;
  const EigenSystem es = eigh(m);
  CHECK(es.eigenvalues[0] == doctest::Approx(3.0));
  CHECK(es.eigenvalues[1] == doctest::Approx(2.0));
  CHECK(es.eigenvalues[2] == doctest::Approx(1.0));
  // permutation basis: one unit entry per column
  for (int c = 0; c < 3; ++c) {
    CHECK(es.basis.col(c).cwiseAbs().maxCoeff() == doctest::Approx(1.0));
  }
  CHECK(rel_err(es.reconstruct(), m) < 1e-12);

  const Mat eye = Mat::Identity(4, 4);
  const EigenSystem ei = eigh(eye);
  for (int i = 0; i < 4; ++i) CHECK(ei.eigenvalues[i] == doctest::Approx(1.0));
}

TEST_CASE("eigh reconstruction residual on a seeded random Hermitian") {
  Rng rng(7);
  const Mat m = random_hermitian(4, rng);
  const EigenSystem es = eigh(m);
  const double norm2 = es.eigenvalues.cwiseAbs().maxCoeff();
  CHECK(max_abs(es.reconstruct() - m) < 1e-10 * norm2);
  CHECK(max_abs(es.basis * es.basis.adjoint() - Mat::Identity(4, 4)) < 1e-10);
}

TEST_CASE("eigh rejects non-Hermitian input") {
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = 1.0;  // strictly upper, not Hermitian
  CHECK_THROWS_AS(eigh(m), std::invalid_argument);
  CHECK_THROWS_AS(eigh(Mat::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("matrix_power basics") {
  const Mat root = matrix_power(diag2(4.0, 9.0), 0.5);
  CHECK(root(0, 0).real() == doctest::Approx(2.0));
  CHECK(root(1, 1).real() == doctest::Approx(3.0));

  Rng rng(3);
  const Mat a = random_pd(3, rng, 0.1);
  CHECK(rel_err(matrix_power(a, 0.0), Mat::Identity(3, 3)) < 1e-12);

  // support convention: 0^p = 0 for p > 0
  const Mat sroot = matrix_power(diag2(4.0, 0.0), 0.5);
  CHECK(sroot(0, 0).real() == doctest::Approx(2.0));
  CHECK(std::abs(sroot(1, 1)) < 1e-14);
}

TEST_CASE("matrix_power rejects nonpositive powers of singular input") {
  CHECK_THROWS_AS(matrix_power(diag2(4.0, 0.0), -0.5), SingularMatrixError);
  CHECK_THROWS_AS(matrix_power(diag2(4.0, 0.0), 0.0), SingularMatrixError);
  CHECK_THROWS_AS(matrix_power(diag2(1.0, -1.0), 2.0), std::invalid_argument);
}

TEST_CASE("kyfan_norm") {
  CHECK(kyfan_norm(diag2(3.0, 1.0), 1) == doctest::Approx(3.0));
  CHECK(kyfan_norm(diag2(3.0, 1.0), 2) == doctest::Approx(4.0));
  CHECK(kyfan_norm(diag2(-2.0, 1.0), 1) == doctest::Approx(2.0));
  CHECK_THROWS_AS(kyfan_norm(diag2(1.0, 1.0), 0), std::invalid_argument);
  CHECK_THROWS_AS(kyfan_norm(diag2(1.0, 1.0), 3), std::invalid_argument);
}

TEST_CASE("loewner_leq") {
  const Mat eye = Mat::Identity(2, 2);
  CHECK(loewner_leq(eye, 2.0 * eye, kPsdTol));
  CHECK_FALSE(loewner_leq(2.0 * eye, eye, kPsdTol));
  CHECK_FALSE(loewner_leq(diag2(1.0, 2.0), diag2(2.0, 1.0), kPsdTol));
  CHECK(loewner_leq(diag2(1.0, 2.0), diag2(1.0, 2.0), kPsdTol));
  CHECK_THROWS_AS(loewner_leq(eye, Mat::Identity(3, 3), kPsdTol),
                  std::invalid_argument);
}

TEST_CASE("trace_fn") {
  CHECK(trace_fn(diag2(1.0, 2.0), [](double t) { return t * t; }) ==
        doctest::Approx(5.0));
  CHECK(trace_fn(Mat::Identity(3, 3), [](double t) { return std::exp(t); }) ==
        doctest::Approx(3.0 * std::exp(1.0)));
  Rng rng(11);
  const Mat a = random_hermitian(3, rng);
  CHECK(trace_fn(a, [](double t) { return t; }) ==
        doctest::Approx(a.trace().real()));
  CHECK_THROWS_AS(trace_fn(diag2(1.0, 0.0), [](double t) { return std::log(t); }),
                  std::domain_error);
}

TEST_CASE("random_pd is deterministic, PD, Hermitian") {
  const Mat a = random_pd(2, std::uint64_t{1}, 1e-3);
  const Mat b = random_pd(2, std::uint64_t{1}, 1e-3);
  CHECK(max_abs(a - b) == 0.0);
  CHECK(min_eigenvalue(a) >= 1e-3 - 1e-12);

  const Mat c = random_pd(3, std::uint64_t{5}, 1e-3);
  CHECK(max_abs(c - c.adjoint()) <= 1e-12 * std::max(1.0, max_abs(c)));
}

TEST_CASE("spectral round trip over seeded random Hermitians") {
  for (int i = 0; i < 1000; ++i) {
    Rng rng(stream_seed(42, i));
    const int d = rng.uniform_int(2, 8);
    const Mat m = random_hermitian(d, rng);
    const EigenSystem es = eigh(m);
    const double norm2 = es.eigenvalues.cwiseAbs().maxCoeff();
    CHECK(max_abs(es.reconstruct() - m) <= 1e-10 * std::max(norm2, 1e-300));
    for (int k = 1; k < d; ++k) {
      CHECK(es.eigenvalues[k - 1] >= es.eigenvalues[k]);
    }
  }
}

TEST_CASE("power composition (A^p)^q = A^{pq}") {
  for (int i = 0; i < 300; ++i) {
    Rng rng(stream_seed(43, i));
    const int d = rng.uniform_int(2, 6);
    const Mat a = random_pd(d, rng, 0.1);
    const double p = rng.uniform(0.1, 4.0);
    const double q = rng.uniform(0.1, 4.0);
    const Mat left = matrix_power(matrix_power(a, p), q);
    const Mat right = matrix_power(a, p * q);
    CHECK((left - right).norm() <= 1e-9 * std::max(1.0, right.norm()));
  }
}

TEST_CASE("Ky Fan norms are monotone in k") {
  for (int i = 0; i < 200; ++i) {
    Rng rng(stream_seed(44, i));
    const int d = rng.uniform_int(2, 6);
    const Mat a = random_hermitian(d, rng);
    for (int k = 1; k < d; ++k) {
      CHECK(kyfan_norm(a, k) <= kyfan_norm(a, k + 1) + 1e-12);
    }
  }
}

TEST_CASE("loewner_leq behaves as a partial order on sampled triples") {
  for (int i = 0; i < 200; ++i) {
    Rng rng(stream_seed(45, i));
    const int d = rng.uniform_int(2, 6);
    const Mat a = random_hermitian(d, rng);
    const Mat b = a + random_pd(d, rng, 1e-3);
    const Mat c = b + random_pd(d, rng, 1e-3);
    CHECK(loewner_leq(a, a, kPsdTol));  // reflexive
    CHECK(loewner_leq(a, b, kPsdTol));
    CHECK(loewner_leq(b, c, kPsdTol));
    CHECK(loewner_leq(a, c, kPsdTol));  // transitive along the chain
    // antisymmetry within tolerance: both directions only for near-equal pairs
    if (loewner_leq(b, a, kPsdTol)) {
      CHECK(max_abs(a - b) <= 1e-6 * std::max(1.0, max_abs(a)));
    }
  }
}

TEST_CASE("rank_deficient zeroes the smallest eigenvalues") {
  Rng rng(9);
  const Mat a = random_pd(4, rng, 0.5);
  const Mat r = rank_deficient(a, 2);
  const Vec ev = eigh(r).eigenvalues;
  CHECK(ev[2] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ev[3] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ev[0] > 0.4);
}
