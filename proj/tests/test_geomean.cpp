#include <doctest.h>

#include <cmath>

#include "cqexp/geomean.hpp"

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

TEST_CASE("scalar case: 4 #_1/2 9 = 6") {
  Mat a(1, 1), b(1, 1);
  a(0, 0) = 4.0;
  b(0, 0) = 9.0;
  const Mat g = weighted_geomean(a, b, 0.5);
  CHECK(g(0, 0).real() == doctest::Approx(6.0));
}

TEST_CASE("endpoints: s=0 gives A, s=1 gives B") {
  Rng rng(1);
  const Mat a = random_pd(3, rng, 0.1);
  const Mat b = random_pd(3, rng, 0.1);
  CHECK(max_abs(weighted_geomean(a, b, 0.0) - a) == 0.0);
  CHECK(max_abs(weighted_geomean(a, b, 1.0) - b) == 0.0);
}

TEST_CASE("identity left operand: I #_s B = B^s") {
  Rng rng(2);
  const Mat b = random_pd(3, rng, 0.1);
  const Mat eye = Mat::Identity(3, 3);
  for (double s : {0.25, 0.5, 0.8}) {
    CHECK(rel_err(weighted_geomean(eye, b, s), matrix_power(b, s)) < 1e-12);
  }
}

TEST_CASE("s outside [0,1] is allowed for PD operands only") {
  Rng rng(3);
  const Mat a = random_pd(2, rng, 0.1);
  const Mat b = random_pd(2, rng, 0.1);
  const Mat g = weighted_geomean(a, b, 1.7);  // well-posed for PD inputs
  CHECK(is_hermitian(g));
  CHECK_THROWS_AS(weighted_geomean(a, diag2(1.0, 0.0), 1.7),
                  SingularMatrixError);
  CHECK_THROWS_AS(weighted_geomean(a, diag2(1.0, 0.0), -0.3),
                  SingularMatrixError);
}

TEST_CASE("singular A is refused by the direct formula") {
  Rng rng(4);
  const Mat b = random_pd(2, rng, 0.1);
  CHECK_THROWS_AS(weighted_geomean(diag2(1.0, 0.0), b, 0.5),
                  SingularMatrixError);
}

TEST_CASE("limit: A = B = diag(1,0) stays diag(1,0)") {
  const Mat a = diag2(1.0, 0.0);
  const Mat g = weighted_geomean_limit(a, a, 0.5);
  CHECK(rel_err(g, a) < 1e-9);
}

TEST_CASE("limit matches the direct formula on PD operands") {
  for (int i = 0; i < 50; ++i) {
    Rng rng(stream_seed(60, i));
    const int d = rng.uniform_int(2, 6);
    const Mat a = random_pd(d, rng, 0.05);
    const Mat b = random_pd(d, rng, 0.05);
    const double s = rng.uniform(0.0, 1.0);
    CHECK(rel_err(weighted_geomean_limit(a, b, s), weighted_geomean(a, b, s)) <
          1e-9);
  }
}

TEST_CASE("limit: orthogonal supports annihilate") {
  // oracle: iterates at eps in {1e-2,1e-4,1e-6} are sqrt(eps(1+eps)) I, a
  // geometric tail whose extrapolation is the zero matrix
  const Mat g = weighted_geomean_limit(diag2(1.0, 0.0), diag2(0.0, 1.0), 0.5);
  CHECK(max_abs(g) < 1e-6);
}

TEST_CASE("limit rejects bad arguments") {
  const Mat a = diag2(1.0, 0.0);
  CHECK_THROWS_AS(weighted_geomean_limit(a, a, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(weighted_geomean_limit(diag2(1.0, -1.0), a, 0.5),
                  std::invalid_argument);
  GeomeanConfig bad;
  bad.eps_schedule = {1e-6, 1e-4};
  CHECK_THROWS_AS(weighted_geomean_limit(a, a, 0.5, bad),
                  std::invalid_argument);
}

TEST_CASE("limit result is PSD on random singular pairs") {
  for (int i = 0; i < 100; ++i) {
    Rng rng(stream_seed(61, i));
    const int d = rng.uniform_int(2, 5);
    const Mat a = rank_deficient(random_pd(d, rng, 0.05), rng.uniform_int(1, d - 1));
    const Mat b = rank_deficient(random_pd(d, rng, 0.05), rng.uniform_int(1, d - 1));
    const double s = rng.uniform(0.1, 0.9);
    const Mat g = weighted_geomean_limit(a, b, s);
    CHECK(is_psd(g, 1e-8));
  }
}
