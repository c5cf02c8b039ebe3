#include <doctest.h>

#include "cqexp/majorization.hpp"

using namespace cqexp;

namespace {

Vec vec(std::initializer_list<double> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

bool same(const Vec& a, const Vec& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

}  // namespace

TEST_CASE("decreasing_rearrangement") {
  CHECK(same(decreasing_rearrangement(vec({1, 3, 2})), vec({3, 2, 1})));
  CHECK(same(decreasing_rearrangement(vec({2, 2})), vec({2, 2})));
  CHECK(decreasing_rearrangement(Vec()).size() == 0);
  // idempotent and permutation-invariant
  for (int i = 0; i < 100; ++i) {
    Rng rng(stream_seed(70, i));
    Vec x(rng.uniform_int(1, 8));
    for (Eigen::Index k = 0; k < x.size(); ++k) x[k] = rng.uniform(-2.0, 2.0);
    const Vec sorted = decreasing_rearrangement(x);
    CHECK(same(decreasing_rearrangement(sorted), sorted));
    // reversing is one particular permutation
    CHECK(same(decreasing_rearrangement(sorted.reverse()), sorted));
  }
}

TEST_CASE("weak_majorizes verdicts") {
  const auto ok = weak_majorizes(vec({2, 2}), vec({3, 1}));
  CHECK(ok.holds);
  CHECK(ok.prefix_margins[0] == doctest::Approx(1.0));
  CHECK(ok.prefix_margins[1] == doctest::Approx(0.0));

  const auto bad = weak_majorizes(vec({3, 1}), vec({2, 2}));
  CHECK_FALSE(bad.holds);
  CHECK(bad.prefix_margins[0] == doctest::Approx(-1.0));

  const auto eq = weak_majorizes(vec({1, 2, 3}), vec({1, 2, 3}));
  CHECK(eq.holds);
  CHECK(eq.worst_margin == doctest::Approx(0.0));

  CHECK_THROWS_AS(weak_majorizes(vec({1}), vec({1, 2})), std::invalid_argument);
}

TEST_CASE("log_majorizes verdicts") {
  CHECK(log_majorizes(vec({2, 2}), vec({4, 1})).holds);
  CHECK_FALSE(log_majorizes(vec({4, 1}), vec({2, 2})).holds);
  CHECK_THROWS_AS(log_majorizes(vec({-1, 1}), vec({1, 1})), std::domain_error);
}

TEST_CASE("zeros in log-majorization follow the limit convention") {
  // zero on the left can never break the comparison
  CHECK(log_majorizes(vec({1, 0}), vec({2, 0.5})).holds);
  CHECK(log_majorizes(vec({0, 0}), vec({0, 0})).holds);
  // zero on the right against a positive left prefix fails outright
  const auto v = log_majorizes(vec({2, 1}), vec({4, 0}));
  CHECK_FALSE(v.holds);
}

TEST_CASE("log-majorization implies weak majorization on positive vectors") {
  int found = 0;
  for (int i = 0; i < 5000 && found < 1000; ++i) {
    Rng rng(stream_seed(71, i));
    const int d = rng.uniform_int(2, 6);
    Vec x(d), y(d);
    for (int k = 0; k < d; ++k) {
      x[k] = rng.log_uniform(1e-3, 10.0);
      y[k] = rng.log_uniform(1e-3, 10.0);
    }
    if (!log_majorizes(x, y).holds) continue;
    ++found;
    CHECK(weak_majorizes(x, y).holds);
  }
  CHECK(found >= 200);  // the sampler must actually exercise the implication
}

TEST_CASE("entrywise powers preserve weak majorization for t >= 1") {
  for (int i = 0; i < 1000; ++i) {
    Rng rng(stream_seed(72, i));
    const int d = rng.uniform_int(2, 6);
    Vec y(d), x(d);
    for (int k = 0; k < d; ++k) y[k] = rng.uniform(0.0, 2.0);
    const Vec ys = decreasing_rearrangement(y);
    for (int k = 0; k < d; ++k) x[k] = ys[k] * rng.uniform(0.0, 1.0);
    REQUIRE(weak_majorizes(x, y).holds);
    for (double t : {1.0, 1.5, 2.0, 3.0, 10.0}) {
      CHECK(weak_majorizes(x.array().pow(t), y.array().pow(t)).holds);
    }
  }
}

TEST_CASE("eigenvalue_vector bridges operators to vectors") {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 5.0;
  m(2, 2) = 3.0;
  CHECK(same(eigenvalue_vector(m), vec({5, 3, 1})));
  CHECK(same(eigenvalue_vector(Mat::Identity(4, 4)), vec({1, 1, 1, 1})));

  Rng rng(11);
  const Mat a = random_pd(4, rng, 0.1);
  CHECK((eigenvalue_vector(a) - eigh(a).eigenvalues).norm() == 0.0);
}

TEST_CASE("norm bridge: spectral weak majorization bounds every Ky Fan norm") {
  for (int i = 0; i < 300; ++i) {
    Rng rng(stream_seed(73, i));
    const int d = rng.uniform_int(2, 6);
    const Mat a = random_pd(d, rng, 1e-3);
    const Mat b = a + random_pd(d, rng, 1e-3);  // guarantees lambda(a) <_w lambda(b)
    if (!weak_majorizes(eigenvalue_vector(a), eigenvalue_vector(b)).holds) {
      continue;
    }
    for (int k = 1; k <= d; ++k) {
      CHECK(kyfan_norm(a, k) <= kyfan_norm(b, k) + 1e-9 * std::max(1.0, kyfan_norm(b, k)));
    }
  }
}
