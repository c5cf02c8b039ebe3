#include "cqexp/majorization.hpp"

#include <algorithm>
#include <limits>

namespace cqexp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Prefix-sum comparison shared by the plain and log-domain checks. Entries
// may be -inf (log of zero): a -inf left prefix holds trivially, a -inf
// right prefix against a finite left one fails outright.
MajorizationVerdict compare_prefixes(Vec xs, Vec ys, double rel_slack) {
  const Eigen::Index d = xs.size();
  MajorizationVerdict v;
  v.prefix_margins = Vec(d);
  double px = 0.0, py = 0.0;
  double scale = 0.0;
  for (Eigen::Index k = 0; k < d; ++k) {
    px += xs[k];
    py += ys[k];
    double margin;
    if (std::isinf(px)) {
      margin = kInf;  // left prefix is an empty product; cannot break <=
    } else if (std::isinf(py)) {
      margin = -kInf;
    } else {
      margin = py - px;
      scale = std::max({scale, std::abs(px), std::abs(py)});
    }
    v.prefix_margins[k] = margin;
  }
  v.worst_margin = d ? v.prefix_margins.minCoeff() : 0.0;
  v.scale = std::max(1.0, scale);
  v.slack = rel_slack * v.scale;
  v.holds = v.worst_margin >= -v.slack;
  return v;
}

}  // namespace

Vec decreasing_rearrangement(const Vec& x) {
  Vec out = x;
  std::sort(out.data(), out.data() + out.size(), std::greater<double>());
  return out;
}

MajorizationVerdict weak_majorizes(const Vec& x, const Vec& y,
                                   double rel_slack) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("weak_majorizes: length mismatch");
  }
  if (!x.allFinite() || !y.allFinite()) {
    throw std::invalid_argument("weak_majorizes: entries must be finite");
  }
  return compare_prefixes(decreasing_rearrangement(x),
                          decreasing_rearrangement(y), rel_slack);
}

MajorizationVerdict log_majorizes(const Vec& x, const Vec& y,
                                  double rel_slack) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("log_majorizes: length mismatch");
  }
  auto to_log = [](const Vec& v) {
    Vec out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v[i] < 0.0) {
        throw std::domain_error("log_majorizes: negative entry");
      }
      out[i] = v[i] == 0.0 ? -kInf : std::log(v[i]);
    }
    return out;
  };
  return compare_prefixes(decreasing_rearrangement(to_log(x)),
                          decreasing_rearrangement(to_log(y)), rel_slack);
}

Vec eigenvalue_vector(const Mat& a) { return eigh(a).eigenvalues; }

}  // namespace cqexp
