#include "cqexp/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cqexp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLog2 = 0.69314718055994530942;

// Fixed (channel, s) evaluator: the fractional powers W_x^{1/(1+s)} are
// precomputed once, so each probe of a new distribution costs one d x d
// eigendecomposition.
class E0Evaluator {
 public:
  E0Evaluator(const CQChannel& w, double s) : t_(1.0 + s) {
    roots_.reserve(w.states.size());
    for (const Mat& wx : w.states) roots_.push_back(matrix_power(wx, 1.0 / t_));
  }

  // Accepts any weight vector near the simplex (finite-difference probes
  // step slightly off it); eigenvalues are clamped at zero before powering.
  double operator()(const Vec& weights) const {
    const Eigen::Index d = roots_[0].rows();
    Mat acc = Mat::Zero(d, d);
    for (std::size_t x = 0; x < roots_.size(); ++x) acc += weights[x] * roots_[x];
    const EigenSystem es = eigh(hermitian_part(acc));
    double tr = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      const double ev = es.eigenvalues[i];
      if (ev > 0.0) tr += std::pow(ev, t_);
    }
    return -std::log2(tr);
  }

 private:
  std::vector<Mat> roots_;
  double t_;
};

void check_channel_dist(const CQChannel& w, const ProbabilityDistribution& p) {
  if (p.size() != w.alphabet_size()) {
    throw std::invalid_argument("distribution does not match channel alphabet");
  }
}

struct AscentResult {
  Vec p;
  double value = -kInf;
  bool converged = false;
};

// Exponentiated-gradient ascent: multiplicative update along a numerically
// estimated gradient, step halved until the objective does not decrease.
AscentResult eg_ascent(const E0Evaluator& eval, Vec p, double tol,
                       int max_iters) {
  const int n = static_cast<int>(p.size());
  AscentResult res;
  double val = eval(p);
  double eta = 1.0;
  const double fd = 1e-6;
  for (int iter = 0; iter < max_iters; ++iter) {
    Vec grad(n);
    for (int x = 0; x < n; ++x) {
      Vec up = p;
      up[x] += fd;
      if (p[x] >= fd) {
        Vec dn = p;
        dn[x] -= fd;
        grad[x] = (eval(up) - eval(dn)) / (2.0 * fd);
      } else {
        grad[x] = (eval(up) - val) / fd;  // one-sided near the boundary
      }
    }
    const double gmax = grad.maxCoeff();
    double next_val = val;
    Vec next_p = p;
    bool stepped = false;
    while (eta > 1e-12) {
      Vec q(n);
      for (int x = 0; x < n; ++x) q[x] = p[x] * std::exp(eta * (grad[x] - gmax));
      const double z = q.sum();
      if (z > 0.0) {
        q /= z;
        const double qval = eval(q);
        if (qval >= val) {
          next_val = qval;
          next_p = q;
          stepped = true;
          break;
        }
      }
      eta *= 0.5;
    }
    if (!stepped || next_val - val < tol) {
      res.converged = true;
      p = next_p;
      val = next_val;
      break;
    }
    p = next_p;
    val = next_val;
    eta = std::min(eta * 1.5, 8.0);
  }
  res.p = p;
  res.value = val;
  return res;
}

template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double xtol) {
  const double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > xtol) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 >= f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

}  // namespace

ProbabilityDistribution ProbabilityDistribution::uniform(int n) {
  if (n < 1) throw std::invalid_argument("uniform distribution needs n >= 1");
  ProbabilityDistribution p;
  p.weights = Vec::Constant(n, 1.0 / n);
  return p;
}

ProbabilityDistribution ProbabilityDistribution::from_weights(Vec w) {
  if (w.size() == 0) throw std::invalid_argument("empty distribution");
  if ((w.array() < 0.0).any()) {
    throw std::invalid_argument("distribution has a negative weight");
  }
  if (std::abs(w.sum() - 1.0) > 1e-12) {
    throw std::invalid_argument("distribution does not sum to 1");
  }
  ProbabilityDistribution p;
  p.weights = std::move(w);
  return p;
}

CQChannel CQChannel::from_states(std::vector<Mat> outputs) {
  if (outputs.empty()) throw std::invalid_argument("channel has no outputs");
  const Eigen::Index d = outputs[0].rows();
  for (const Mat& m : outputs) {
    if (m.rows() != d || m.cols() != d) {
      throw std::invalid_argument("channel outputs differ in dimension");
    }
    if (!is_psd(m)) {
      throw std::invalid_argument("channel output is not PSD");
    }
    if (std::abs(m.trace().real() - 1.0) > 1e-10 ||
        std::abs(m.trace().imag()) > 1e-10) {
      throw std::invalid_argument("channel output does not have unit trace");
    }
  }
  CQChannel w;
  w.states = std::move(outputs);
  return w;
}

ClassicalChannel ClassicalChannel::from_rows(Eigen::MatrixXd q) {
  if (q.rows() < 1 || q.cols() < 1) {
    throw std::invalid_argument("classical channel must be non-empty");
  }
  if ((q.array() < 0.0).any()) {
    throw std::invalid_argument("classical channel has a negative entry");
  }
  for (Eigen::Index x = 0; x < q.rows(); ++x) {
    if (std::abs(q.row(x).sum() - 1.0) > 1e-12) {
      throw std::invalid_argument("classical channel row does not sum to 1");
    }
  }
  ClassicalChannel c;
  c.rows = std::move(q);
  return c;
}

double e0_quantum(const CQChannel& w, const ProbabilityDistribution& p,
                  double s) {
  if (s < 0.0) throw std::invalid_argument("e0_quantum: s must be >= 0");
  check_channel_dist(w, p);
  return E0Evaluator(w, s)(p.weights);
}

double e0_classical(const ClassicalChannel& q, const ProbabilityDistribution& p,
                    double s) {
  if (s < 0.0) throw std::invalid_argument("e0_classical: s must be >= 0");
  if (p.size() != q.inputs()) {
    throw std::invalid_argument("distribution does not match channel alphabet");
  }
  const double t = 1.0 + s;
  double total = 0.0;
  for (Eigen::Index y = 0; y < q.outputs(); ++y) {
    double inner = 0.0;
    for (Eigen::Index x = 0; x < q.inputs(); ++x) {
      const double qyx = q.rows(x, y);
      if (qyx > 0.0) inner += p.weights[x] * std::pow(qyx, 1.0 / t);
    }
    total += std::pow(inner, t);
  }
  return -std::log2(total);
}

double f_map(const CQChannel& w, const ProbabilityDistribution& p, double t) {
  if (t < 1.0) throw std::invalid_argument("f_map: t must be >= 1");
  return -e0_quantum(w, p, t - 1.0);
}

std::pair<double, double> e0_derivatives(const CQChannel& w,
                                         const ProbabilityDistribution& p,
                                         double s, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("e0_derivatives: h must be > 0");
  if (s < h) {
    throw std::invalid_argument(
        "e0_derivatives: central differences need s - h >= 0");
  }
  const double fp = e0_quantum(w, p, s + h);
  const double f0 = e0_quantum(w, p, s);
  const double fm = e0_quantum(w, p, s - h);
  return {(fp - fm) / (2.0 * h), (fp - 2.0 * f0 + fm) / (h * h)};
}

InnerMaximum max_e0_over_inputs(const CQChannel& w, double s,
                                const OptimizerConfig& opt) {
  if (s < 0.0) throw std::invalid_argument("max_e0_over_inputs: s must be >= 0");
  const int n = w.alphabet_size();
  const E0Evaluator eval(w, s);

  InnerMaximum best;
  if (n == 1) {
    best.arg_p = ProbabilityDistribution::uniform(1);
    best.value = eval(best.arg_p.weights);
    best.converged = true;
    return best;
  }

  std::vector<Vec> starts;
  starts.push_back(Vec::Constant(n, 1.0 / n));
  if (n <= 7) {
    // Vertices are stationary for multiplicative updates (zero weights stay
    // zero), so nudge them slightly into the interior.
    for (int x = 0; x < n; ++x) {
      Vec v = Vec::Constant(n, 1e-3 / n);
      v[x] += 1.0 - 1e-3;
      starts.push_back(v);
    }
  }
  int extra = 0;
  while (static_cast<int>(starts.size()) < opt.starts) {
    Rng rng(stream_seed(opt.seed, 0x517A57u + extra++));
    starts.push_back(random_distribution(n, rng).weights);
  }

  best.value = -kInf;
  for (const Vec& start : starts) {
    const AscentResult run = eg_ascent(eval, start, opt.tol, opt.max_iters);
    if (run.value > best.value) {
      best.value = run.value;
      best.arg_p.weights = run.p;
      best.converged = run.converged;
    }
  }
  return best;
}

const InnerMaximum& E0Maximizer::at(double s) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(s);
  if (it == cache_.end()) {
    it = cache_.emplace(s, max_e0_over_inputs(*w_, s, opt_)).first;
  }
  return it->second;
}

namespace {

// Shared outer search: maximize phi(s) - sR over a grid, refine the best
// bracket by golden section. Grid points are memoized inside the maximizer.
ExponentPoint outer_search(const E0Maximizer& phi, double rate,
                           const std::vector<double>& grid) {
  bool all_converged = true;
  auto objective = [&](double s) {
    const InnerMaximum& m = phi.at(s);
    all_converged = all_converged && m.converged;
    return m.value - s * rate;
  };

  std::size_t best_idx = 0;
  double best_val = -kInf;
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    vals[i] = objective(grid[i]);
    if (vals[i] > best_val) {
      best_val = vals[i];
      best_idx = i;
    }
  }
  const double lo = grid[best_idx > 0 ? best_idx - 1 : 0];
  const double hi = grid[std::min(best_idx + 1, grid.size() - 1)];
  double arg_s = grid[best_idx];
  if (hi > lo) {
    const auto [gs, gv] =
        golden_max(objective, lo, hi, phi.config().golden_tol);
    if (gv > best_val) {
      best_val = gv;
      arg_s = gs;
    }
  }

  ExponentPoint pt;
  pt.rate = rate;
  pt.value = std::max(best_val, 0.0);  // s = 0 always achieves 0
  pt.arg_s = arg_s;
  pt.arg_p = phi.at(arg_s).arg_p;
  pt.converged = all_converged;
  return pt;
}

std::vector<double> linear_grid(double lo, double hi, double step) {
  std::vector<double> g;
  for (double s = lo; s < hi - 1e-12; s += step) g.push_back(s);
  g.push_back(hi);
  return g;
}

}  // namespace

ExponentPoint random_coding_exponent(const E0Maximizer& phi, double rate) {
  if (rate < 0.0) throw std::invalid_argument("rate must be >= 0");
  return outer_search(phi, rate, linear_grid(0.0, 1.0, phi.config().coarse_step));
}

ExponentPoint random_coding_exponent(const CQChannel& w, double rate,
                                     const OptimizerConfig& opt) {
  const E0Maximizer phi(w, opt);
  return random_coding_exponent(phi, rate);
}

ExponentPoint sphere_packing_exponent(const E0Maximizer& phi, double rate,
                                      double s_max) {
  if (rate < 0.0) throw std::invalid_argument("rate must be >= 0");
  if (!(s_max > 0.0)) throw std::invalid_argument("s_max must be > 0");

  const OptimizerConfig& opt = phi.config();
  const double delta = std::min(opt.slope_delta, 0.5 * s_max);
  const double cap_val = phi.value(s_max) - s_max * rate;
  const double below_val = phi.value(s_max - delta) - (s_max - delta) * rate;
  if ((cap_val - below_val) / delta > opt.tol) {
    ExponentPoint pt;
    pt.rate = rate;
    pt.value = kInf;
    pt.divergent = true;
    pt.s_cap_hit = true;
    pt.arg_s = s_max;
    pt.arg_p = phi.at(s_max).arg_p;
    pt.converged = phi.at(s_max).converged;
    return pt;
  }

  // Linear grid over [0, 1], geometric extension up to the cap.
  std::vector<double> grid = linear_grid(0.0, std::min(1.0, s_max),
                                         opt.coarse_step);
  for (double s = 1.5; s < s_max; s *= 1.5) grid.push_back(s);
  if (grid.back() < s_max) grid.push_back(s_max);
  return outer_search(phi, rate, grid);
}

ExponentPoint sphere_packing_exponent(const CQChannel& w, double rate,
                                      double s_max, const OptimizerConfig& opt) {
  const E0Maximizer phi(w, opt);
  return sphere_packing_exponent(phi, rate, s_max);
}

CQChannel embed_classical(const ClassicalChannel& q) {
  std::vector<Mat> states;
  states.reserve(q.inputs());
  for (Eigen::Index x = 0; x < q.inputs(); ++x) {
    Mat wx = Mat::Zero(q.outputs(), q.outputs());
    for (Eigen::Index y = 0; y < q.outputs(); ++y) {
      wx(y, y) = Cplx(q.rows(x, y), 0.0);
    }
    states.push_back(std::move(wx));
  }
  return CQChannel::from_states(std::move(states));
}

ProbabilityDistribution random_distribution(int n, Rng& rng) {
  Vec w(n);
  for (int i = 0; i < n; ++i) w[i] = -std::log(rng.uniform01());
  w /= w.sum();
  ProbabilityDistribution p;
  p.weights = std::move(w);
  return p;
}

Mat random_density(int d, Rng& rng, int rank) {
  if (rank < 1 || rank > d) throw std::invalid_argument("random_density: bad rank");
  Vec ev = Vec::Zero(d);
  for (int i = 0; i < rank; ++i) ev[i] = -std::log(rng.uniform01());
  ev /= ev.sum();
  std::sort(ev.data(), ev.data() + d, std::greater<double>());
  return from_eigenvalues(ev, random_unitary(d, rng));
}

CQChannel random_channel(int alphabet, int d, Rng& rng,
                         bool allow_rank_deficient) {
  std::vector<Mat> states;
  states.reserve(alphabet);
  for (int x = 0; x < alphabet; ++x) {
    int rank = d;
    if (allow_rank_deficient && d > 1 && rng.uniform01() < 0.5) {
      rank = rng.uniform_int(1, d);
    }
    states.push_back(random_density(d, rng, rank));
  }
  return CQChannel::from_states(std::move(states));
}

}  // namespace cqexp
