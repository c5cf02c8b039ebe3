#include "cqexp/verifier.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "cqexp/parallel.hpp"

namespace cqexp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Condition-number caps per suite family, calibrated so that double-precision
// noise stays two-plus orders below the 1e-9 slack. Determinant-tight
// log-spectrum comparisons and inverse identities tolerate far less
// conditioning than top-eigenvalue-dominated trace/norm margins.
constexpr double kKappaSpectralLog = 1e3;
constexpr double kKappaTrace = 1e6;

// Singular-input suites run through the epsilon-limit, whose extrapolation
// residual bounds the meaningful resolution; their slack is floored here.
constexpr double kSingularSlackFloor = 1e-6;

// Eigenvalues below this fraction of the largest one count as numerical zeros
// when comparing spectra of epsilon-limit results.
constexpr double kNumericalRankTau = 1e-4;

double rel_margin(double lhs, double rhs) {
  return (rhs - lhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

// Margin of lo <= hi in the Loewner order: min eigenvalue of the gap,
// normalized by its spectral norm.
double loewner_margin(const Mat& lo, const Mat& hi) {
  const EigenSystem es = eigh(hermitian_part(hi - lo));
  if (es.eigenvalues.size() == 0) return 0.0;
  const double norm2 = es.eigenvalues.cwiseAbs().maxCoeff();
  return es.eigenvalues.minCoeff() / std::max(1.0, norm2);
}

// Margin of an equality check: minus the relative Frobenius gap.
double equality_margin(const Mat& x, const Mat& y) {
  return -(x - y).norm() / std::max({1.0, x.norm(), y.norm()});
}

double trace_power(const Mat& psd, double p) {
  const Vec ev = eigh(psd).eigenvalues.cwiseMax(0.0);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] > 0.0) acc += std::pow(ev[i], p);
  }
  return acc;
}

// log Tr[M^p] via logsumexp on the spectrum; -inf for the zero matrix.
double log_trace_power(const Mat& psd, double p) {
  const Vec ev = eigh(psd).eigenvalues.cwiseMax(0.0);
  double mx = -kInf;
  std::vector<double> xs;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] > 0.0) {
      xs.push_back(p * std::log(ev[i]));
      mx = std::max(mx, xs.back());
    }
  }
  if (xs.empty()) return -kInf;
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - mx);
  return mx + std::log(acc);
}

// Real part of Tr[X Y] for PSD X, Y; the imaginary part must be numerical
// noise, enforced by the caller through the returned pair.
std::pair<double, double> product_trace(const Mat& x, const Mat& y) {
  const Cplx tr = (x * y).trace();
  return {tr.real(), std::abs(tr.imag())};
}

Mat maybe_rank_deficient(const Mat& pd, Rng& rng, double prob) {
  const int d = static_cast<int>(pd.rows());
  if (d < 2 || rng.uniform01() >= prob) return pd;
  return rank_deficient(pd, rng.uniform_int(1, d - 1));
}

Vec clamped_spectrum(const Mat& m) {
  return eigh(hermitian_part(m)).eigenvalues.cwiseMax(0.0);
}

// Zero out entries below tau * (largest entry of either spectrum); used when
// one side went through the epsilon-limit and carries extrapolation residue
// where exact zeros belong.
void apply_rank_threshold(Vec& x, Vec& y, double tau) {
  const double top = std::max({x.size() ? x.maxCoeff() : 0.0,
                               y.size() ? y.maxCoeff() : 0.0, 0.0});
  const double cut = tau * top;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] < cut) x[i] = 0.0;
  }
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (y[i] < cut) y[i] = 0.0;
  }
}

// ---- trial bodies -----------------------------------------------------

double trial_logmajor(std::uint64_t stream, const SuiteConfig& cfg) {
  Rng rng(stream);
  const int d = rng.uniform_int(cfg.d_min, cfg.d_max);
  const Mat a = random_pd_cond(d, rng, kKappaSpectralLog);
  const Mat b = random_pd_cond(d, rng, kKappaSpectralLog);
  const double s = rng.uniform(0.0, 1.0);
  const Mat g = weighted_geomean(a, b, s);
  const Mat h = hermitian_part(matrix_power(a, (1.0 - s) / 2.0) *
                               matrix_power(b, s) *
                               matrix_power(a, (1.0 - s) / 2.0));
  return log_majorizes(clamped_spectrum(g), clamped_spectrum(h))
      .normalized_margin();
}

double trial_logmajor_singular(std::uint64_t stream, const SuiteConfig& cfg) {
  Rng rng(stream);
  const int d = rng.uniform_int(std::max(2, cfg.d_min), cfg.d_max);
  const int rank = rng.uniform_int(1, d - 1);
  const Mat u = random_unitary(d, rng);
  Vec ea = Vec::Zero(d), eb = Vec::Zero(d);
  for (int i = 0; i < rank; ++i) {
    ea[i] = rng.uniform(0.05, 1.0);
    eb[i] = rng.uniform(0.05, 1.0);
  }
  const Mat a = from_eigenvalues(ea, u);
  const Mat b = from_eigenvalues(eb, u);
  const double s = rng.uniform(0.05, 0.95);
  const Mat g = weighted_geomean_limit(a, b, s);
  const Mat h = hermitian_part(matrix_power(a, (1.0 - s) / 2.0) *
                               matrix_power(b, s) *
                               matrix_power(a, (1.0 - s) / 2.0));
  Vec lg = clamped_spectrum(g);
  Vec lh = clamped_spectrum(h);
  apply_rank_threshold(lg, lh, kNumericalRankTau);
  return log_majorizes(lg, lh).normalized_margin();
}

double trial_norm_power(std::uint64_t stream, const SuiteConfig& cfg) {
  Rng rng(stream);
  const int d = rng.uniform_int(cfg.d_min, cfg.d_max);
  const Mat a = maybe_rank_deficient(random_pd_cond(d, rng, kKappaTrace), rng, 0.3);
  const Mat b = maybe_rank_deficient(random_pd_cond(d, rng, kKappaTrace), rng, 0.3);
  const Mat bab = hermitian_part(b * a * b);
  double worst = kInf;
  for (double t : {0.3, 0.7, 1.0, 2.0, 5.0}) {
    const Mat at = matrix_power(a, t);
    const Mat bt = matrix_power(b, t);
    const Vec lhs = clamped_spectrum(bt * at * bt);
    const Vec rhs = clamped_spectrum(matrix_power(bab, t));
    double pl = 0.0, pr = 0.0;
    for (int k = 0; k < d; ++k) {
      pl += lhs[k];
      pr += rhs[k];
      const double margin = t <= 1.0 ? rel_margin(pl, pr) : rel_margin(pr, pl);
      worst = std::min(worst, margin);
    }
  }
  return worst;
}

double trial_vector_power(std::uint64_t stream, const SuiteConfig& cfg) {
  Rng rng(stream);
  const int d = rng.uniform_int(cfg.d_min, cfg.d_max);
  Vec x(d), y(d);
  bool valid = false;
  for (int attempt = 0; attempt < 100 && !valid; ++attempt) {
    for (int i = 0; i < d; ++i) y[i] = rng.uniform(0.0, 2.0);
    const Vec ys = decreasing_rearrangement(y);
    for (int i = 0; i < d; ++i) x[i] = ys[i] * rng.uniform(0.0, 1.0);
    valid = weak_majorizes(x, y).holds;
  }
  if (!valid) {
    throw std::runtime_error("vector_power: failed to build a majorized pair");
  }
  double worst = kInf;
  for (double t : {1.0, 1.5, 2.0, 4.0, 10.0}) {
    const Vec xt = x.array().pow(t);
    const Vec yt = y.array().pow(t);
    worst = std::min(worst, weak_majorizes(xt, yt).normalized_margin());
  }
  return worst;
}

double trial_trace_convex(std::uint64_t stream, const SuiteConfig& cfg) {
  Rng rng(stream);
  const int d = rng.uniform_int(cfg.d_min, cfg.d_max);
  const Mat gap =
      maybe_rank_deficient(random_pd_cond(d, rng, kKappaSpectralLog, 0.05, 1.0),
                           rng, 0.3);
  double worst = kInf;
  {
    // Monotone convex f on an arbitrary Hermitian pair A <= A + gap.
    const Mat a = rng.uniform(0.5, 3.0) * random_hermitian(d, rng);
    const Mat b = a + gap;
    const auto fs = {
        std::function<double(double)>([](double t) { return std::exp(t); }),
        std::function<double(double)>(
            [](double t) { return t * std::max(t, 0.0); }),
        std::function<double(double)>([](double t) { return t; })};
    for (const auto& f : fs) {
      worst = std::min(worst, rel_margin(trace_fn(a, f), trace_fn(b, f)));
    }
  }
  {
    // Convex powers t^p, p >= 1, on a PSD-shifted pair.
    const Mat a = random_pd_cond(d, rng, kKappaTrace);
    const Mat b = a + gap;
    const double p = rng.uniform(1.0, 8.0);
    for (double q : {2.0, 4.0, p}) {
      worst = std::min(worst, rel_margin(trace_power(a, q), trace_power(b, q)));
    }
  }
  return worst;
}

double trial_holder(std::uint64_t stream, const SuiteConfig& cfg) {
  Rng rng(stream);
  const int d = rng.uniform_int(cfg.d_min, cfg.d_max);
  const Mat a = maybe_rank_deficient(random_pd_cond(d, rng, kKappaTrace), rng, 0.3);
  const Mat b = maybe_rank_deficient(random_pd_cond(d, rng, kKappaTrace), rng, 0.3);
  const double theta = rng.uniform(0.01, 0.99);
  const auto [tr, imag] = product_trace(a, b);
  if (imag > 1e-10 * std::max(1.0, std::abs(tr))) return -kInf;
  const double lhs = tr > 0.0 ? std::log(tr) : -kInf;
  const double rhs = theta * log_trace_power(a, 1.0 / theta) +
                     (1.0 - theta) * log_trace_power(b, 1.0 / (1.0 - theta));
  if (std::isinf(lhs)) return kInf;  // orthogonal supports: 0 <= anything
  return rel_margin(lhs, rhs);
}

double core_lemma_margin(const Mat& a, const Mat& b, const Mat& geo, double t,
                         double lam) {
  const double lhs = trace_power(geo, t);
  const Mat ap = matrix_power(a, t * (1.0 - lam));
  const Mat bp = matrix_power(b, t * lam);
  const auto [rhs, imag] = product_trace(ap, bp);
  if (imag > 1e-10 * std::max(1.0, std::abs(rhs))) return -kInf;
  return rel_margin(lhs, rhs);
}

double trial_core_lemma(std::uint64_t stream, const SuiteConfig& cfg) {
  Rng rng(stream);
  const int d = rng.uniform_int(cfg.d_min, cfg.d_max);
  const Mat a = random_pd_cond(d, rng, kKappaTrace);
  const Mat b = random_pd_cond(d, rng, kKappaTrace);
  const double t = rng.uniform(1.0, 8.0);
  const double lam = rng.uniform(0.0, 1.0);
  return core_lemma_margin(a, b, weighted_geomean(a, b, lam), t, lam);
}

double trial_core_lemma_singular(std::uint64_t stream, const SuiteConfig& cfg) {
  Rng rng(stream);
  const int d = rng.uniform_int(std::max(2, cfg.d_min), cfg.d_max);
  const Mat a = rank_deficient(random_pd_cond(d, rng, 1e2), rng.uniform_int(1, d - 1));
  const Mat b = rank_deficient(random_pd_cond(d, rng, 1e2), rng.uniform_int(1, d - 1));
  const double t = rng.uniform(1.0, 8.0);
  const double lam = rng.uniform(0.05, 0.95);
  return core_lemma_margin(a, b, weighted_geomean_limit(a, b, lam), t, lam);
}

// -- geometric-mean properties (a)-(h)

double trial_prop_commutativity(std::uint64_t stream, const SuiteConfig& cfg) {
  Rng rng(stream);
  const int d = rng.uniform_int(cfg.d_min, cfg.d_max);
  const Mat u = random_unitary(d, rng);
  Vec ea(d), eb(d);
  for (int i = 0; i < d; ++i) {
    ea[i] = rng.log_uniform(1.0 / kKappaSpectralLog, 1.0);
    eb[i] = rng.log_uniform(1.0 / kKappaSpectralLog, 1.0);
  }
  const double s = rng.uniform(0.0, 1.0);
  const Mat g = weighted_geomean(from_eigenvalues(ea, u), from_eigenvalues(eb, u), s);
  const Vec mixed = ea.array().pow(1.0 - s) * eb.array().pow(s);
  return equality_margin(g, from_eigenvalues(mixed, u));
}

double trial_prop_homogeneity(std::uint64_t stream, const SuiteConfig& cfg) {
  Rng rng(stream);
  const int d = rng.uniform_int(cfg.d_min, cfg.d_max);
  const Mat x = random_pd_cond(d, rng, kKappaSpectralLog);
  const Mat y = random_pd_cond(d, rng, kKappaSpectralLog);
  const double s = rng.uniform(0.0, 1.0);
  const double a = rng.log_uniform(1e-2, 10.0);
  const double b = rng.log_uniform(1e-2, 10.0);
  const Mat lhs = weighted_geomean(a * x, b * y, s);
  const Mat rhs = std::pow(a, 1.0 - s) * std::pow(b, s) * weighted_geomean(x, y, s);
  return equality_margin(lhs, rhs);
}

double trial_prop_monotonicity(std::uint64_t stream, const SuiteConfig& cfg) {
  Rng rng(stream);
  const int d = rng.uniform_int(cfg.d_min, cfg.d_max);
  const Mat a = random_pd_cond(d, rng, kKappaSpectralLog);
  const Mat b = random_pd_cond(d, rng, kKappaSpectralLog);
  const Mat c = a + random_pd_cond(d, rng, kKappaSpectralLog, 0.05, 1.0);
  const Mat e = b + random_pd_cond(d, rng, kKappaSpectralLog, 0.05, 1.0);
  const double s = rng.uniform(0.0, 1.0);
  return loewner_margin(weighted_geomean(a, b, s), weighted_geomean(c, e, s));
}

double trial_prop_congruence(std::uint64_t stream, const SuiteConfig& cfg) {
  Rng rng(stream);
  const int d = rng.uniform_int(cfg.d_min, cfg.d_max);
  const Mat a = random_pd_cond(d, rng, kKappaSpectralLog);
  const Mat b = random_pd_cond(d, rng, kKappaSpectralLog);
  const double s = rng.uniform(0.0, 1.0);
  Mat m;
  do {
    m = random_gaussian(d, rng);
  } while (std::sqrt(std::max(0.0, min_eigenvalue(hermitian_part(m.adjoint() * m)))) < 1e-2);
  const Mat lhs = m * weighted_geomean(a, b, s) * m.adjoint();
  const Mat rhs = weighted_geomean(hermitian_part(m * a * m.adjoint()),
                                   hermitian_part(m * b * m.adjoint()), s);
  return equality_margin(lhs, rhs);
}

double trial_prop_self_duality(std::uint64_t stream, const SuiteConfig& cfg) {
  Rng rng(stream);
  const int d = rng.uniform_int(cfg.d_min, cfg.d_max);
  const Mat a = random_pd_cond(d, rng, kKappaSpectralLog);
  const Mat b = random_pd_cond(d, rng, kKappaSpectralLog);
  const double s = rng.uniform(0.0, 1.0);
  const Mat g = weighted_geomean(a, b, s);
  const double m1 = equality_margin(g, weighted_geomean(b, a, 1.0 - s));
  const double m2 = equality_margin(
      matrix_power(g, -1.0),
      weighted_geomean(matrix_power(a, -1.0), matrix_power(b, -1.0), s));
  return std::min(m1, m2);
}

double trial_prop_concavity(std::uint64_t stream, const SuiteConfig& cfg) {
  Rng rng(stream);
  const int d = rng.uniform_int(cfg.d_min, cfg.d_max);
  const Mat a = random_pd_cond(d, rng, kKappaSpectralLog);
  const Mat b = random_pd_cond(d, rng, kKappaSpectralLog);
  const Mat c = random_pd_cond(d, rng, kKappaSpectralLog);
  const Mat e = random_pd_cond(d, rng, kKappaSpectralLog);
  const double s = rng.uniform(0.0, 1.0);
  const double lam = rng.uniform(0.0, 1.0);
  const Mat lhs = weighted_geomean(lam * a + (1.0 - lam) * b,
                                   lam * c + (1.0 - lam) * e, s);
  const Mat rhs = lam * weighted_geomean(a, c, s) +
                  (1.0 - lam) * weighted_geomean(b, e, s);
  return loewner_margin(rhs, lhs);
}

double trial_prop_hm_gm_am(std::uint64_t stream, const SuiteConfig& cfg) {
  Rng rng(stream);
  const int d = rng.uniform_int(cfg.d_min, cfg.d_max);
  const Mat a = random_pd_cond(d, rng, kKappaSpectralLog);
  const Mat b = random_pd_cond(d, rng, kKappaSpectralLog);
  const double s = rng.uniform(0.0, 1.0);
  const Mat g = weighted_geomean(a, b, s);
  const Mat hm = matrix_power(
      hermitian_part((1.0 - s) * matrix_power(a, -1.0) + s * matrix_power(b, -1.0)),
      -1.0);
  const Mat am = (1.0 - s) * a + s * b;
  return std::min(loewner_margin(hm, g), loewner_margin(g, am));
}

double trial_prop_continuity(std::uint64_t stream, const SuiteConfig& cfg) {
  Rng rng(stream);
  const int d = rng.uniform_int(cfg.d_min, cfg.d_max);
  const Mat a = random_pd_cond(d, rng, kKappaSpectralLog);
  const Mat b = random_pd_cond(d, rng, kKappaSpectralLog);
  const double s = rng.uniform(0.0, 1.0);
  const Mat g = weighted_geomean(a, b, s);
  const Mat eye = Mat::Identity(d, d);
  const GeomeanConfig geo_cfg;
  double prev_err = kInf;
  double worst = kInf;
  for (double eps : geo_cfg.eps_schedule) {
    const double err =
        spectral_norm(weighted_geomean(a + eps * eye, b + eps * eye, s) - g);
    if (std::isfinite(prev_err)) {
      worst = std::min(worst, (prev_err - err) / std::max(1.0, prev_err));
    }
    prev_err = err;
  }
  return worst;
}

// -- proof chain and concavity

double trial_proof_chain(std::uint64_t stream, const SuiteConfig& cfg) {
  Rng rng(stream);
  const int alphabet = rng.uniform_int(1, 5);
  const int d = rng.uniform_int(std::max(2, cfg.d_min), std::min(5, cfg.d_max));

  CQChannel w;
  ProbabilityDistribution p;
  double l = 1.0, r = 1.0;
  Mat a, b;
  bool ok = false;
  for (int attempt = 0; attempt < 100 && !ok; ++attempt) {
    // |X| = 1 forces a full-rank output: the chain needs PD mixtures, and a
    // singleton mixture is the output itself.
    w = random_channel(alphabet, d, rng, alphabet > 1);
    p = random_distribution(alphabet, rng);
    l = rng.uniform(1.0, 8.0);
    r = rng.uniform(l, 8.0);
    a = Mat::Zero(d, d);
    b = Mat::Zero(d, d);
    for (int x = 0; x < alphabet; ++x) {
      a += p.weights[x] * matrix_power(w.states[x], 1.0 / l);
      b += p.weights[x] * matrix_power(w.states[x], 1.0 / r);
    }
    a = hermitian_part(a);
    b = hermitian_part(b);
    ok = is_pd(a, 1e-8) && is_pd(b, 1e-8);
  }
  if (!ok) throw std::runtime_error("proof_chain: could not sample PD mixtures");

  const double theta = rng.uniform(0.02, 0.98);
  const double t = theta * l + (1.0 - theta) * r;
  const double lam = l * theta / t;

  // (i) algebraic identity, exact
  if (std::abs(lam / l + (1.0 - lam) / r - 1.0 / t) > 1e-12) return -kInf;

  Mat st = Mat::Zero(d, d);
  for (int x = 0; x < alphabet; ++x) {
    st += p.weights[x] * matrix_power(w.states[x], 1.0 / t);
  }
  st = hermitian_part(st);

  const Mat g = weighted_geomean(a, b, 1.0 - lam);
  const double m2 = loewner_margin(st, g);                       // (ii)
  const double tr_st = trace_power(st, t);
  const double tr_g = trace_power(g, t);
  const double m3 = rel_margin(tr_st, tr_g);                     // (iii)
  const Mat ap = matrix_power(a, t * lam);
  const Mat bp = matrix_power(b, t * (1.0 - lam));
  const auto [tr_prod, imag] = product_trace(ap, bp);
  if (imag > 1e-10 * std::max(1.0, std::abs(tr_prod))) return -kInf;
  const double m4 = rel_margin(tr_g, tr_prod);                   // (iv)
  const double lhs5 = std::log(tr_prod);
  const double rhs5 = theta * std::log(trace_power(a, l)) +
                      (1.0 - theta) * std::log(trace_power(b, r));
  const double m5 = rel_margin(lhs5, rhs5);                      // (v)
  return std::min({m2, m3, m4, m5});
}

double concavity_margin(std::uint64_t stream, const SuiteConfig& cfg,
                        double s_hi) {
  Rng rng(stream);
  const int alphabet = rng.uniform_int(1, 6);
  const int d = rng.uniform_int(cfg.d_min, cfg.d_max);
  const CQChannel w = random_channel(alphabet, d, rng, true);
  const ProbabilityDistribution p = random_distribution(alphabet, rng);
  const double s1 = rng.uniform(0.0, s_hi);
  const double s2 = rng.uniform(0.0, s_hi);
  const double theta = rng.uniform(0.0, 1.0);
  const double mid = theta * s1 + (1.0 - theta) * s2;
  const double lhs = theta * e0_quantum(w, p, s1) +
                     (1.0 - theta) * e0_quantum(w, p, s2);
  return rel_margin(lhs, e0_quantum(w, p, mid));
}

double trial_concavity(std::uint64_t stream, const SuiteConfig& cfg) {
  return concavity_margin(stream, cfg, 8.0);
}

double trial_concavity_subrange(std::uint64_t stream, const SuiteConfig& cfg) {
  return concavity_margin(stream, cfg, 1.0);
}

// ---- harness ----------------------------------------------------------

using TrialFn = double (*)(std::uint64_t, const SuiteConfig&);

struct SuiteDef {
  const char* name;
  TrialFn trial;
  bool singular;  // slack floored at kSingularSlackFloor
  const char* extra_params;
};

const SuiteDef kSuites[] = {
    {"logmajor", trial_logmajor, false, "kappa<=1e3 s=[0,1]"},
    {"logmajor-singular", trial_logmajor_singular, true,
     "common-support rank-deficient, s=[0.05,0.95], tau=1e-4"},
    {"norm-power", trial_norm_power, false, "kappa<=1e6 t={0.3,0.7,1,2,5}"},
    {"vector-power", trial_vector_power, false, "t={1,1.5,2,4,10}"},
    {"trace-convex", trial_trace_convex, false,
     "f={exp,t relu,t} hermitian; f=t^p p in[1,8] psd"},
    {"holder", trial_holder, false, "kappa<=1e6 theta=[0.01,0.99]"},
    {"core-lemma", trial_core_lemma, false, "kappa<=1e6 t=[1,8] lambda=[0,1]"},
    {"core-lemma-singular", trial_core_lemma_singular, true,
     "rank-deficient pairs, t=[1,8], lambda=[0.05,0.95]"},
    {"geomean-prop-a-commutativity", trial_prop_commutativity, false, "s=[0,1]"},
    {"geomean-prop-b-homogeneity", trial_prop_homogeneity, false,
     "a,b in (0,10] s=[0,1]"},
    {"geomean-prop-c-monotonicity", trial_prop_monotonicity, false, "s=[0,1]"},
    {"geomean-prop-d-congruence", trial_prop_congruence, false, "s=[0,1]"},
    {"geomean-prop-e-self-duality", trial_prop_self_duality, false, "s=[0,1]"},
    {"geomean-prop-f-concavity", trial_prop_concavity, false,
     "s,lambda=[0,1]"},
    {"geomean-prop-g-hm-gm-am", trial_prop_hm_gm_am, false, "s=[0,1]"},
    {"geomean-prop-h-continuity", trial_prop_continuity, false,
     "eps={1e-4,1e-6,1e-8}"},
    {"proof-chain", trial_proof_chain, false,
     "|X|<=5 d<=5 l,r=[1,8] theta=[0.02,0.98]"},
    {"concavity", trial_concavity, false, "|X|<=6 s=[0,8]"},
    {"concavity-fy06", trial_concavity_subrange, false, "|X|<=6 s=[0,1]"},
};

const SuiteDef* find_suite(const std::string& name) {
  for (const SuiteDef& s : kSuites) {
    if (name == s.name) return &s;
  }
  return nullptr;
}

InequalityReport run_suite(const SuiteDef& def, const SuiteConfig& cfg) {
  if (cfg.trials < 1) {
    throw std::invalid_argument("suite needs at least one trial");
  }
  InequalityReport rep;
  rep.suite = def.name;
  rep.trials = cfg.trials;
  rep.seed = cfg.seed;
  rep.slack = def.singular ? std::max(cfg.slack, kSingularSlackFloor) : cfg.slack;
  rep.params["d"] = std::to_string(cfg.d_min) + ".." + std::to_string(cfg.d_max);
  rep.params["sampling"] = def.extra_params;

  std::vector<double> margins(cfg.trials);
  parallel_for(cfg.workers, cfg.trials, [&](int i) {
    margins[i] = def.trial(stream_seed(cfg.seed, i), cfg);
  });

  rep.worst_margin = kInf;
  std::size_t worst_idx = 0;
  for (std::size_t i = 0; i < margins.size(); ++i) {
    if (margins[i] < -rep.slack) ++rep.violations;
    if (margins[i] < rep.worst_margin) {
      rep.worst_margin = margins[i];
      worst_idx = i;
    }
  }
  rep.worst_seed = stream_seed(cfg.seed, worst_idx);
  return rep;
}

InequalityReport run_named(const char* name, const SuiteConfig& cfg) {
  return run_suite(*find_suite(name), cfg);
}

}  // namespace

InequalityReport check_lemma_logmajor(const SuiteConfig& cfg) {
  return run_named("logmajor", cfg);
}
InequalityReport check_lemma_logmajor_singular(const SuiteConfig& cfg) {
  return run_named("logmajor-singular", cfg);
}
InequalityReport check_lemma_norm_power(const SuiteConfig& cfg) {
  return run_named("norm-power", cfg);
}
InequalityReport check_lemma_vector_power(const SuiteConfig& cfg) {
  return run_named("vector-power", cfg);
}
InequalityReport check_lemma_trace_convex(const SuiteConfig& cfg) {
  return run_named("trace-convex", cfg);
}
InequalityReport check_lemma_holder(const SuiteConfig& cfg) {
  return run_named("holder", cfg);
}
InequalityReport check_core_lemma(const SuiteConfig& cfg) {
  return run_named("core-lemma", cfg);
}
InequalityReport check_core_lemma_singular(const SuiteConfig& cfg) {
  return run_named("core-lemma-singular", cfg);
}

std::vector<InequalityReport> check_geomean_properties(const SuiteConfig& cfg) {
  std::vector<InequalityReport> reports;
  for (const SuiteDef& def : kSuites) {
    if (std::string(def.name).rfind("geomean-prop-", 0) == 0) {
      reports.push_back(run_suite(def, cfg));
    }
  }
  return reports;
}

InequalityReport check_proof_chain(const SuiteConfig& cfg) {
  return run_named("proof-chain", cfg);
}
InequalityReport check_concavity_theorem(const SuiteConfig& cfg) {
  return run_named("concavity", cfg);
}
InequalityReport check_concavity_subrange(const SuiteConfig& cfg) {
  return run_named("concavity-fy06", cfg);
}

const std::vector<std::string>& suite_selectors() {
  static const std::vector<std::string> selectors = {
      "all",         "logmajor",      "norm-power", "vector-power",
      "trace-convex", "holder",       "core-lemma", "geomean-props",
      "proof-chain", "concavity"};
  return selectors;
}

std::vector<InequalityReport> run_suites(const std::string& selector,
                                         const SuiteConfig& cfg) {
  const std::map<std::string, std::vector<std::string>> expand = {
      {"logmajor", {"logmajor", "logmajor-singular"}},
      {"norm-power", {"norm-power"}},
      {"vector-power", {"vector-power"}},
      {"trace-convex", {"trace-convex"}},
      {"holder", {"holder"}},
      {"core-lemma", {"core-lemma", "core-lemma-singular"}},
      {"geomean-props",
       {"geomean-prop-a-commutativity", "geomean-prop-b-homogeneity",
        "geomean-prop-c-monotonicity", "geomean-prop-d-congruence",
        "geomean-prop-e-self-duality", "geomean-prop-f-concavity",
        "geomean-prop-g-hm-gm-am", "geomean-prop-h-continuity"}},
      {"proof-chain", {"proof-chain"}},
      {"concavity", {"concavity", "concavity-fy06"}},
  };

  std::vector<std::string> names;
  if (selector == "all") {
    for (const SuiteDef& def : kSuites) names.push_back(def.name);
  } else {
    auto it = expand.find(selector);
    if (it == expand.end()) {
      throw std::invalid_argument("unknown suite selector: " + selector);
    }
    names = it->second;
  }

  std::vector<InequalityReport> reports;
  reports.reserve(names.size());
  for (const std::string& name : names) {
    reports.push_back(run_suite(*find_suite(name), cfg));
  }
  return reports;
}

double replay_trial(const std::string& suite, std::uint64_t stream,
                    const SuiteConfig& cfg) {
  const SuiteDef* def = find_suite(suite);
  if (!def) throw std::invalid_argument("unknown suite: " + suite);
  return def->trial(stream, cfg);
}

}  // namespace cqexp
