#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cqexp/channel_io.hpp"
#include "cqexp/geomean.hpp"
#include "cqexp/parallel.hpp"
#include "cqexp/verifier.hpp"

namespace {

using namespace cqexp;

struct Grid {
  double min = 0.0;
  double max = 0.0;
  double step = 0.0;

  std::vector<double> points() const {
    std::vector<double> pts;
    const int n = static_cast<int>(std::floor((max - min) / step + 1e-9));
    for (int i = 0; i <= n; ++i) pts.push_back(min + i * step);
    return pts;
  }
};

Grid parse_grid(const std::string& text) {
  Grid g;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &g.min, &g.max, &g.step,
                  &extra) != 3) {
    throw std::runtime_error("bad grid '" + text + "', expected min:max:step");
  }
  if (!(g.step > 0.0) || g.max < g.min) {
    throw std::runtime_error("bad grid '" + text +
                             "': need step > 0 and max >= min");
  }
  return g;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_text_file(out_path, content);
  }
}

std::string table_to_csv(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < header.size(); ++i) {
    ss << (i ? "," : "") << header[i];
  }
  ss << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) ss << (i ? "," : "") << row[i];
    ss << "\n";
  }
  return ss.str();
}

std::string table_to_json(const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows) {
  // Values stay formatted strings so csv and json agree exactly.
  std::ostringstream ss;
  ss << "[\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    ss << "  {";
    for (std::size_t i = 0; i < header.size(); ++i) {
      ss << (i ? ", " : "") << '"' << header[i] << "\": \"" << rows[r][i]
         << '"';
    }
    ss << (r + 1 < rows.size() ? "},\n" : "}\n");
  }
  ss << "]\n";
  return ss.str();
}

std::string render_table(const std::string& format,
                         const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  return format == "json" ? table_to_json(header, rows)
                          : table_to_csv(header, rows);
}

ProbabilityDistribution dist_or_uniform(const ChannelFile& cf) {
  return cf.dist ? *cf.dist
                 : ProbabilityDistribution::uniform(cf.channel.alphabet_size());
}

// E0 derivative columns: central differences inside the domain, one-sided
// second-order stencils for s < h so the s = 0 row still gets values.
std::pair<double, double> e0_slope(const CQChannel& w,
                                   const ProbabilityDistribution& p, double s,
                                   double h) {
  if (s >= h) return e0_derivatives(w, p, s, h);
  const double f0 = e0_quantum(w, p, s);
  const double f1 = e0_quantum(w, p, s + h);
  const double f2 = e0_quantum(w, p, s + 2.0 * h);
  return {(-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h),
          (f0 - 2.0 * f1 + f2) / (h * h)};
}

int cmd_e0(const std::string& channel_path, const std::string& s_grid,
           const std::string& out, const std::string& format) {
  const ChannelFile cf = load_channel_file(channel_path);
  const ProbabilityDistribution p = dist_or_uniform(cf);
  const std::vector<double> grid = parse_grid(s_grid).points();

  std::vector<std::vector<std::string>> rows;
  for (double s : grid) {
    const double e0 = e0_quantum(cf.channel, p, s);
    const auto [d1, d2] = e0_slope(cf.channel, p, s, 1e-4);
    rows.push_back({format_double(s), format_double(e0), format_double(d1),
                    format_double(d2)});
  }
  emit(out, render_table(format, {"s", "E0_bits", "dE0_ds", "d2E0_ds2"}, rows));
  return 0;
}

int cmd_exponents(const std::string& channel_path, const std::string& r_grid,
                  double s_max, std::uint64_t seed, int workers,
                  const std::string& out, const std::string& format) {
  const ChannelFile cf = load_channel_file(channel_path);
  OptimizerConfig opt;
  opt.seed = seed;
  const E0Maximizer phi(cf.channel, opt);
  const std::vector<double> grid = parse_grid(r_grid).points();

  std::vector<std::vector<std::string>> rows(grid.size());
  parallel_for(workers, static_cast<int>(grid.size()), [&](int i) {
    const ExponentPoint er = random_coding_exponent(phi, grid[i]);
    const ExponentPoint esp = sphere_packing_exponent(phi, grid[i], s_max);
    rows[i] = {format_double(grid[i]),
               format_double(er.value),
               format_double(er.arg_s),
               esp.divergent ? "inf" : format_double(esp.value),
               format_double(esp.arg_s),
               esp.s_cap_hit ? "1" : "0"};
  });
  emit(out, render_table(format,
                         {"R", "Er_bits", "Er_arg_s", "Esp_bits", "Esp_arg_s",
                          "s_cap_hit"},
                         rows));
  return 0;
}

int cmd_geomean(const std::string& a_path, const std::string& b_path, double s,
                const std::string& out, const std::string& format) {
  const Mat a = load_matrix_file(a_path);
  const Mat b = load_matrix_file(b_path);
  if (!is_psd(a) || !is_psd(b)) {
    throw std::runtime_error("geomean: inputs must be PSD");
  }
  if (a.rows() != b.rows()) {
    throw std::runtime_error("geomean: dimension mismatch");
  }
  // The limit handles singular operands for s in [0,1] and short-circuits to
  // the direct formula when A is positive definite.
  const Mat g = (s < 0.0 || s > 1.0) ? weighted_geomean(a, b, s)
                                     : weighted_geomean_limit(a, b, s);
  const Vec ev = eigh(hermitian_part(g)).eigenvalues;

  std::ostringstream ss;
  if (format == "json") {
    ss << "{\n  \"matrix\": " << write_matrix_json(g) << ",\n  \"eigenvalues\": [";
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      ss << (i ? ", " : "") << format_double(ev[i]);
    }
    ss << "]\n}\n";
  } else {
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      for (Eigen::Index j = 0; j < g.cols(); ++j) {
        ss << (j ? " " : "") << "(" << format_double(g(i, j).real()) << ","
           << format_double(g(i, j).imag()) << ")";
      }
      ss << "\n";
    }
    ss << "eigenvalues:";
    for (Eigen::Index i = 0; i < ev.size(); ++i) ss << " " << format_double(ev[i]);
    ss << "\n";
  }
  emit(out, ss.str());
  return 0;
}

int cmd_verify(const std::string& selector, int trials, std::uint64_t seed,
               int workers, double slack, const std::string& out) {
  SuiteConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.workers = workers;
  cfg.slack = slack;
  const std::vector<InequalityReport> reports = run_suites(selector, cfg);
  emit(out, reports_to_json(reports));
  for (const InequalityReport& rep : reports) {
    if (rep.violations > 0) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"error exponents and operator-inequality checks for "
               "classical and classical-quantum channels"};
  app.require_subcommand(1);

  std::string channel_path, a_path, b_path, out, format = "csv";
  std::string s_grid = "0:2:0.1", r_grid = "0:1:0.1", selector = "all";
  double s = 0.5, s_max = 64.0, slack = 1e-9;
  std::uint64_t seed = 0xC0FFEEULL;
  int trials = 1000, workers = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out, "write output to a file instead of stdout");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* e0 = app.add_subcommand("e0", "E0 curve over an s grid");
  e0->add_option("channel", channel_path, "channel JSON file")->required();
  e0->add_option("--s-grid", s_grid, "s grid as min:max:step");
  add_common(e0);

  CLI::App* exps = app.add_subcommand(
      "exponents", "random-coding and sphere-packing exponents over a rate grid");
  exps->add_option("channel", channel_path, "channel JSON file")->required();
  exps->add_option("--r-grid", r_grid, "rate grid as min:max:step");
  exps->add_option("--s-max", s_max, "cap for the sphere-packing search");
  exps->add_option("--seed", seed, "optimizer seed")->envname("CQEXP_SEED");
  exps->add_option("--workers", workers, "parallel workers")
      ->check(CLI::PositiveNumber);
  add_common(exps);

  CLI::App* geo = app.add_subcommand("geomean", "s-weighted geometric mean");
  geo->add_option("A", a_path, "matrix JSON file")->required();
  geo->add_option("B", b_path, "matrix JSON file")->required();
  geo->add_option("--s", s, "weight")->required();
  add_common(geo);

  CLI::App* verify =
      app.add_subcommand("verify", "randomized operator-inequality suites");
  verify->add_option("--suite", selector, "suite selector")
      ->check(CLI::IsMember(suite_selectors()));
  verify->add_option("--trials", trials, "trials per suite");
  verify->add_option("--seed", seed, "suite seed")->envname("CQEXP_SEED");
  verify->add_option("--workers", workers, "parallel workers")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol-slack", slack, "relative inequality slack");
  verify->add_option("--out", out, "write the JSON report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(e0)) {
      return cmd_e0(channel_path, s_grid, out, format);
    }
    if (app.got_subcommand(exps)) {
      return cmd_exponents(channel_path, r_grid, s_max, seed, workers, out,
                           format);
    }
    if (app.got_subcommand(geo)) {
      return cmd_geomean(a_path, b_path, s, out, format);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(selector, trials, seed, workers, slack, out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
