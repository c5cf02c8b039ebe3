#include "cqexp/channel_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cqexp {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("channel file: " + what);
}

Vec parse_dist_field(const json& j) {
  if (!j.is_array() || j.empty()) fail("\"dist\" must be a non-empty array");
  Vec w(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) {
      fail("\"dist\"[" + std::to_string(i) + "] is not a number");
    }
    w[i] = j[i].get<double>();
  }
  return w;
}

Mat parse_complex_matrix(const json& j, int d, const std::string& where) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(d) * d) {
    fail(where + " must hold " + std::to_string(d * d) + " [re,im] pairs");
  }
  Mat m(d, d);
  for (int i = 0; i < d * d; ++i) {
    const json& cell = j[i];
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
        !cell[1].is_number()) {
      fail(where + "[" + std::to_string(i) + "] is not an [re,im] pair");
    }
    m(i / d, i % d) = Cplx(cell[0].get<double>(), cell[1].get<double>());
  }
  return m;
}

json complex_matrix_to_json(const Mat& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      entries.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return entries;
}

}  // namespace

ChannelFile parse_channel_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(e.what());
  }
  if (!j.is_object()) fail("top level must be an object");

  ChannelFile out;
  if (j.contains("classical")) {
    const json& c = j["classical"];
    if (!c.is_object() || !c.contains("rows") || !c["rows"].is_array() ||
        c["rows"].empty()) {
      fail("\"classical\" must be an object with a non-empty \"rows\" array");
    }
    const json& rows = c["rows"];
    const std::size_t ny = rows[0].is_array() ? rows[0].size() : 0;
    if (ny == 0) fail("\"classical.rows\"[0] must be a non-empty array");
    Eigen::MatrixXd q(rows.size(), ny);
    for (std::size_t x = 0; x < rows.size(); ++x) {
      if (!rows[x].is_array() || rows[x].size() != ny) {
        fail("\"classical.rows\"[" + std::to_string(x) +
             "] has inconsistent length");
      }
      for (std::size_t y = 0; y < ny; ++y) {
        if (!rows[x][y].is_number()) {
          fail("\"classical.rows\"[" + std::to_string(x) + "][" +
               std::to_string(y) + "] is not a number");
        }
        q(x, y) = rows[x][y].get<double>();
      }
    }
    try {
      out.channel = embed_classical(ClassicalChannel::from_rows(std::move(q)));
    } catch (const std::exception& e) {
      fail(e.what());
    }
  } else {
    if (!j.contains("dim") || !j["dim"].is_number_integer()) {
      fail("missing integer field \"dim\"");
    }
    const int d = j["dim"].get<int>();
    if (d < 1) fail("\"dim\" must be >= 1");
    if (!j.contains("states") || !j["states"].is_array() || j["states"].empty()) {
      fail("missing non-empty array field \"states\"");
    }
    std::vector<Mat> states;
    for (std::size_t x = 0; x < j["states"].size(); ++x) {
      states.push_back(parse_complex_matrix(
          j["states"][x], d, "\"states\"[" + std::to_string(x) + "]"));
    }
    try {
      out.channel = CQChannel::from_states(std::move(states));
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

  if (j.contains("dist")) {
    try {
      out.dist = ProbabilityDistribution::from_weights(parse_dist_field(j["dist"]));
    } catch (const std::exception& e) {
      fail(e.what());
    }
    if (out.dist->size() != out.channel.alphabet_size()) {
      fail("\"dist\" length does not match the channel alphabet");
    }
  }
  return out;
}

ChannelFile load_channel_file(const std::string& path) {
  return parse_channel_json(read_text_file(path));
}

std::string write_channel_json(const CQChannel& w,
                               const ProbabilityDistribution* dist) {
  json j;
  j["dim"] = w.dim();
  json states = json::array();
  for (const Mat& wx : w.states) states.push_back(complex_matrix_to_json(wx));
  j["states"] = states;
  if (dist) {
    json d = json::array();
    for (int i = 0; i < dist->size(); ++i) d.push_back(dist->weights[i]);
    j["dist"] = d;
  }
  return j.dump(2) + "\n";
}

Mat parse_matrix_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
    fail("matrix file needs an integer \"dim\"");
  }
  const int d = j["dim"].get<int>();
  if (d < 1) fail("\"dim\" must be >= 1");
  if (!j.contains("entries")) fail("matrix file needs \"entries\"");
  return parse_complex_matrix(j["entries"], d, "\"entries\"");
}

Mat load_matrix_file(const std::string& path) {
  return parse_matrix_json(read_text_file(path));
}

std::string write_matrix_json(const Mat& m) {
  json j;
  j["dim"] = static_cast<int>(m.rows());
  j["entries"] = complex_matrix_to_json(m);
  return j.dump(2) + "\n";
}

std::string report_to_json(const InequalityReport& rep) {
  json j;
  j["suite"] = rep.suite;
  j["trials"] = rep.trials;
  j["violations"] = rep.violations;
  j["worst_margin"] = rep.worst_margin;
  j["worst_seed"] = rep.worst_seed;
  j["slack"] = rep.slack;
  j["seed"] = rep.seed;
  j["params"] = rep.params;
  return j.dump(2);
}

std::string reports_to_json(const std::vector<InequalityReport>& reports) {
  json arr = json::array();
  for (const InequalityReport& rep : reports) {
    arr.push_back(json::parse(report_to_json(rep)));
  }
  return arr.dump(2) + "\n";
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

}  // namespace cqexp
