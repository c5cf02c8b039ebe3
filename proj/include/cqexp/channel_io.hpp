#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cqexp/channel.hpp"
#include "cqexp/verifier.hpp"

namespace cqexp {

/// Parsed channel file: the channel plus an optional input distribution.
struct ChannelFile {
  CQChannel channel;
  std::optional<ProbabilityDistribution> dist;
};

// Channel file schema (JSON):
//   { "dim": d, "states": [ [[re,im], ... d*d entries row-major], ... ],
//     "dist": [p1, ...] }                             -- optional dist
// or the classical form, auto-embedded as diagonal states:
//   { "classical": { "rows": [[...], ...] }, "dist": [...] }
ChannelFile parse_channel_json(const std::string& text);
ChannelFile load_channel_file(const std::string& path);

/// Canonical writer; parse_channel_json(write_channel_json(w)) reproduces the
/// in-memory values bit for bit.
std::string write_channel_json(const CQChannel& w,
                               const ProbabilityDistribution* dist = nullptr);

// Hermitian matrix files: { "dim": d, "entries": [[re,im], ... row-major] }.
Mat parse_matrix_json(const std::string& text);
Mat load_matrix_file(const std::string& path);
std::string write_matrix_json(const Mat& m);

std::string report_to_json(const InequalityReport& rep);
std::string reports_to_json(const std::vector<InequalityReport>& reports);

/// Stable table formatting: '.' decimal point, no locale, "inf" literal.
std::string format_double(double v);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cqexp
