#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrcone/conegen.hpp"

namespace lrcone::cli {

enum ExitCode { kOk = 0, kUsage = 1, kConsistency = 2, kDisagreement = 3 };

// Runs one command line; output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// ";" separates factors, "," separates omega-coordinates.
std::vector<Weight> parse_weights(const std::string& text, int rank);
// Rank one: "," separates points; otherwise ";" separates points.
std::vector<Weight> parse_support(const std::string& text, int rank);
// ";" separates words, "," separates 1-based letters; "e" or "" is the identity.
std::vector<std::vector<int>> parse_words(const std::string& text, int rank);
// Comma-separated 1-based simple indices.
std::vector<int> parse_indices(const std::string& text, int rank);

nlohmann::json to_json(const ConeDescription& desc);
std::string render_text(const ConeDescription& desc);
nlohmann::json to_json(const std::vector<Face>& faces, const ConeEngine& engine);
std::string render_text(const std::vector<Face>& faces, const ConeEngine& engine);

}  // namespace lrcone::cli
