#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strokeforge/ordering.hpp"
#include "strokeforge/retrieval.hpp"
#include "strokeforge/skeleton_graph.hpp"
#include "strokeforge/thinning.hpp"

namespace strokeforge {

/// Malformed JSON or CSV input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"strokes": [[[x, y], ...], ...]}
nlohmann::json to_json(const StrokeSet& set);
StrokeSet stroke_set_from_json(const nlohmann::json& j);

// {"samples": [[x, y], ...], "fallback": bool}
nlohmann::json to_json(const SampledStroke& s);
SampledStroke sampled_stroke_from_json(const nlohmann::json& j);

// {"strokes": [[[x, y], ...], ...], "fallback": [bool, ...]}; "fallback" is
// optional on input so a stroke set reads as an unsampled sequence.
nlohmann::json to_json(const OnlineSequence& seq);
OnlineSequence online_sequence_from_json(const nlohmann::json& j);

// [{"source", "original", "skeleton", "status": "ok"|"skipped", "reason"?}, ...]
nlohmann::json manifest_to_json(const PairManifest& manifest);

// {"map", "accuracy", "soft": {"K": ...}, "evaluated", "skipped"}
nlohmann::json to_json(const RetrievalReport& report);

nlohmann::json parse_json(std::string_view text);

/// Shortest decimal text that parses back to the same double.
std::string format_number(double v);

/// "dx,dy,lift" header then one row per sample.
std::string deltas_to_csv(const DeltaSequence& deltas);
/// Origin is taken as (0, 0); rows are relative to the previous sample.
DeltaSequence deltas_from_csv(std::string_view text);

/// Header-free numeric matrix, one row per line.
std::vector<std::vector<double>> parse_matrix_csv(std::string_view text);
/// One label per non-empty line.
std::vector<std::string> parse_labels(std::string_view text);
/// "query,item" index pairs, one per line.
std::vector<std::pair<std::size_t, std::size_t>> parse_index_pairs(std::string_view text);

}  // namespace strokeforge
