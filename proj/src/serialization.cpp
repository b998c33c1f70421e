#include "strokeforge/serialization.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace strokeforge {

using nlohmann::json;

namespace {

json points_to_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (Point p : pts) arr.push_back(json::array({p.x, p.y}));
  return arr;
}

std::vector<Point> points_from_json(const json& arr) {
  if (!arr.is_array()) throw FormatError("expected an array of [x, y] points");
  std::vector<Point> pts;
  pts.reserve(arr.size());
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      throw FormatError("point must be a [x, y] number pair");
    pts.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return pts;
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string_view::npos) lines.pop_back();
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto comma = line.find(',');
    fields.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return fields;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view field, std::size_t line_no) {
  field = trim(field);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
    throw FormatError("line " + std::to_string(line_no) + ": not a number: '" + std::string(field) + "'");
  return v;
}

std::size_t parse_index(std::string_view field, std::size_t line_no) {
  field = trim(field);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
    throw FormatError("line " + std::to_string(line_no) + ": not an index: '" + std::string(field) + "'");
  return v;
}

}  // namespace

json to_json(const StrokeSet& set) {
  json strokes = json::array();
  for (const auto& s : set.strokes) strokes.push_back(points_to_json(s.points));
  return json{{"strokes", std::move(strokes)}};
}

StrokeSet stroke_set_from_json(const json& j) {
  StrokeSet set;
  const json& strokes = member(j, "strokes");
  if (!strokes.is_array()) throw FormatError("\"strokes\" must be an array");
  for (const auto& s : strokes) {
    Stroke stroke{points_from_json(s)};
    if (stroke.points.empty()) throw FormatError("empty stroke");
    set.strokes.push_back(std::move(stroke));
  }
  return set;
}

json to_json(const SampledStroke& s) { return json{{"samples", points_to_json(s.samples)}, {"fallback", s.fallback}}; }

SampledStroke sampled_stroke_from_json(const json& j) {
  SampledStroke s;
  s.samples = points_from_json(member(j, "samples"));
  if (j.contains("fallback")) s.fallback = j.at("fallback").get<bool>();
  return s;
}

json to_json(const OnlineSequence& seq) {
  json strokes = json::array();
  json flags = json::array();
  for (const auto& s : seq.strokes) {
    strokes.push_back(points_to_json(s.samples));
    flags.push_back(s.fallback);
  }
  return json{{"strokes", std::move(strokes)}, {"fallback", std::move(flags)}};
}

OnlineSequence online_sequence_from_json(const json& j) {
  OnlineSequence seq;
  const json& strokes = member(j, "strokes");
  if (!strokes.is_array()) throw FormatError("\"strokes\" must be an array");
  for (const auto& s : strokes) {
    SampledStroke stroke{points_from_json(s), false};
    if (stroke.samples.empty()) throw FormatError("empty stroke");
    seq.strokes.push_back(std::move(stroke));
  }
  if (j.contains("fallback")) {
    const json& flags = j.at("fallback");
    if (!flags.is_array() || flags.size() != seq.strokes.size())
      throw FormatError("\"fallback\" must hold one flag per stroke");
    for (std::size_t i = 0; i < flags.size(); ++i) seq.strokes[i].fallback = flags[i].get<bool>();
  }
  return seq;
}

json manifest_to_json(const PairManifest& manifest) {
  json arr = json::array();
  for (const auto& e : manifest.entries) {
    json item{{"source", e.source},
              {"original", e.original},
              {"skeleton", e.skeleton ? json(*e.skeleton) : json(nullptr)},
              {"status", e.ok ? "ok" : "skipped"}};
    if (!e.ok) item["reason"] = e.reason;
    arr.push_back(std::move(item));
  }
  return arr;
}

json to_json(const RetrievalReport& report) {
  json soft = json::object();
  for (auto [k, v] : report.soft) soft[std::to_string(k)] = v;
  return json{{"map", report.map},
              {"accuracy", report.accuracy},
              {"soft", std::move(soft)},
              {"evaluated", report.evaluated},
              {"skipped", report.skipped}};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string deltas_to_csv(const DeltaSequence& deltas) {
  std::string out = "dx,dy,lift\n";
  for (const auto& t : deltas.triplets) {
    out += format_number(t.dx);
    out += ',';
    out += format_number(t.dy);
    out += t.pen_lift ? ",1\n" : ",0\n";
  }
  return out;
}

DeltaSequence deltas_from_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || trim(lines.front()) != "dx,dy,lift") throw FormatError("missing \"dx,dy,lift\" header");
  DeltaSequence out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 3) throw FormatError("line " + std::to_string(i + 1) + ": expected dx,dy,lift");
    const std::string_view lift = trim(fields[2]);
    if (lift != "0" && lift != "1") throw FormatError("line " + std::to_string(i + 1) + ": lift must be 0 or 1");
    out.triplets.push_back({parse_double(fields[0], i + 1), parse_double(fields[1], i + 1), lift == "1"});
  }
  return out;
}

std::vector<std::vector<double>> parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::vector<double> row;
    for (auto field : split_fields(lines[i])) row.push_back(parse_double(field, i + 1));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> parse_labels(std::string_view text) {
  std::vector<std::string> labels;
  for (auto line : split_lines(text)) {
    const auto label = trim(line);
    if (label.empty()) throw FormatError("empty label line");
    labels.emplace_back(label);
  }
  return labels;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_index_pairs(std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 2) throw FormatError("line " + std::to_string(i + 1) + ": expected query,item");
    pairs.emplace_back(parse_index(fields[0], i + 1), parse_index(fields[1], i + 1));
  }
  return pairs;
}

}  // namespace strokeforge
