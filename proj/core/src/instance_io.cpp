#include "dnt/instance_io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "dnt/error.hpp"

namespace dnt {

namespace {

using nlohmann::json;

[[noreturn]] void fail_parse(const std::string& message) {
  throw Error(errc::parse_error, message);
}

void require_known_keys(const json& object, const char* where,
                        std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : object.items()) {
    bool ok = false;
    for (const auto candidate : known)
      if (key == candidate) ok = true;
    if (!ok) fail_parse(std::string("unknown key '") + key + "' in " + where);
  }
}

Frame parse_frame(const json& doc) {
  if (!doc.contains("frame")) fail_parse("missing required key 'frame'");
  const json& frame_json = doc.at("frame");
  if (!frame_json.is_array())
    fail_parse("'frame' must be an array of label strings");
  std::vector<std::string> labels;
  for (const json& entry : frame_json) {
    if (!entry.is_string())
      fail_parse("'frame' must contain only label strings");
    labels.push_back(entry.get<std::string>());
  }
  return Frame(std::move(labels));
}

std::map<SubsetIndex, double> parse_masses(const json& doc,
                                           const Frame& frame) {
  if (!doc.contains("masses")) fail_parse("missing required key 'masses'");
  const json& masses_json = doc.at("masses");
  if (!masses_json.is_object())
    fail_parse("'masses' must be an object of subset-expression keys");
  std::map<SubsetIndex, double> assignments;
  for (const auto& [key, value] : masses_json.items()) {
    if (!value.is_number())
      fail_parse("mass for '" + key + "' must be a number");
    const SubsetIndex subset = frame.parse_subset(key);
    if (assignments.contains(subset))
      fail_parse("duplicate mass entry: '" + key +
                 "' denotes the same subset as an earlier key");
    assignments[subset] = value.get<double>();
  }
  return assignments;
}

double parse_degree(const json& entry, const std::string& what) {
  if (!entry.is_number())
    fail_parse("the degree in " + what + " must be a number");
  return entry.get<double>();
}

NonExclusivity parse_nonexclusivity(const json& doc, const Frame& frame) {
  if (!doc.contains("nonexclusivity")) return NonExclusivity::exclusive(frame);
  const json& ne_json = doc.at("nonexclusivity");
  if (!ne_json.is_object()) fail_parse("'nonexclusivity' must be an object");
  if (!ne_json.contains("strategy"))
    fail_parse("'nonexclusivity' requires a 'strategy' key");
  const json& strategy_json = ne_json.at("strategy");
  if (!strategy_json.is_string())
    fail_parse("'nonexclusivity.strategy' must be a string");
  const auto strategy = strategy_json.get<std::string>();

  if (strategy == "exclusive") {
    require_known_keys(ne_json, "'nonexclusivity'", {"strategy"});
    return NonExclusivity::exclusive(frame);
  }
  if (strategy == "element_derived") {
    require_known_keys(ne_json, "'nonexclusivity'",
                       {"strategy", "element_pairs"});
    if (!ne_json.contains("element_pairs"))
      fail_parse("strategy 'element_derived' requires 'element_pairs'");
    const json& pairs_json = ne_json.at("element_pairs");
    if (!pairs_json.is_array())
      fail_parse("'element_pairs' must be an array of [label, label, degree]");
    std::vector<ElementPairDegree> pairs;
    for (const json& entry : pairs_json) {
      if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() ||
          !entry[1].is_string())
        fail_parse("each element pair must be [label, label, degree]");
      pairs.push_back({entry[0].get<std::string>(),
                       entry[1].get<std::string>(),
                       parse_degree(entry[2], "'element_pairs'")});
    }
    return NonExclusivity::element_derived(frame, pairs);
  }
  if (strategy == "explicit_table") {
    require_known_keys(ne_json, "'nonexclusivity'",
                       {"strategy", "subset_pairs"});
    if (!ne_json.contains("subset_pairs"))
      fail_parse("strategy 'explicit_table' requires 'subset_pairs'");
    const json& pairs_json = ne_json.at("subset_pairs");
    if (!pairs_json.is_array())
      fail_parse("'subset_pairs' must be an array of [subset, subset, degree]");
    std::vector<SubsetPairDegree> entries;
    for (const json& entry : pairs_json) {
      if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() ||
          !entry[1].is_string())
        fail_parse("each subset pair must be "
                   "[subset-expression, subset-expression, degree]");
      entries.push_back({frame.parse_subset(entry[0].get<std::string>()),
                         frame.parse_subset(entry[1].get<std::string>()),
                         parse_degree(entry[2], "'subset_pairs'")});
    }
    return NonExclusivity::explicit_table(frame, entries);
  }
  fail_parse("unknown strategy '" + strategy +
             "'; expected exclusive, element_derived or explicit_table");
}

Instance parse_document(const json& doc) {
  if (!doc.is_object()) fail_parse("an instance file must be a JSON object");
  require_known_keys(doc, "the instance",
                     {"frame", "masses", "nonexclusivity", "classical"});

  Frame frame = parse_frame(doc);
  auto assignments = parse_masses(doc, frame);

  bool classical = false;
  if (doc.contains("classical")) {
    const json& classical_json = doc.at("classical");
    if (!classical_json.is_boolean())
      fail_parse("'classical' must be a boolean");
    classical = classical_json.get<bool>();
  }

  NonExclusivity nonexclusivity = parse_nonexclusivity(doc, frame);
  if (classical &&
      nonexclusivity.strategy() != NonExclusivityStrategy::exclusive)
    fail_parse("a classical instance cannot declare a non-exclusive "
               "strategy; drop 'classical' or use strategy 'exclusive'");

  DNumber dnumber(frame, assignments);
  if (classical) dnumber.as_bpa();  // enforces total mass 1

  return Instance{std::move(dnumber), std::move(nonexclusivity), classical};
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail_parse(std::string("invalid JSON: ") + e.what());
  }
  return parse_document(doc);
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(errc::parse_error,
                path.string() + ": cannot open instance file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace dnt
