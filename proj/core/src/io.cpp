#include "ifd/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ifd/error.hpp"
#include "json.hpp"

namespace ifd::io {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void require_keys(const json& object, const std::set<std::string>& allowed, std::string_view where) {
  if (!object.is_object()) {
    throw Error(ErrorCode::MalformedInput, std::string(where) + " must be a JSON object");
  }
  for (const auto& item : object.items()) {
    if (!allowed.contains(item.key())) {
      throw Error(ErrorCode::MalformedInput,
                  "unknown key '" + item.key() + "' in " + std::string(where));
    }
  }
  for (const auto& key : allowed) {
    if (!object.contains(key)) {
      throw Error(ErrorCode::MalformedInput, std::string(where) + " is missing '" + key + "'");
    }
  }
}

std::vector<std::string> string_array(const json& value, std::string_view where) {
  if (!value.is_array()) {
    throw Error(ErrorCode::MalformedInput, std::string(where) + " must be an array of strings");
  }
  std::vector<std::string> out;
  for (const auto& v : value) {
    if (!v.is_string()) {
      throw Error(ErrorCode::MalformedInput, std::string(where) + " must contain only strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

MassFunction parse_mass_json(std::string_view text, double tolerance) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  require_keys(doc, {"frame", "focal"}, "mass-function document");
  Frame frame(string_array(doc["frame"], "'frame'"));

  const json& focal = doc["focal"];
  if (!focal.is_array()) throw Error(ErrorCode::MalformedInput, "'focal' must be an array");
  std::vector<FocalElement> assignments;
  for (const auto& entry : focal) {
    require_keys(entry, {"elements", "mass"}, "focal entry");
    if (!entry["mass"].is_number()) {
      throw Error(ErrorCode::MalformedInput, "focal 'mass' must be a number");
    }
    const auto labels = string_array(entry["elements"], "focal 'elements'");
    assignments.push_back({subset_from_labels(frame, labels), entry["mass"].get<double>()});
  }
  return mass_from_assignments(std::move(frame), assignments, tolerance);
}

MassFunction read_mass_json(const std::filesystem::path& path, double tolerance) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_mass_json(buffer.str(), tolerance);
}

std::string mass_to_json(const MassFunction& mass) {
  ordered_json doc;
  doc["frame"] = mass.frame().labels();
  doc["focal"] = ordered_json::array();
  for (const auto& f : mass.focal()) {
    doc["focal"].push_back({{"elements", subset_labels(mass.frame(), f.subset)}, {"mass", f.mass}});
  }
  return doc.dump();
}

std::string report_to_json(const DimensionReport& report) {
  ordered_json j;
  j["entropy_bits"] = report.entropy;
  j["split_scale_bits"] = report.split_scale;
  j["dimension"] = report.dimension;
  j["degenerate"] = report.degenerate;
  return j.dump();
}

DimensionReport report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  require_keys(j, {"entropy_bits", "split_scale_bits", "dimension", "degenerate"}, "report");
  try {
    return DimensionReport{j["entropy_bits"].get<double>(), j["split_scale_bits"].get<double>(),
                           j["dimension"].get<double>(), j["degenerate"].get<bool>()};
  } catch (const json::type_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("report field has wrong type: ") + e.what());
  }
}

}  // namespace ifd::io
