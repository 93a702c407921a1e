#include "dint/rep_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace dint {

namespace {

Rational parse_num(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational literal: " + j.get<std::string>());
    }
  }
  throw std::invalid_argument("endpoint must be an integer or \"p/q\" string");
}

std::string num_str(const Rational& r) {
  return r.str();  // lowest terms; integers print without a denominator
}

}  // namespace

DIntervalRep parse_representation(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("representation is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("d") || !j.contains("vertices"))
    throw std::invalid_argument("representation needs \"d\" and \"vertices\" keys");
  DIntervalRep rep;
  rep.d = j.at("d").get<int>();
  const auto& verts = j.at("vertices");
  if (!verts.is_object()) throw std::invalid_argument("\"vertices\" must be an object");
  for (const auto& [key, arr] : verts.items()) {
    int v;
    try {
      size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw std::invalid_argument("vertex key is not an integer: " + key);
    }
    if (!arr.is_array()) throw std::invalid_argument("intervals of vertex " + key + " not an array");
    std::vector<Interval> parts;
    for (const auto& pair : arr) {
      if (!pair.is_array() || pair.size() != 2)
        throw std::invalid_argument("interval of vertex " + key + " is not a [l, r] pair");
      parts.emplace_back(parse_num(pair[0]), parse_num(pair[1]));
    }
    rep.parts[v] = std::move(parts);
  }
  rep.check_invariants();
  return rep;
}

std::string write_representation(const DIntervalRep& rep) {
  nlohmann::ordered_json verts = nlohmann::ordered_json::object();
  for (const auto& [v, parts] : rep.parts) {  // std::map: ascending id order
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& iv : parts) arr.push_back({num_str(iv.lo), num_str(iv.hi)});
    verts[std::to_string(v)] = std::move(arr);
  }
  nlohmann::ordered_json j;
  j["d"] = rep.d;
  j["vertices"] = std::move(verts);
  return j.dump(2) + "\n";
}

}  // namespace dint
