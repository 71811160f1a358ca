#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kneserlab/bounds.hpp"
#include "kneserlab/family.hpp"
#include "kneserlab/lowint.hpp"
#include "kneserlab/search.hpp"

namespace kneserlab {

using Json = nlohmann::json;

/// {"n":..,"k":..,"sets":[[..],..],"meta":{..}?} with sets in lexicographic
/// order. Writing is canonical (compact, sorted keys, trailing newline), so
/// write(read(x)) == x for canonical input.
inline Json family_to_json(const Family& f, const Json& meta = Json()) {
  Json j;
  j["n"] = f.params().n;
  j["k"] = f.params().k;
  Json sets = Json::array();
  for (const auto& m : f.members()) sets.push_back(m.elements());
  j["sets"] = std::move(sets);
  if (!meta.is_null()) j["meta"] = meta;
  return j;
}

struct FamilyFile {
  Family family;
  Json meta;
};

inline FamilyFile family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("sets")) {
    throw DomainError("family JSON: object with n, k, sets required");
  }
  Params p{j.at("n").get<int>(), j.at("k").get<int>()};
  p.validate();
  std::vector<KSet> sets;
  for (const auto& arr : j.at("sets")) {
    std::vector<int> elems;
    for (const auto& e : arr) elems.push_back(e.get<int>());
    sets.push_back(KSet::of(elems, p));
  }
  FamilyFile out{Family::of(p, std::move(sets)), Json()};
  if (j.contains("meta")) out.meta = j.at("meta");
  if (out.family.size() != static_cast<std::int64_t>(j.at("sets").size())) {
    throw DomainError("family JSON: duplicate or non-k-uniform sets");
  }
  return out;
}

inline std::string family_to_string(const Family& f, const Json& meta = Json()) {
  return family_to_json(f, meta).dump() + "\n";
}

inline void write_family(const Family& f, const std::string& path, const Json& meta = Json()) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ResourceError("write_family: cannot open " + path);
  out << family_to_string(f, meta);
}

inline FamilyFile read_family(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("read_family: cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("read_family: invalid JSON: ") + e.what());
  }
  return family_from_json(j);
}

inline const char* kReportCsvHeader = "name,n,k,params,lhs,rhs,slack,hypotheses_met,assertable";

inline std::string report_to_csv_row(const BoundReport& r) {
  std::ostringstream out;
  out << r.name << ',' << r.params.n << ',' << r.params.k << ',' << r.extra << ','
      << to_string(r.lhs) << ',' << to_string(r.rhs) << ',' << to_string(r.slack()) << ','
      << (r.hypotheses_met ? "true" : "false") << ',' << (r.assertable ? "true" : "false");
  return out.str();
}

inline std::string reports_to_csv(const std::vector<BoundReport>& reports) {
  std::ostringstream out;
  out << kReportCsvHeader << '\n';
  for (const auto& r : reports) out << report_to_csv_row(r) << '\n';
  return out.str();
}

/// Values that can exceed 64 bits travel as decimal strings.
inline Json report_to_json(const BoundReport& r) {
  Json j;
  j["name"] = r.name;
  j["n"] = r.params.n;
  j["k"] = r.params.k;
  j["params"] = r.extra;
  j["lhs"] = to_string(r.lhs);
  j["rhs"] = to_string(r.rhs);
  j["slack"] = to_string(r.slack());
  j["hypotheses_met"] = r.hypotheses_met;
  j["assertable"] = r.assertable;
  j["note"] = r.note;
  return j;
}

inline Json reports_to_json(const std::vector<BoundReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr;
}

inline Json search_result_to_json(const SearchResult& r, std::int64_t m, const Params& p,
                                  const std::string& objective) {
  Json j;
  j["m"] = m;
  j["n"] = p.n;
  j["k"] = p.k;
  j["objective"] = objective;
  j["optimum"] = r.optimum;
  Json witness = Json::array();
  for (const auto& s : r.witness.members()) witness.push_back(s.elements());
  j["witness"] = std::move(witness);
  j["nodes"] = r.nodes;
  j["proven_optimal"] = r.proven_optimal;
  return j;
}

inline Json spread_to_json(const SpreadFamily& s) {
  Json meta;
  meta["mode"] = s.meta.mode;
  meta["seed"] = s.meta.seed;
  if (s.meta.q > 0) {
    meta["q"] = s.meta.q;
  } else {
    meta["q"] = nullptr;
  }
  if (s.meta.poly_degree >= 0) {
    meta["d"] = s.meta.poly_degree;
  } else {
    meta["d"] = nullptr;
  }
  meta["spread"] = s.spread;
  return family_to_json(s.family, meta);
}

}  // namespace kneserlab
