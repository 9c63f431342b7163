// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON reading and writing for polymatroids, rank tables, hypergraphs,
// polynomials and coefficient reports.

#ifndef POLYTUTTE_IO_HPP
#define POLYTUTTE_IO_HPP

#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "polytutte/bipoly.hpp"
#include "polytutte/formulas.hpp"
#include "polytutte/hypergraph.hpp"
#include "polytutte/polymatroid.hpp"

namespace polytutte::io {

using Json = nlohmann::json;

enum class InputKind { kAuto, kBases, kRank, kHypergraph };

inline InputKind parse_input_kind(std::string_view s) {
  if (s == "auto") return InputKind::kAuto;
  if (s == "bases" || s == "polymatroid") return InputKind::kBases;
  if (s == "rank") return InputKind::kRank;
  if (s == "hypergraph") return InputKind::kHypergraph;
  throw Error(ErrorKind::kInvalidArgument, "unknown input kind '" + std::string(s) + "'");
}

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

namespace detail {

template <typename T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::kParse, std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("field '") + key + "': " + e.what());
  }
}

inline std::string vertex_name(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error(ErrorKind::kParse, "vertex names must be strings or integers");
}

}  // namespace detail

inline InputKind detect_kind(const Json& j) {
  if (j.is_object()) {
    if (j.contains("bases")) return InputKind::kBases;
    if (j.contains("f")) return InputKind::kRank;
    if (j.contains("hyperedges") || j.contains("edges")) return InputKind::kHypergraph;
  }
  throw Error(ErrorKind::kParse, "input is not a polymatroid, rank table or hypergraph");
}

inline Polymatroid polymatroid_from_json(const Json& j) {
  const int n = detail::get<int>(j, "n");
  auto bases = detail::get<std::vector<Vec>>(j, "bases");
  for (const Vec& a : bases) {
    if (static_cast<int>(a.size()) != n) {
      throw Error(ErrorKind::kParse, "basis " + vec_text(a) + " does not have n entries");
    }
  }
  return validate_basis_set(n, std::move(bases));
}

inline RankTable rank_table_from_json(const Json& j) {
  const int n = detail::get<int>(j, "n");
  return validate_rank_table(n, detail::get<std::vector<Coord>>(j, "f"));
}

inline Hypergraph hypergraph_from_json(const Json& j) {
  if (j.contains("hyperedges")) {
    std::vector<std::string> vertices;
    for (const Json& v : detail::get<Json>(j, "vertices")) {
      vertices.push_back(detail::vertex_name(v));
    }
    std::vector<std::vector<std::string>> edges;
    for (const Json& e : detail::get<Json>(j, "hyperedges")) {
      std::vector<std::string> edge;
      for (const Json& v : e) edge.push_back(detail::vertex_name(v));
      edges.push_back(std::move(edge));
    }
    return Hypergraph::from_names(std::move(vertices), edges);
  }
  std::vector<std::string> edge_names;
  for (const Json& e : detail::get<Json>(j, "E")) edge_names.push_back(detail::vertex_name(e));
  std::vector<std::string> vertices;
  for (const Json& v : detail::get<Json>(j, "V")) vertices.push_back(detail::vertex_name(v));
  std::vector<std::vector<std::string>> edges(edge_names.size());
  for (const Json& pair : detail::get<Json>(j, "edges")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(ErrorKind::kParse, "bipartite edges must be [hyperedge, vertex] pairs");
    }
    const std::string e = detail::vertex_name(pair[0]);
    const auto it = std::find(edge_names.begin(), edge_names.end(), e);
    if (it == edge_names.end()) {
      throw Error(ErrorKind::kParse, "unknown hyperedge '" + e + "'");
    }
    edges[static_cast<std::size_t>(it - edge_names.begin())].push_back(
        detail::vertex_name(pair[1]));
  }
  return Hypergraph::from_names(std::move(vertices), edges);
}

// A parsed polymatroid input together with the representation it came from.
struct LoadedInput {
  InputKind kind = InputKind::kBases;
  RankTable rank;
  Polymatroid polymatroid;
  std::optional<Hypergraph> hypergraph;
};

inline LoadedInput load_input(const Json& j, InputKind as = InputKind::kAuto,
                              std::size_t max_bases = kDefaultMaxBases) {
  const InputKind kind = as == InputKind::kAuto ? detect_kind(j) : as;
  switch (kind) {
    case InputKind::kBases: {
      Polymatroid p = polymatroid_from_json(j);
      RankTable f = rank_from_bases(p);
      return {kind, std::move(f), std::move(p), std::nullopt};
    }
    case InputKind::kRank: {
      RankTable f = rank_table_from_json(j);
      Polymatroid p = enumerate_bases(f, max_bases);
      return {kind, std::move(f), std::move(p), std::nullopt};
    }
    case InputKind::kHypergraph: {
      Hypergraph h = hypergraph_from_json(j);
      auto [f, p] = hypertree_polymatroid(h, max_bases);
      return {kind, std::move(f), std::move(p), std::move(h)};
    }
    case InputKind::kAuto: break;
  }
  throw Error(ErrorKind::kParse, "unresolved input kind");
}

inline Json to_json(const Polymatroid& p) {
  return Json{{"n", p.ground_size()}, {"bases", p.bases()}};
}

inline Json to_json(const RankTable& f) {
  return Json{{"n", f.ground_size()}, {"f", f.values()}};
}

inline Json to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (const auto& e : h.hyperedges()) {
    Json edge = Json::array();
    for (int v : e) edge.push_back(h.vertices()[v]);
    edges.push_back(std::move(edge));
  }
  return Json{{"vertices", h.vertices()}, {"hyperedges", std::move(edges)}};
}

// Array of [i, j, "coeff"] triples in canonical order.
inline Json to_json(const BiPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e.x, e.y, c.str()}));
  return out;
}

inline BiPoly bipoly_from_json(const Json& j) {
  if (j.is_string()) return parse_bipoly(j.get<std::string>());
  if (!j.is_array()) throw Error(ErrorKind::kParse, "polynomial must be a string or array");
  BiPoly p;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
        !t[1].is_number_integer()) {
      throw Error(ErrorKind::kParse, "polynomial terms must be [i, j, coeff]");
    }
    Integer c;
    try {
      c = t[2].is_string() ? Integer(t[2].get<std::string>()) : Integer(t[2].get<long long>());
    } catch (const std::exception& e) {
      throw Error(ErrorKind::kParse, std::string("bad coefficient: ") + e.what());
    }
    p.add_term({t[0].get<int>(), t[1].get<int>()}, c);
  }
  return p;
}

// Search targets: an array of polynomials, or {"targets": [...]} where each
// entry is a polynomial or {"name": ..., "tutte": polynomial}.
struct NamedTarget {
  std::string name;
  BiPoly tutte;
};

inline std::vector<NamedTarget> targets_from_json(const Json& j) {
  const Json& list = j.is_object() ? j.at("targets") : j;
  if (!list.is_array()) throw Error(ErrorKind::kParse, "targets must be an array");
  std::vector<NamedTarget> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const Json& t = list[k];
    if (t.is_object()) {
      out.push_back({t.value("name", "target" + std::to_string(k + 1)),
                     bipoly_from_json(detail::get<Json>(t, "tutte"))});
    } else {
      out.push_back({"target" + std::to_string(k + 1), bipoly_from_json(t)});
    }
  }
  return out;
}

// Integers that fit in 64 bits are written as JSON numbers, others as strings.
inline Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

inline Json to_json(const CoefficientReport& report) {
  Json out = Json::array();
  for (const auto& row : report) {
    out.push_back({{"formula", row.formula},
                   {"predicted", integer_json(row.predicted)},
                   {"extracted", integer_json(row.extracted)},
                   {"match", row.match}});
  }
  return out;
}

}  // namespace polytutte::io

#endif  // POLYTUTTE_IO_HPP
