/* Copyright 2026 The sizematch Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "sizematch/io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string_view>

namespace sizematch {

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " +
                         message),
      line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits a two-field CSV line. Returns false on anything else.
bool split_pair(std::string_view line, std::string_view& a, std::string_view& b) {
  const auto comma = line.find(',');
  if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
    return false;
  }
  a = trim(line.substr(0, comma));
  b = trim(line.substr(comma + 1));
  return !a.empty() && !b.empty();
}

template <typename F>
void for_each_record(std::istream& in, const std::string& name, F&& handle) {
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    std::string_view a;
    std::string_view b;
    if (!split_pair(text, a, b)) throw ParseError(name, line, "expected two comma-separated fields");
    handle(line, a, b);
  }
}

Real parse_value(std::string_view text, const std::string& name, std::size_t line) {
  try {
    return parse_decimal(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(name, line, e.what());
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return in;
}

}  // namespace

SizePair read_size_pair(std::istream& vertices, std::istream& edges,
                        const std::string& vertices_name, const std::string& edges_name) {
  std::vector<std::string> ids;
  std::vector<Real> values;
  std::map<std::string, VertexIndex, std::less<>> index;
  for_each_record(vertices, vertices_name, [&](std::size_t line, std::string_view id,
                                               std::string_view value) {
    if (index.count(id)) throw ParseError(vertices_name, line, "duplicate vertex id '" + std::string(id) + "'");
    index.emplace(std::string(id), ids.size());
    ids.emplace_back(id);
    values.push_back(parse_value(value, vertices_name, line));
  });
  if (ids.empty()) throw ParseError(vertices_name, 0, "no vertices");

  std::vector<Edge> edge_list;
  for_each_record(edges, edges_name, [&](std::size_t line, std::string_view u, std::string_view v) {
    const auto iu = index.find(u);
    const auto iv = index.find(v);
    if (iu == index.end()) throw ParseError(edges_name, line, "unknown vertex id '" + std::string(u) + "'");
    if (iv == index.end()) throw ParseError(edges_name, line, "unknown vertex id '" + std::string(v) + "'");
    edge_list.emplace_back(iu->second, iv->second);
  });
  return SizePair(std::move(ids), std::move(values), std::move(edge_list));
}

SizePair load_size_pair(const std::string& vertices_path, const std::string& edges_path) {
  std::ifstream vertices = open_input(vertices_path);
  std::ifstream edges = open_input(edges_path);
  return read_size_pair(vertices, edges, vertices_path, edges_path);
}

std::vector<Real> read_vertex_values(std::istream& in, const SizePair& sp, const std::string& name) {
  std::map<std::string, VertexIndex, std::less<>> index;
  for (VertexIndex v = 0; v < sp.size(); ++v) index.emplace(sp.ids()[v], v);
  std::vector<std::optional<Real>> found(sp.size());
  for_each_record(in, name, [&](std::size_t line, std::string_view id, std::string_view value) {
    const auto it = index.find(id);
    if (it == index.end()) throw ParseError(name, line, "unknown vertex id '" + std::string(id) + "'");
    if (found[it->second]) throw ParseError(name, line, "duplicate vertex id '" + std::string(id) + "'");
    found[it->second] = parse_value(value, name, line);
  });
  std::vector<Real> out;
  out.reserve(sp.size());
  for (VertexIndex v = 0; v < sp.size(); ++v) {
    if (!found[v]) throw ParseError(name, 0, "missing value for vertex '" + sp.ids()[v] + "'");
    out.push_back(*found[v]);
  }
  return out;
}

Json number(const Real& value) { return Json(to_double(value)); }

Real real_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) {
    return Real(mpz_class(j.dump(), 10));
  }
  if (j.is_number_float()) {
    try {
      return from_double(j.get<double>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(what, 0, e.what());
    }
  }
  throw ParseError(what, 0, "expected a number");
}

namespace {

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(what, 0, std::string("missing key '") + key + "'");
  }
  return j.at(key);
}

std::vector<Real> real_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what, 0, "expected an array");
  std::vector<Real> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(real_from_json(v, what));
  return out;
}

Json real_array_json(const std::vector<Real>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(number(v));
  return out;
}

Json point_json(const ExtendedPoint& p) {
  switch (p.kind()) {
    case ExtendedPoint::Kind::kInfinity:
      return "inf";
    case ExtendedPoint::Kind::kDiagonal:
      return "diag";
    case ExtendedPoint::Kind::kProper:
      break;
  }
  return Json::array({number(p.x()), number(p.y())});
}

Json cornerpoint_json(const std::optional<Cornerpoint>& p) {
  if (!p) return "diag";
  return Json::array({number(p->x), number(p->y)});
}

}  // namespace

Json to_json(const Diagram& d) {
  Json points = Json::array();
  for (const auto& p : d.points()) {
    points.push_back(Json::array({number(p.x), number(p.y), p.multiplicity}));
  }
  return Json{{"infinity_x", number(d.infinity_x())}, {"points", std::move(points)}};
}

Diagram diagram_from_json(const Json& j) {
  const std::string what = "diagram";
  Real infinity_x = real_from_json(field(j, "infinity_x", what), what);
  const Json& points = field(j, "points", what);
  if (!points.is_array()) throw ParseError(what, 0, "'points' must be an array");
  std::vector<Cornerpoint> out;
  for (const auto& p : points) {
    if (!p.is_array() || p.size() != 3) {
      throw ParseError(what, 0, "each point must be [x, y, multiplicity]");
    }
    if (!p[2].is_number_integer() || p[2].get<long long>() < 1) {
      throw ParseError(what, 0, "multiplicity must be a positive integer");
    }
    out.push_back(Cornerpoint{real_from_json(p[0], what), real_from_json(p[1], what),
                              static_cast<std::size_t>(p[2].get<long long>())});
  }
  try {
    return Diagram(std::move(infinity_x), std::move(out));
  } catch (const InvalidDiagram& e) {
    throw ParseError(what, 0, e.what());
  }
}

Json to_json(const Matching& m) {
  Json pairs = Json::array();
  Json infinity = Json::array();
  for (const auto& pair : m.pairs) {
    if (pair.left.is_infinite()) infinity = Json::array({number(pair.left.x()), number(pair.right.x())});
    pairs.push_back(Json{{"left", point_json(pair.left)}, {"right", point_json(pair.right)}});
  }
  return Json{{"cost", number(m.bottleneck_cost)}, {"infinity", infinity}, {"pairs", pairs}};
}

Matching matching_from_json(const Json& j) {
  const std::string what = "matching";
  Matching m;
  m.bottleneck_cost = real_from_json(field(j, "cost", what), what);
  const Json& infinity = field(j, "infinity", what);
  const Json& pairs = field(j, "pairs", what);
  if (!pairs.is_array()) throw ParseError(what, 0, "'pairs' must be an array");
  auto proper = [&](const Json& p) {
    if (!p.is_array() || p.size() != 2) throw ParseError(what, 0, "point must be [x, y]");
    try {
      return ExtendedPoint::proper(real_from_json(p[0], what), real_from_json(p[1], what));
    } catch (const InvalidDiagram& e) {
      throw ParseError(what, 0, e.what());
    }
  };
  for (const auto& pair : pairs) {
    const Json& l = field(pair, "left", what);
    const Json& r = field(pair, "right", what);
    if (l == "inf" || r == "inf") {
      if (l != "inf" || r != "inf" || !infinity.is_array() || infinity.size() != 2) {
        throw ParseError(what, 0, "points at infinity must be paired with each other");
      }
      m.pairs.push_back({ExtendedPoint::at_infinity(real_from_json(infinity[0], what)),
                         ExtendedPoint::at_infinity(real_from_json(infinity[1], what))});
    } else if (l == "diag" && r == "diag") {
      throw ParseError(what, 0, "a pair needs at least one proper point");
    } else if (l == "diag") {
      const ExtendedPoint q = proper(r);
      m.pairs.push_back({ExtendedPoint::diagonal((q.x() + q.y()) / 2), q});
    } else if (r == "diag") {
      const ExtendedPoint p = proper(l);
      m.pairs.push_back({p, ExtendedPoint::diagonal((p.x() + p.y()) / 2)});
    } else {
      m.pairs.push_back({proper(l), proper(r)});
    }
  }
  return m;
}

Json to_json(const RectField& f) {
  Json ys = Json::array();
  Json values = Json::array();
  for (const auto& col : f.columns()) {
    ys.push_back(real_array_json(col.ys));
    values.push_back(real_array_json(col.values));
  }
  return Json{{"x_breaks", real_array_json(f.x_breaks())},
              {"y_breaks_per_column", ys},
              {"values_per_column", values},
              {"S", number(f.top())},
              {"min_phi", number(f.bottom())}};
}

RectField rect_field_from_json(const Json& j) {
  const std::string what = "field";
  const std::vector<Real> xs = real_array(field(j, "x_breaks", what), what);
  const Json& ys = field(j, "y_breaks_per_column", what);
  const Json& values = field(j, "values_per_column", what);
  if (!ys.is_array() || !values.is_array() || ys.size() != xs.size() || values.size() != xs.size()) {
    throw ParseError(what, 0, "one ordinate list and one value list per column expected");
  }
  std::vector<ColumnProfile> columns;
  for (std::size_t c = 0; c < xs.size(); ++c) {
    columns.push_back({xs[c], real_array(ys[c], what), real_array(values[c], what)});
  }
  try {
    return RectField(real_from_json(field(j, "min_phi", what), what),
                     real_from_json(field(j, "S", what), what), std::move(columns));
  } catch (const std::invalid_argument& e) {
    throw ParseError(what, 0, e.what());
  }
}

Json to_json(const BoundReport& r) {
  Json earlier{{"value", number(r.earlier.value)}, {"witness", nullptr}};
  if (r.earlier.witness) {
    const auto& w = *r.earlier.witness;
    earlier["witness"] = Json{{"x", number(w.x)}, {"y", number(w.y)}, {"xi", number(w.xi)},
                              {"eta", number(w.eta)}};
  }
  Json out{{"d_match", number(r.d_match)},
           {"earlier_bound", earlier},
           {"exact_pseudo_distance", nullptr},
           {"matching", to_json(r.matching)},
           {"chain_holds", r.chain_holds()}};
  if (r.exact_pseudo_distance) {
    out["exact_pseudo_distance"] = number(*r.exact_pseudo_distance);
  } else {
    out["exact_skipped"] = r.exact_skipped_reason;
  }
  return out;
}

Json to_json(const RealizationParams& p) {
  Json slots = Json::array();
  for (const auto& s : p.slots) {
    slots.push_back(Json{{"lower", cornerpoint_json(s.lower)},
                         {"upper", cornerpoint_json(s.upper)},
                         {"center", number(s.center)},
                         {"epsilon", number(s.epsilon)}});
  }
  return Json{{"S", number(p.top)},
              {"min_lower", number(p.min_lower)},
              {"min_upper", number(p.min_upper)},
              {"swapped", p.swapped},
              {"slots", slots}};
}

Json to_json(const RealizationCheck& c) {
  return Json{{"phi_diagram", to_json(c.phi_diagram)},
              {"psi_diagram", to_json(c.psi_diagram)},
              {"phi_round_trip", c.phi_round_trip},
              {"psi_round_trip", c.psi_round_trip},
              {"max_gap", number(c.max_gap)},
              {"max_gap_exact", to_string(c.max_gap)},
              {"tight", c.tight},
              {"refinement_stable", c.refinement_stable},
              {"ok", c.ok()}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in = open_input(path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path, 0, e.what());
  }
}

std::string diagram_csv(const Diagram& d) {
  std::ostringstream out;
  out << "kind,x,y,multiplicity\n";
  out << "inf," << to_double(d.infinity_x()) << ",inf,1\n";
  for (const auto& p : d.points()) {
    out << "proper," << to_double(p.x) << "," << to_double(p.y) << "," << p.multiplicity << "\n";
  }
  return out.str();
}

std::string matching_csv(const Matching& m) {
  std::ostringstream out;
  out << "left_x,left_y,right_x,right_y,cost\n";
  auto coord = [](const ExtendedPoint& p, bool ordinate) -> std::string {
    if (ordinate && p.is_infinite()) return "inf";
    std::ostringstream s;
    s << to_double(ordinate ? p.y() : p.x());
    return s.str();
  };
  for (const auto& pair : m.pairs) {
    out << coord(pair.left, false) << "," << coord(pair.left, true) << ","
        << coord(pair.right, false) << "," << coord(pair.right, true) << ","
        << to_string(pseudo_distance(pair.left, pair.right)) << "\n";
  }
  return out.str();
}

}  // namespace sizematch
