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

#ifndef SIZEMATCH_IO_HPP_
#define SIZEMATCH_IO_HPP_

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sizematch/bounds.hpp"
#include "sizematch/diagram.hpp"
#include "sizematch/matching.hpp"
#include "sizematch/realize.hpp"
#include "sizematch/size_pair.hpp"

namespace sizematch {

using Json = nlohmann::json;

// Malformed input. `line` is 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Vertex file: `id,value` per line. Edge file: `u,v` per line. Blank lines
// and lines starting with '#' are skipped. Values are read as exact
// decimals. Throws ParseError for malformed lines and unknown ids; graph
// validation errors surface as InvalidSizePair.
SizePair read_size_pair(std::istream& vertices, std::istream& edges,
                        const std::string& vertices_name = "vertices",
                        const std::string& edges_name = "edges");
SizePair load_size_pair(const std::string& vertices_path, const std::string& edges_path);

// Values for the vertices of `sp`, in `id,value` lines; every id must
// appear exactly once.
std::vector<Real> read_vertex_values(std::istream& in, const SizePair& sp,
                                     const std::string& name = "values");

Json to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

// Points are "inf", "diag" or [x, y]. The abscissas at infinity are kept
// under "infinity" and a diagonal endpoint is the projection of its
// partner, so the encoding is lossless.
Json to_json(const Matching& m);
Matching matching_from_json(const Json& j);

Json to_json(const RectField& f);
RectField rect_field_from_json(const Json& j);

Json to_json(const BoundReport& r);
Json to_json(const RealizationParams& p);
Json to_json(const RealizationCheck& c);

Json number(const Real& value);
Real real_from_json(const Json& j, const std::string& what);

Json read_json_file(const std::string& path);

// Data-only tables for plotting.
std::string diagram_csv(const Diagram& d);
std::string matching_csv(const Matching& m);

}  // namespace sizematch

#endif  // SIZEMATCH_IO_HPP_
