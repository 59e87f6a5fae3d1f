/*
   Copyright 2026 The convexq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CONVEXQ_CLI_HPP
#define CONVEXQ_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "convexq/geometry.hpp"
#include "convexq/polyalgebra.hpp"

namespace convexq::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Serialized form of one convex chain and its statistics.
struct PolygonRecord {
    std::vector<LatticePoint> vertices;
    std::int64_t k = 0;
    std::int64_t vertex_count = 0;
    std::int64_t interior = 0;
    std::int64_t boundary = 0;
    std::int64_t area2 = 0;
    std::int64_t u = 0;
    /// 2(1−k) + cross + gcdsum: the doubled q-exponent of the element's term in
    /// the main sum (taken through the bijection with the slope-bounded pairs).
    std::int64_t exponent_doubled = 0;

    friend bool operator==(const PolygonRecord&, const PolygonRecord&) = default;
};

PolygonRecord make_record(const ChainPolygon& poly);

/// Rebuilds the polygon from the record's vertices and recomputes every field;
/// throws std::runtime_error naming the first mismatching field.
ChainPolygon validate_record(const PolygonRecord& record, const TriangleSpec& spec);

nlohmann::ordered_json to_json(const PolygonRecord& record);
PolygonRecord record_from_json(const nlohmann::json& j);

/// Whole-triangle enumeration document: {"i", "j", "count", "polygons": [...]}.
std::string enumeration_json(const TriangleSpec& spec);
/// Header "k,vCount,iP,bP,area2,u,exponentDoubled,vertices" then one row per polygon.
std::string enumeration_csv(const TriangleSpec& spec);

/// Parses "p/q" (or a bare integer) exactly; throws std::invalid_argument on malformed input.
Rational parse_fraction(const std::string& text);

/// SVG figure of one polygon inside its triangle, 32 user units per lattice unit.
std::string render_svg(const ChainPolygon& poly);

/// Entry point shared by the executable and the tests. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace convexq::cli

#endif
