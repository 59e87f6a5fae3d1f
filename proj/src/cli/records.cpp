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

#include <regex>
#include <sstream>
#include <stdexcept>

#include "convexq/cli.hpp"
#include "convexq/enumeration.hpp"
#include "convexq/verification.hpp"

namespace convexq::cli {

PolygonRecord make_record(const ChainPolygon& poly) {
    const auto stats = polygon_stats(poly);
    PolygonRecord r;
    r.vertices.assign(poly.vertices().begin(), poly.vertices().end());
    r.k = stats.k;
    r.vertex_count = stats.vertex_count;
    r.interior = stats.interior;
    r.boundary = stats.boundary;
    r.area2 = stats.area2;
    r.u = stats.u;
    r.exponent_doubled = doubled_exponent(c_to_d(polygon_to_composition(poly)));
    return r;
}

ChainPolygon validate_record(const PolygonRecord& record, const TriangleSpec& spec) {
    ChainPolygon poly(spec, record.vertices);
    const auto fresh = make_record(poly);
    auto check = [](const char* field, std::int64_t stored, std::int64_t computed) {
        if (stored != computed) {
            throw std::runtime_error(std::string("record field ") + field + " is " + std::to_string(stored) +
                                     ", recomputed " + std::to_string(computed));
        }
    };
    check("k", record.k, fresh.k);
    check("vCount", record.vertex_count, fresh.vertex_count);
    check("iP", record.interior, fresh.interior);
    check("bP", record.boundary, fresh.boundary);
    check("area2", record.area2, fresh.area2);
    check("u", record.u, fresh.u);
    check("exponentDoubled", record.exponent_doubled, fresh.exponent_doubled);
    return poly;
}

nlohmann::ordered_json to_json(const PolygonRecord& record) {
    nlohmann::ordered_json j;
    auto verts = nlohmann::ordered_json::array();
    for (const auto& v : record.vertices) verts.push_back({v.x, v.y});
    j["vertices"] = std::move(verts);
    j["k"] = record.k;
    j["vCount"] = record.vertex_count;
    j["iP"] = record.interior;
    j["bP"] = record.boundary;
    j["area2"] = record.area2;
    j["u"] = record.u;
    j["exponentDoubled"] = record.exponent_doubled;
    return j;
}

PolygonRecord record_from_json(const nlohmann::json& j) {
    PolygonRecord r;
    for (const auto& v : j.at("vertices")) r.vertices.push_back({v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>()});
    r.k = j.at("k").get<std::int64_t>();
    r.vertex_count = j.at("vCount").get<std::int64_t>();
    r.interior = j.at("iP").get<std::int64_t>();
    r.boundary = j.at("bP").get<std::int64_t>();
    r.area2 = j.at("area2").get<std::int64_t>();
    r.u = j.at("u").get<std::int64_t>();
    r.exponent_doubled = j.at("exponentDoubled").get<std::int64_t>();
    return r;
}

std::string enumeration_json(const TriangleSpec& spec) {
    const auto polygons = enumerate_polygons(spec);
    nlohmann::ordered_json doc;
    doc["i"] = spec.i();
    doc["j"] = spec.j();
    doc["count"] = polygons.size();
    auto list = nlohmann::ordered_json::array();
    for (const auto& p : polygons) list.push_back(to_json(make_record(p)));
    doc["polygons"] = std::move(list);
    return doc.dump(2) + "\n";
}

std::string enumeration_csv(const TriangleSpec& spec) {
    std::ostringstream out;
    out << "k,vCount,iP,bP,area2,u,exponentDoubled,vertices\n";
    for (const auto& p : enumerate_polygons(spec)) {
        const auto r = make_record(p);
        out << r.k << ',' << r.vertex_count << ',' << r.interior << ',' << r.boundary << ',' << r.area2 << ','
            << r.u << ',' << r.exponent_doubled << ",\"[";
        for (std::size_t m = 0; m < r.vertices.size(); ++m) {
            if (m > 0) out << ',';
            out << '[' << r.vertices[m].x << ',' << r.vertices[m].y << ']';
        }
        out << "]\"\n";
    }
    return out.str();
}

Rational parse_fraction(const std::string& text) {
    static const std::regex pattern(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?)");
    std::smatch match;
    if (!std::regex_match(text, match, pattern)) {
        throw std::invalid_argument("malformed fraction '" + text + "', expected p/q");
    }
    const Integer num(match[1].str().front() == '+' ? match[1].str().substr(1) : match[1].str());
    const Integer den(match[2].matched ? match[2].str() : std::string("1"));
    if (den == 0) throw std::invalid_argument("fraction '" + text + "' has a zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace convexq::cli
