#pragma once

#include "semitoric/fans.hpp"
#include "semitoric/helix.hpp"
#include "semitoric/polygon.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace semitoric {

// JSON documents, all with "format": 1.
//   fan:     {"format":1,"vectors":[[x,y],...]}
//   helix:   {"format":1,"d":n,"c":c,"vectors":[[x,y],...]}
//   polygon: {"format":1,"vertices":[["-7/2","0"],...],"cuts":[{"lambda":"-3/2","eps":1}]}
// Malformed JSON raises ParseError; schema violations raise InvalidInput.
ToricFan fan_from_json(std::string_view text);
SemitoricHelix helix_from_json(std::string_view text);
SemitoricPolygon polygon_from_json(std::string_view text);

std::string to_json(const ToricFan& fan);
std::string to_json(const SemitoricHelix& h);
std::string to_json(const SemitoricPolygon& p);

// "(1,0),(0,1),(-1,-1)" or "[[1,0],[0,1]]" style vector lists.
std::vector<Vec2> parse_vectors(std::string_view text);
// "[[a,b],[c,d]]"
Mat2 parse_matrix(std::string_view text);

std::string render_svg(const ToricFan& fan);
std::string render_svg(const SemitoricHelix& h);
std::string render_svg(const SemitoricPolygon& p);

}  // namespace semitoric
