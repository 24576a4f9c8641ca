#ifndef RANK1LAB_IO_HPP
#define RANK1LAB_IO_HPP

#include <string>
#include <utility>

#include <json.hpp>

#include "rank1lab/origami.hpp"

namespace rank1lab {

// The on-disk origami object, bit-exact: {"n":3,"h":[2,1,3],"v":[3,2,1]}
// with 1-based image arrays. ordered_json keeps the documented key order.
nlohmann::ordered_json origami_to_json(const Origami& o);
Origami origami_from_json(const nlohmann::json& j); // throws ParseError

std::string origami_to_string(const Origami& o);
Origami origami_from_string(const std::string& text);

Origami read_origami_file(const std::string& path);  // throws IoFailure/ParseError
void write_origami_file(const Origami& o, const std::string& path);

// Parses "p/q" (slope numerator/denominator, e.g. "0/1" horizontal,
// "1/0" vertical) into the direction pair (q, p). Throws InvalidDirection
// unless gcd(|p|,|q|) = 1.
std::pair<int, int> parse_direction(const std::string& text);
std::string direction_to_string(int q, int p);

} // namespace rank1lab

#endif
