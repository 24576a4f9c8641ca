#include "rank1lab/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "rank1lab/errors.hpp"

namespace rank1lab {

nlohmann::ordered_json origami_to_json(const Origami& o) {
  nlohmann::ordered_json j;
  j["n"] = o.n;
  j["h"] = o.h.to_one_based();
  j["v"] = o.v.to_one_based();
  return j;
}

Origami origami_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("h") || !j.contains("v"))
    throw ParseError("origami object must have keys n, h, v");
  if (!j["n"].is_number_integer())
    throw ParseError("origami field n must be an integer");
  int n = j["n"].get<int>();
  auto read_perm = [&](const char* key) {
    const auto& arr = j[key];
    if (!arr.is_array())
      throw ParseError(std::string("origami field ") + key + " must be an array");
    std::vector<int> img;
    img.reserve(arr.size());
    for (const auto& e : arr) {
      if (!e.is_number_integer())
        throw ParseError(std::string("origami field ") + key + " must hold integers");
      img.push_back(e.get<int>());
    }
    if (static_cast<int>(img.size()) != n)
      throw ParseError(std::string("origami field ") + key + " has wrong length");
    try {
      return Perm::from_one_based(img);
    } catch (const BadPermutation& e) {
      throw ParseError(std::string("origami field ") + key + ": " + e.what());
    }
  };
  Perm h = read_perm("h");
  Perm v = read_perm("v");
  try {
    validate(n, h, v);
  } catch (const Error& e) {
    throw ParseError(std::string("invalid origami: ") + e.what());
  }
  return Origami{n, h, v};
}

std::string origami_to_string(const Origami& o) {
  return origami_to_json(o).dump();
}

Origami origami_from_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  return origami_from_json(j);
}

Origami read_origami_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoFailure("read error on " + path);
  return origami_from_string(buf.str());
}

void write_origami_file(const Origami& o, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  out << origami_to_string(o) << "\n";
  if (!out) throw IoFailure("write error on " + path);
}

std::pair<int, int> parse_direction(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos)
    throw InvalidDirection("direction must look like p/q, got " + text);
  int p = 0;
  int q = 0;
  try {
    std::size_t used = 0;
    p = std::stoi(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("trailing junk");
    std::string den = text.substr(slash + 1);
    q = std::stoi(den, &used);
    if (used != den.size()) throw std::invalid_argument("trailing junk");
  } catch (const std::exception&) {
    throw InvalidDirection("direction must be integer p/q, got " + text);
  }
  if (p == 0 && q == 0) throw InvalidDirection("direction 0/0 is not a direction");
  if (std::gcd(std::abs(p), std::abs(q)) != 1)
    throw InvalidDirection("direction must be in lowest terms: " + text);
  return {q, p};
}

std::string direction_to_string(int q, int p) {
  return std::to_string(p) + "/" + std::to_string(q);
}

} // namespace rank1lab
