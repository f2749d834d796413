#include "digigap/voxel_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "digigap/errors.hpp"

namespace digigap {
namespace {

Coord parse_coord(std::string_view token, std::size_t line) {
  Coord value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, "not an integer: '" + std::string(token) + "'");
  }
  return value;
}

DigitalObject build(std::size_t n, std::vector<Point> voxels, DuplicatePolicy policy,
                    std::size_t line_hint) {
  try {
    return DigitalObject(n, std::move(voxels), policy);
  } catch (const DuplicateVoxel&) {
    throw;
  } catch (const CoordinateOverflow& e) {
    throw ParseError(line_hint, e.what());
  }
}

}  // namespace

DigitalObject read_voxel_text(std::istream& in, std::size_t ambient_n, DuplicatePolicy policy) {
  std::vector<Point> voxels;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream tokens(raw);
    Point p;
    std::string token;
    while (tokens >> token) p.push_back(parse_coord(token, line));
    if (p.empty()) continue;
    if (p.size() != ambient_n) {
      throw ParseError(line, "expected " + std::to_string(ambient_n) + " integers, got " +
                                 std::to_string(p.size()));
    }
    for (Coord x : p) {
      if (x > kMaxPointCoord || x < -kMaxPointCoord) {
        throw ParseError(line, "coordinate outside |x| <= 2^61");
      }
    }
    voxels.push_back(std::move(p));
  }
  if (in.bad()) throw ParseError(line, "read error");
  return build(ambient_n, std::move(voxels), policy, line);
}

DigitalObject read_voxel_json(std::istream& in, DuplicatePolicy policy) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  try {
    const auto n = doc.at("n").get<std::size_t>();
    if (n == 0) throw ParseError(1, "\"n\" must be positive");
    auto voxels = doc.at("voxels").get<std::vector<Point>>();
    for (std::size_t v = 0; v < voxels.size(); ++v) {
      if (voxels[v].size() != n) {
        throw ParseError(1, "voxel #" + std::to_string(v) + " has length " +
                                std::to_string(voxels[v].size()));
      }
    }
    return build(n, std::move(voxels), policy, 1);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("malformed voxel document: ") + e.what());
  }
}

DigitalObject read_voxel_file(const std::filesystem::path& path, std::size_t ambient_n,
                              DuplicatePolicy policy) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  if (path.extension() == ".json") return read_voxel_json(in, policy);
  return read_voxel_text(in, ambient_n, policy);
}

void write_voxel_text(std::ostream& out, const DigitalObject& d, const std::string& header) {
  if (!header.empty()) out << "# " << header << '\n';
  for (const Point& p : d.voxels()) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j) out << ' ';
      out << p[j];
    }
    out << '\n';
  }
}

}  // namespace digigap
