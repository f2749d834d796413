#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "digigap/object.hpp"

namespace digigap {

/// Text voxel format: one voxel per line as whitespace-separated integers,
/// '#' starts a comment, blank lines are ignored.
DigitalObject read_voxel_text(std::istream& in, std::size_t ambient_n, DuplicatePolicy policy);

/// Structured voxel format: {"n": 3, "voxels": [[0,0,0], ...]}.
DigitalObject read_voxel_json(std::istream& in, DuplicatePolicy policy);

/// Dispatches on extension: ".json" is structured, anything else is text.
DigitalObject read_voxel_file(const std::filesystem::path& path, std::size_t ambient_n,
                              DuplicatePolicy policy);

void write_voxel_text(std::ostream& out, const DigitalObject& d, const std::string& header = {});

}  // namespace digigap
