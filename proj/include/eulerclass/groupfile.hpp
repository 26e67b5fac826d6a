#pragma once

// GroupFile: a small JSON document describing a split crystallographic group.
//
//   {
//     "name": "p4m",
//     "rank": 2,
//     "generators": [[[0, -1], [1, 0]], [[0, 1], [1, 0]]]
//   }
//
// "name" is optional. Matrix entries are JSON integers, or decimal strings
// for values outside the 64-bit range. Unknown keys are ignored, so the
// machine-readable analysis report can be fed back in as a GroupFile.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eulerclass/intmat.hpp"

namespace eulerclass::cli {

struct GroupFile {
  std::optional<std::string> name;
  std::size_t rank = 0;
  std::vector<IntMatrix> generators;

  friend bool operator==(const GroupFile&, const GroupFile&) = default;
};

/// Throws ParseError.
GroupFile parse_group_file(const nlohmann::json& doc);
GroupFile parse_group_text(std::string_view text);
GroupFile read_group_file(const std::filesystem::path& path);

nlohmann::json to_json(const GroupFile& file);
nlohmann::json to_json(const Integer& x);
nlohmann::json to_json(const IntMatrix& m);

}  // namespace eulerclass::cli
