#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "nilfilt/group.hpp"

namespace nilfilt {

// Group files are JSON objects of one of two shapes:
//   { "name": str, "order": n, "mul": [[ids]], "labels": [str] }   (labels optional)
//   { "name": str, "perm_gens": [[cycle lists]] }                   (1-based points)
// Writing always produces the first shape; reading then writing is
// byte-identical.
std::string group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(std::string_view text);

void save_group_file(const FiniteGroup& g, const std::filesystem::path& path);
FiniteGroup load_group_file(const std::filesystem::path& path);

}  // namespace nilfilt
