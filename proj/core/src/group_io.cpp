#include "nilfilt/group_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nilfilt/catalog.hpp"

namespace nilfilt {

using ordered_json = nlohmann::ordered_json;

std::string group_to_json(const FiniteGroup& g) {
  ordered_json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["mul"] = g.table();
  if (g.has_labels()) j["labels"] = g.labels();
  return j.dump() + "\n";
}

FiniteGroup group_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ValidationError(std::string("group file: ") + e.what());
  }
  try {
    if (!j.is_object()) throw ValidationError("group file: top level must be an object");
    const std::string name = j.value("name", std::string("group"));
    if (j.contains("mul")) {
      auto table = j.at("mul").get<std::vector<std::vector<Elem>>>();
      if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
        throw ValidationError("group file: order field does not match table size");
      std::vector<std::string> labels;
      if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
      return FiniteGroup::from_table(name, table, std::move(labels));
    }
    if (j.contains("perm_gens")) {
      auto gens = j.at("perm_gens").get<std::vector<std::vector<std::vector<int>>>>();
      int degree = 1;
      for (const auto& g : gens)
        for (const auto& c : g)
          for (int x : c) degree = std::max(degree, x);
      if (degree > static_cast<int>(kMaxPermDegree))
        throw ValidationError("group file: permutations act on more than " + std::to_string(kMaxPermDegree) + " points");
      std::vector<Perm> perms;
      for (const auto& g : gens) perms.push_back(Perm::from_cycles(static_cast<std::size_t>(degree), g));
      if (perms.empty()) perms.push_back(Perm::identity(static_cast<std::size_t>(degree)));
      return permutation_group(name, perms);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("group file: ") + e.what());
  }
  throw ValidationError("group file: needs either \"mul\" or \"perm_gens\"");
}

void save_group_file(const FiniteGroup& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << group_to_json(g);
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

FiniteGroup load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return group_from_json(ss.str());
}

}  // namespace nilfilt
