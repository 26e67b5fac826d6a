#include "eulerclass/groupfile.hpp"

#include <fstream>
#include <sstream>

#include "eulerclass/errors.hpp"

namespace eulerclass::cli {

namespace {

Integer parse_integer(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw ParseError(where + ": '" + s + "' is not an integer");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw ParseError(where + ": expected an integer, got " + v.dump());
}

}  // namespace

GroupFile parse_group_file(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("group file must be a JSON object");
  GroupFile out;

  if (doc.contains("name") && !doc["name"].is_null()) {
    if (!doc["name"].is_string()) throw ParseError("'name' must be a string");
    out.name = doc["name"].get<std::string>();
  }

  if (!doc.contains("rank")) throw ParseError("missing key 'rank'");
  const auto& rank = doc["rank"];
  if (!rank.is_number_integer() || rank.get<std::int64_t>() < 1) throw ParseError("'rank' must be a positive integer");
  out.rank = rank.get<std::size_t>();

  if (!doc.contains("generators")) throw ParseError("missing key 'generators'");
  const auto& gens = doc["generators"];
  if (!gens.is_array()) throw ParseError("'generators' must be a list of matrices");
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string where = "generator " + std::to_string(g);
    const auto& m = gens[g];
    if (!m.is_array() || m.size() != out.rank)
      throw ParseError(where + ": expected " + std::to_string(out.rank) + " rows");
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto& r = m[i];
      if (!r.is_array() || r.size() != out.rank)
        throw ParseError(where + ", row " + std::to_string(i) + ": expected " + std::to_string(out.rank) + " entries");
      IntVector row;
      for (std::size_t j = 0; j < r.size(); ++j)
        row.push_back(parse_integer(r[j], where + ", entry (" + std::to_string(i) + "," + std::to_string(j) + ")"));
      rows.push_back(std::move(row));
    }
    out.generators.push_back(IntMatrix::from_rows(rows));
  }
  return out;
}

GroupFile parse_group_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_group_file(doc);
}

GroupFile read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str());
}

nlohmann::json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

nlohmann::json to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const GroupFile& file) {
  nlohmann::json doc;
  if (file.name) doc["name"] = *file.name;
  doc["rank"] = file.rank;
  doc["generators"] = nlohmann::json::array();
  for (const auto& g : file.generators) doc["generators"].push_back(to_json(g));
  return doc;
}

}  // namespace eulerclass::cli
