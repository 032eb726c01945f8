#include "ybe/document.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ybe/errors.hpp"

namespace ybe {

using json = nlohmann::json;

namespace {

int read_element(const json& v, int n, const std::string& where) {
  if (!v.is_number_integer()) throw InvalidInput(where + ": expected an integer");
  const auto x = v.get<long long>();
  if (x < 1 || x > n) {
    throw InvalidInput(where + ": value " + std::to_string(x) + " out of range 1.." + std::to_string(n));
  }
  return static_cast<int>(x - 1);
}

Map read_permutation(const json& obj, const char* key, int n) {
  const std::string where = std::string("permutation.") + key;
  if (!obj.contains(key)) throw InvalidInput("missing field '" + where + "'");
  const json& arr = obj.at(key);
  if (!arr.is_array() || arr.size() != static_cast<std::size_t>(n)) {
    throw InvalidInput(where + ": expected an array of length " + std::to_string(n));
  }
  Map p;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    p.push_back(read_element(arr[i], n, where + "[" + std::to_string(i + 1) + "]"));
  }
  if (!is_permutation(p)) throw InvalidInput(where + ": not a permutation");
  return p;
}

}  // namespace

SolutionDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("document must be a JSON object");
  if (!doc.contains("n")) throw InvalidInput("missing field 'n'");
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    throw InvalidInput("field 'n' must be a positive integer");
  }
  const auto n64 = doc["n"].get<long long>();
  if (n64 > 64) throw InvalidInput("field 'n' is too large");
  const int n = static_cast<int>(n64);

  const bool has_r = doc.contains("r");
  const bool has_perm = doc.contains("permutation");
  if (has_r == has_perm) throw InvalidInput("exactly one of 'r' and 'permutation' is required");

  std::optional<std::string> name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InvalidInput("field 'name' must be a string");
    name = doc["name"].get<std::string>();
  }

  if (has_perm) {
    const json& p = doc["permutation"];
    if (!p.is_object()) throw InvalidInput("field 'permutation' must be an object");
    return {name, permutation_solution(read_permutation(p, "f", n), read_permutation(p, "g", n))};
  }

  const json& r = doc["r"];
  if (!r.is_array() || r.size() != static_cast<std::size_t>(n)) {
    throw InvalidInput("r: expected " + std::to_string(n) + " rows");
  }
  std::vector<QuadraticSet::Pair> table;
  for (std::size_t x = 0; x < r.size(); ++x) {
    const std::string row = "r[" + std::to_string(x + 1) + "]";
    if (!r[x].is_array() || r[x].size() != static_cast<std::size_t>(n)) {
      throw InvalidInput(row + ": expected " + std::to_string(n) + " entries");
    }
    for (std::size_t y = 0; y < r[x].size(); ++y) {
      const std::string cell = row + "[" + std::to_string(y + 1) + "]";
      const json& e = r[x][y];
      if (!e.is_array() || e.size() != 2) throw InvalidInput(cell + ": expected a pair [k, l]");
      table.emplace_back(read_element(e[0], n, cell + "[1]"), read_element(e[1], n, cell + "[2]"));
    }
  }
  return {name, QuadraticSet(n, std::move(table))};
}

SolutionDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string serialize_document(const QuadraticSet& q, const std::optional<std::string>& name) {
  json doc = json::object();
  if (name) doc["name"] = *name;
  doc["n"] = q.size();
  json rows = json::array();
  for (int x = 0; x < q.size(); ++x) {
    json row = json::array();
    for (int y = 0; y < q.size(); ++y) {
      auto [a, b] = q(x, y);
      row.push_back(json::array({a + 1, b + 1}));
    }
    rows.push_back(std::move(row));
  }
  doc["r"] = std::move(rows);
  return doc.dump();
}

}  // namespace ybe
