#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "floer/error.hpp"
#include "floer/knotio.hpp"

#ifndef FLOER_DEFAULT_TABLE
#define FLOER_DEFAULT_TABLE "data/knot_table.json"
#endif

namespace floer {

std::string table_path() {
  if (const char* p = std::getenv("FLOER_TABLE_PATH"); p && *p) return p;
  return FLOER_DEFAULT_TABLE;
}

namespace {

nlohmann::json load_table() {
  std::string path = table_path();
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open knot table " + path);
  try {
    auto j = nlohmann::json::parse(in);
    if (!j.contains("knots") || !j["knots"].is_array())
      throw ValidationError("knot table " + path + " has no \"knots\" array");
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError("knot table " + path + ": " + e.what());
  }
}

}  // namespace

std::vector<std::string> table_names() {
  std::vector<std::string> names;
  auto table = load_table();
  for (auto& k : table["knots"]) names.push_back(k.at("name").get<std::string>());
  return names;
}

KnotDiagram table_knot(const std::string& name) {
  auto table = load_table();
  for (auto& k : table["knots"]) {
    if (k.at("name").get<std::string>() != name) continue;
    auto d = parse_pd(k.at("pd").get<std::string>());
    d.name = name;
    return d;
  }
  throw ValidationError("knot " + name + " not in table " + table_path());
}

std::vector<KnotDiagram> table_knots() {
  std::vector<KnotDiagram> out;
  auto table = load_table();
  for (auto& k : table["knots"]) {
    auto d = parse_pd(k.at("pd").get<std::string>());
    d.name = k.at("name").get<std::string>();
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace floer
