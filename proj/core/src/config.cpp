// SPDX-License-Identifier: Apache-2.0
#include "ghx/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ghx {

namespace {

using nlohmann::json;

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i)
    if (text[i] == '\n') ++line;
  return line;
}

[[noreturn]] void fail(const std::string& origin, const std::string& where,
                       const std::string& message) {
  throw Error(origin + ": " + (where.empty() ? "" : where + ": ") + message);
}

double number_at(const json& j, const char* key, const std::string& origin,
                 const std::string& where) {
  if (!j.contains(key) || !j[key].is_number())
    fail(origin, where, std::string("missing numeric field \"") + key + "\"");
  return j[key].get<double>();
}

Complex complex_entry(const json& pair, const std::string& origin,
                      const std::string& where) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
      !pair[1].is_number())
    fail(origin, where, "complex entries must be [re, im] pairs");
  return {pair[0].get<double>(), pair[1].get<double>()};
}

ScalarSymbol load_table_symbol(const json& desc, const GroupId& group,
                               const std::string& resolved_path,
                               const std::string& origin, const std::string& where) {
  std::ifstream in(resolved_path);
  if (!in) fail(origin, where, "cannot open table file '" + resolved_path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  json table;
  try {
    table = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(resolved_path + ":" + std::to_string(line_of_byte(text, e.byte)), "",
         "parse error: " + std::string(e.what()));
  }
  if (!table.is_object()) fail(resolved_path, "", "table file must be a JSON object");

  std::map<RepIndex, ComplexMatrix, RepIndexLess> entries;
  for (const auto& [key, value] : table.items()) {
    const RepIndex xi = RepIndex::parse(key, group);
    const auto meta = rep_meta(group, xi);
    if (!value.is_array() ||
        value.size() != static_cast<std::size_t>(meta.dim) * meta.dim)
      fail(resolved_path, "\"" + key + "\"",
           "wrong block size: expected " + std::to_string(meta.dim * meta.dim) +
               " row-major entries");
    ComplexMatrix block(meta.dim, meta.dim);
    for (std::int64_t row = 0; row < meta.dim; ++row)
      for (std::int64_t col = 0; col < meta.dim; ++col)
        block(row, col) = complex_entry(value[static_cast<std::size_t>(row * meta.dim + col)],
                                        resolved_path, "\"" + key + "\"");
    entries.emplace(xi, std::move(block));
  }

  std::optional<double> order;
  if (desc.contains("order")) {
    if (!desc["order"].is_number()) fail(origin, where, "table order must be a number");
    order = desc["order"].get<double>();
  }
  return table_symbol(group, "table:" + resolved_path, std::move(entries), order);
}

ScalarSymbol build_symbol(json& desc, const GroupId& group,
                          const std::filesystem::path& base_dir,
                          const std::string& origin, const std::string& where) {
  if (!desc.is_object() || !desc.contains("kind") || !desc["kind"].is_string())
    fail(origin, where, "descriptor needs a string \"kind\"");
  const std::string kind = desc["kind"].get<std::string>();

  if (kind == "torus_poly") {
    if (!group.is_torus()) fail(origin, where, "torus_poly needs a torus group");
    if (!desc.contains("coeffs") || !desc["coeffs"].is_array())
      fail(origin, where, "torus_poly needs a \"coeffs\" array");
    std::vector<TorusPolyTerm> terms;
    for (const auto& c : desc["coeffs"]) {
      if (!c.is_object() || !c.contains("alpha") || !c["alpha"].is_array())
        fail(origin, where, "each coefficient needs an \"alpha\" array");
      TorusPolyTerm term;
      for (const auto& a : c["alpha"]) {
        if (!a.is_number_integer() || a.get<int>() < 0)
          fail(origin, where, "multi-index entries must be non-negative integers");
        term.alpha.push_back(a.get<int>());
      }
      term.coeff = {c.value("re", 0.0), c.value("im", 0.0)};
      terms.push_back(std::move(term));
    }
    return torus_poly_symbol(group.rank, std::move(terms));
  }
  if (kind == "bessel") return bessel_symbol(group, number_at(desc, "s", origin, where));
  if (kind == "su2_field") {
    if (group.is_torus()) fail(origin, where, "su2_field needs the su2 group");
    const double axis = number_at(desc, "axis", origin, where);
    if (axis != 1.0 && axis != 2.0 && axis != 3.0)
      fail(origin, where, "axis must be 1, 2 or 3");
    return su2_field_symbol(static_cast<int>(axis));
  }
  if (kind == "table") {
    if (!desc.contains("path") || !desc["path"].is_string())
      fail(origin, where, "table needs a \"path\" string");
    std::filesystem::path p = desc["path"].get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    const std::string resolved = std::filesystem::weakly_canonical(p).string();
    desc["path"] = resolved;  // reports embed the resolved location
    return load_table_symbol(desc, group, resolved, origin, where);
  }
  fail(origin, where, "unknown descriptor kind '" + kind + "'");
}

}  // namespace

SystemConfig parse_system_config(const std::string& json_text, const std::string& origin) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(origin + ":" + std::to_string(line_of_byte(json_text, e.byte)) +
                ": parse error: " + e.what());
  }
  if (!j.is_object()) throw Error(origin + ": config must be a JSON object");
  if (!j.contains("group") || !j["group"].is_string())
    throw Error(origin + ": missing string field \"group\"");

  SystemConfig cfg;
  cfg.group = GroupId::parse(j["group"].get<std::string>());
  const double m = number_at(j, "m", origin, "");
  const double n = number_at(j, "n", origin, "");
  if (m < 1 || n < 1 || m != std::floor(m) || n != std::floor(n))
    throw Error(origin + ": m and n must be positive integers");
  cfg.m = static_cast<int>(m);
  cfg.n = static_cast<int>(n);

  if (!j.contains("grid") || !j["grid"].is_array() ||
      j["grid"].size() != static_cast<std::size_t>(cfg.m))
    throw Error(origin + ": \"grid\" must be an array of " + std::to_string(cfg.m) +
                " rows");

  const std::filesystem::path base_dir =
      origin.find('/') != std::string::npos || std::filesystem::exists(origin)
          ? std::filesystem::absolute(origin).parent_path()
          : std::filesystem::current_path();

  std::vector<ScalarSymbol> grid;
  for (int row = 0; row < cfg.m; ++row) {
    auto& row_json = j["grid"][row];
    if (!row_json.is_array() || row_json.size() != static_cast<std::size_t>(cfg.n))
      throw Error(origin + ": grid[" + std::to_string(row) + "] must hold " +
                  std::to_string(cfg.n) + " descriptors");
    for (int col = 0; col < cfg.n; ++col) {
      const std::string where =
          "grid[" + std::to_string(row) + "][" + std::to_string(col) + "]";
      grid.push_back(build_symbol(row_json[col], cfg.group, base_dir, origin, where));
    }
  }

  if (j.contains("orders")) {
    const auto& orders = j["orders"];
    if (!orders.is_array() || orders.size() != static_cast<std::size_t>(cfg.m))
      throw Error(origin + ": \"orders\" must be an m x n array");
    for (int row = 0; row < cfg.m; ++row) {
      if (!orders[row].is_array() || orders[row].size() != static_cast<std::size_t>(cfg.n))
        throw Error(origin + ": \"orders\" must be an m x n array");
      for (int col = 0; col < cfg.n; ++col) {
        if (!orders[row][col].is_number())
          throw Error(origin + ": orders entries must be numbers");
        auto& sym = grid[static_cast<std::size_t>(row) * cfg.n + col];
        sym = sym.with_declared_order(orders[row][col].get<double>());
      }
    }
  }

  cfg.system = make_system(cfg.group, cfg.m, cfg.n, std::move(grid));
  cfg.normalized_json = j.dump();
  return cfg;
}

SystemConfig load_system_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(path + ": cannot open config file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_system_config(buffer.str(), path);
}

}  // namespace ghx
