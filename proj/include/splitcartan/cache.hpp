/*
   Copyright 2026 The splitcartan Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SPLITCARTAN_CACHE_HPP
#define SPLITCARTAN_CACHE_HPP

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "splitcartan/catalog.hpp"

namespace splitcartan {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kCatalogKind = "splitcartan-catalog";

// All integers are serialized as decimal strings; no binary floats anywhere.
inline nlohmann::json poly_to_json(const IntPoly& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (long i = 0; i <= f.degree(); ++i) coeffs.push_back(f.coeff(i).get_str());
  return coeffs;
}

inline IntPoly poly_from_json(const nlohmann::json& j) {
  std::vector<Int> c;
  for (const auto& v : j) c.emplace_back(v.get<std::string>());
  return IntPoly(std::move(c));
}

inline nlohmann::json catalog_to_json(const Catalog& cat) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kCatalogKind;
  j["p"] = cat.p;
  j["lmax"] = cat.lmax;
  j["sound"] = cat.sound;
  j["provenance"] = cat.provenance;
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& o : cat.orbits) {
    nlohmann::json jo;
    jo["id"] = o.id;
    jo["level"] = o.level;
    jo["dim"] = o.dim;
    jo["epsilon"] = o.epsilon;
    jo["cm"] = o.cm;
    jo["inner_twist"] = o.inner_twist;
    nlohmann::json cps;
    for (const auto& [ell, poly] : o.charpolys) cps[std::to_string(ell)] = poly_to_json(poly);
    jo["charpolys"] = std::move(cps);
    orbits.push_back(std::move(jo));
  }
  j["orbits"] = std::move(orbits);
  return j;
}

// Rebuilds a catalog from its serialized primary data; the derived fields
// (twist table, S, t, splitting field) are recomputed deterministically.
inline Catalog catalog_from_json(const nlohmann::json& j, bool is_import) {
  if (!j.contains("kind") || j["kind"] != kCatalogKind)
    throw std::runtime_error("catalog JSON: wrong or missing 'kind'");
  if (!j.contains("schema_version") || j["schema_version"].get<int>() != kSchemaVersion)
    throw std::runtime_error("catalog JSON: unsupported schema_version");
  if (!j.contains("provenance") || !j["provenance"].is_string() ||
      j["provenance"].get<std::string>().empty())
    throw std::runtime_error("catalog JSON: 'provenance' field is required");
  Catalog cat;
  cat.p = j.at("p").get<long>();
  cat.lmax = j.at("lmax").get<long>();
  cat.sound = j.at("sound").get<bool>();
  cat.provenance = j.at("provenance").get<std::string>();
  if (is_import && cat.provenance == "computed")
    cat.provenance = "imported:unlabeled";  // imported data is never mixed with computed
  for (const auto& jo : j.at("orbits")) {
    NewformOrbit o;
    o.id = jo.at("id").get<std::string>();
    o.level = jo.at("level").get<long>();
    o.dim = jo.at("dim").get<long>();
    o.epsilon = jo.at("epsilon").get<int>();
    o.cm = jo.at("cm").get<bool>();
    o.inner_twist = jo.at("inner_twist").get<bool>();
    for (const auto& [key, val] : jo.at("charpolys").items()) {
      long ell = std::stol(key);
      IntPoly poly = poly_from_json(val);
      require(poly.degree() == o.dim, "catalog JSON: charpoly degree != orbit dim");
      o.charpolys[ell] = std::move(poly);
    }
    require(o.epsilon == 1 || o.epsilon == -1, "catalog JSON: epsilon must be +-1");
    require(o.level == cat.p || o.level == cat.p * cat.p, "catalog JSON: bad orbit level");
    cat.orbits.push_back(std::move(o));
  }
  finalize_catalog(cat);
  return cat;
}

// Atomic write: serialize to a temp file, then rename into place.
inline void write_json_atomic(const std::filesystem::path& path, const nlohmann::json& j) {
  std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    require(out.good(), "cannot open for writing: " + tmp.string());
    out << j.dump(2) << "\n";
    require(out.good(), "write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open for reading: " + path.string());
  nlohmann::json j;
  in >> j;
  return j;
}

inline std::filesystem::path catalog_cache_path(const std::filesystem::path& cache_dir, long p) {
  return cache_dir / ("v" + std::to_string(kSchemaVersion)) /
         ("catalog-" + std::to_string(p) + ".json");
}

inline void save_catalog(const std::filesystem::path& cache_dir, const Catalog& cat) {
  write_json_atomic(catalog_cache_path(cache_dir, cat.p), catalog_to_json(cat));
}

inline std::optional<Catalog> load_cached_catalog(const std::filesystem::path& cache_dir, long p) {
  auto path = catalog_cache_path(cache_dir, p);
  if (!std::filesystem::exists(path)) return std::nullopt;
  try {
    return catalog_from_json(read_json(path), /*is_import=*/false);
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable cache: caller rebuilds
  }
}

inline Catalog import_catalog(const std::filesystem::path& file) {
  nlohmann::json j = read_json(file);
  Catalog cat = catalog_from_json(j, /*is_import=*/true);
  if (j.at("provenance").get<std::string>() == "computed")
    throw std::runtime_error("import: provenance must identify the external source");
  return cat;
}

}  // namespace splitcartan

#endif
