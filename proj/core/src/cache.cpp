#include "lrcone/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "json.hpp"

namespace lrcone::cache {

using nlohmann::json;

std::filesystem::path schubert_table_path(const std::filesystem::path& dir, const std::string& cartan_type,
                                          const std::vector<int>& levi) {
  std::string name = "schubert-" + cartan_type + "-levi";
  if (levi.empty()) name += "-none";
  for (int i : levi) name += "-" + std::to_string(i + 1);
  return dir / (name + ".json");
}

std::optional<SchubertTableFile> read_schubert_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    json doc = json::parse(in);
    if (doc.value("format", "") != kFormatName) return std::nullopt;
    if (doc.value("version", -1) != kFormatVersion) return std::nullopt;
    SchubertTableFile t;
    t.cartan_type = doc.at("cartan_type").get<std::string>();
    t.levi = doc.at("levi_set").get<std::vector<int>>();
    for (int& i : t.levi) i -= 1;
    for (const auto& w : doc.at("cosets")) {
      auto word = w.get<std::vector<int>>();
      for (int& i : word) i -= 1;
      t.cosets.push_back(word);
    }
    for (const auto& row : doc.at("triples")) {
      auto v = row.get<std::vector<Int>>();
      if (v.size() != 4) return std::nullopt;
      t.triples.push_back({v[0], v[1], v[2], v[3]});
    }
    return t;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void write_schubert_table(const std::filesystem::path& path, const SchubertTableFile& t) {
  json doc;
  doc["format"] = kFormatName;
  doc["version"] = kFormatVersion;
  doc["cartan_type"] = t.cartan_type;
  std::vector<int> levi = t.levi;
  for (int& i : levi) i += 1;
  doc["levi_set"] = levi;
  json cosets = json::array();
  for (auto word : t.cosets) {
    for (int& i : word) i += 1;
    cosets.push_back(word);
  }
  doc["cosets"] = cosets;
  json triples = json::array();
  for (const auto& r : t.triples) triples.push_back({r[0], r[1], r[2], r[3]});
  doc["triples"] = triples;

  std::filesystem::create_directories(path.parent_path());
  std::random_device rd;
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(rd());
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << doc.dump() << '\n';
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::filesystem::path resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "lrcone";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "lrcone";
  return std::filesystem::temp_directory_path() / "lrcone-cache";
}

}  // namespace lrcone::cache
