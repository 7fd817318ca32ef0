#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lrcone/arith.hpp"

namespace lrcone::cache {

constexpr int kFormatVersion = 1;
constexpr const char* kFormatName = "lrcone-schubert-table";
// Environment variable consulted when no --cache-dir flag is given.
constexpr const char* kCacheDirEnv = "LRCONE_CACHE_DIR";

struct SchubertTableFile {
  std::string cartan_type;
  std::vector<int> levi;                  // 0-based simple indices
  std::vector<std::vector<int>> cosets;   // reduced words of minimal representatives
  std::vector<std::array<Int, 4>> triples;  // (u, v, w, constant)
};

std::filesystem::path schubert_table_path(const std::filesystem::path& dir, const std::string& cartan_type,
                                          const std::vector<int>& levi);

// Returns nullopt for a missing, unreadable, corrupt or version-mismatched file.
std::optional<SchubertTableFile> read_schubert_table(const std::filesystem::path& path);

// Writes to a temporary sibling and renames it into place.
void write_schubert_table(const std::filesystem::path& path, const SchubertTableFile& table);

// flag > environment variable > $XDG_CACHE_HOME/lrcone > $HOME/.cache/lrcone.
std::filesystem::path resolve_cache_dir(const std::string& flag_value);

}  // namespace lrcone::cache
