#pragma once

#include <filesystem>
#include <optional>

namespace origami {

/// Version written in the header line; files with any other header are ignored.
inline constexpr int kCacheFormatVersion = 1;

/// Directory named by ORIGAMI_CACHE_DIR, if set and non-empty.
std::optional<std::filesystem::path> cache_dir_from_env();

/// Loads character and Jack memo entries from <dir>/origami-cache.txt.
/// Returns the number of records read; a missing file reads as 0. Throws
/// std::runtime_error on a malformed record.
std::size_t load_cache(const std::filesystem::path& dir);

/// Writes every memoized character value and Jack family as plain text
/// (one record per line), replacing the file atomically.
void save_cache(const std::filesystem::path& dir);

}  // namespace origami
