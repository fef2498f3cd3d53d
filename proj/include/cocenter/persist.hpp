#pragma once

#include <string>

#include "cocenter/hecke.hpp"

namespace cocenter {

inline constexpr const char* kCacheSchema = "newton-cocenter-memo/1";

// "<dir>/memo-<group label>.json"
std::string cache_path(const std::string& dir, const IwahoriWeyl& g);

// Loads per-element normal forms written by save_cache. A missing file is not an error; a file with
// another schema tag or group is ignored. Returns the number of entries loaded.
std::size_t load_cache(const Cocenter& cc, const std::string& dir);
void save_cache(const Cocenter& cc, const std::string& dir);

// Directory named by NEWTON_COCENTER_CACHE, or empty.
std::string cache_dir_from_env();

}  // namespace cocenter
