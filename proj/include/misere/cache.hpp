#pragma once

#include "misere/engine.hpp"

// Optional on-disk persistence of the interning table and outcome memo.
// One versioned binary file; unknown versions or damaged files are ignored
// and rebuilt from scratch, so deleting the cache directory is always safe.

namespace misere {

// Loads into a fresh engine (no effect and false if the engine already has
// interned forms beyond 0, or the file is absent/incompatible).
bool load_cache(Engine& eng, const std::string& path);

bool save_cache(Engine& eng, const std::string& path);

std::string cache_file_in(const std::string& dir);

}  // namespace misere
