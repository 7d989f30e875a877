#pragma once

// Keyed on-disk cache for the exact integer linear-form tables. Entries are
// JSON files named by the instance key; writes go through a temporary file
// and an atomic rename, so an interrupted run never leaves a readable
// partial entry.

#include "padezeta/construction.hpp"
#include "padezeta/derivation.hpp"

#include <optional>
#include <string>

namespace padezeta {

// Deterministic file-name key for one instance, e.g.
// "a3_r1_N1_n4_p1_zone_f<16 hex digits>"; the hex tail hashes the exact
// twist values so distinct f vectors cannot collide by name shape.
std::string cache_key(const ProblemParams& pp);

// Explicit directory wins; otherwise the PADEZETA_CACHE environment
// variable; empty string when neither is set (caching disabled).
std::string resolve_cache_dir(const std::string& explicit_dir);

// Writes the table under the instance key, creating the directory if needed.
void cache_store_table(const std::string& dir, const ProblemParams& pp,
                       const LinearFormTable& t);

// nullopt when no entry exists. Throws CacheError when an entry exists but
// is unreadable, unparsable, or inconsistent with the instance.
std::optional<LinearFormTable> cache_load_table(const std::string& dir,
                                                const ProblemParams& pp);

} // namespace padezeta
