#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ncdkit/corpus.hpp"

namespace ncdkit {

struct FetchResult {
  std::string id;
  std::string url;
  bool ok = false;
  bool skipped = false;  // lock hash matched, nothing written
  std::string error;     // message or HTTP status on failure
  std::string sha256;
};

struct FetchReport {
  std::vector<FetchResult> entries;
  std::size_t failures = 0;
};

// Expands genbank:ACCESSION sources to their download URL.
std::string resolve_source_url(const std::string& source);

std::string sha256_hex(const std::string& bytes);

// Downloads every remote manifest entry into dest/<id>, recording content
// hashes in dest/ncdkit.lock. Entries whose on-disk hash already matches
// the lock are not rewritten.
FetchReport fetch_dataset(const Manifest& m, const std::filesystem::path& dest);

}  // namespace ncdkit
