#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace sva {

std::string read_file(const std::string& path);

// Write-temp-then-rename so partially written outputs never appear.
void write_file_atomic(const std::string& path, std::string_view content);

// FNV-1a over the file bytes, for provenance fingerprints.
std::uint64_t fingerprint_file(const std::string& path);
std::string to_hex(std::uint64_t value);

}  // namespace sva
