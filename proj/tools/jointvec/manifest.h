#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

namespace jointvec::app {

// Flat key=value file, one pair per line, keys sorted. Values may not
// contain newlines.
using Manifest = std::map<std::string, std::string>;

void write_manifest(const Manifest& manifest, std::ostream& out);
void write_manifest(const Manifest& manifest, const std::filesystem::path& path);
Manifest read_manifest(std::istream& in, const std::string& source);
Manifest read_manifest(const std::filesystem::path& path);

// CRC-32 of the file contents as 8 lowercase hex digits.
std::string file_checksum(const std::filesystem::path& path);

}  // namespace jointvec::app
