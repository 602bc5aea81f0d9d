#include "jointvec/manifest.h"

#include <zlib.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "jointvec/error.h"

namespace jointvec::app {

void write_manifest(const Manifest& manifest, std::ostream& out) {
  for (const auto& [key, value] : manifest) out << key << '=' << value << '\n';
}

void write_manifest(const Manifest& manifest,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write manifest " + path.string());
  write_manifest(manifest, out);
  if (!out.flush()) throw IoError("cannot write manifest " + path.string());
}

Manifest read_manifest(std::istream& in, const std::string& source) {
  Manifest manifest;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError(source, lineno, "expected key=value");
    }
    manifest[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return manifest;
}

Manifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path.string());
  return read_manifest(in, path.string());
}

std::string file_checksum(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  uLong crc = crc32(0L, Z_NULL, 0);
  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), buf.size());
    const auto n = in.gcount();
    if (n > 0) {
      crc = crc32(crc, reinterpret_cast<const Bytef*>(buf.data()),
                  static_cast<uInt>(n));
    }
  }
  char hex[9];
  std::snprintf(hex, sizeof(hex), "%08lx", static_cast<unsigned long>(crc));
  return hex;
}

}  // namespace jointvec::app
