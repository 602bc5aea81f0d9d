#include "binary_io.h"

#include <array>
#include <istream>
#include <ostream>

#include "jointvec/error.h"

namespace jointvec::detail {

namespace {

template <typename U>
void write_le(std::ostream& out, U v) {
  std::array<char, sizeof(U)> bytes;
  for (std::size_t k = 0; k < sizeof(U); ++k) {
    bytes[k] = static_cast<char>((v >> (8 * k)) & 0xff);
  }
  out.write(bytes.data(), bytes.size());
}

template <typename U>
bool read_le(std::istream& in, U& v) {
  std::array<unsigned char, sizeof(U)> bytes;
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (in.gcount() != static_cast<std::streamsize>(bytes.size())) return false;
  v = 0;
  for (std::size_t k = 0; k < sizeof(U); ++k) {
    v |= static_cast<U>(bytes[k]) << (8 * k);
  }
  return true;
}

}  // namespace

void write_u32(std::ostream& out, std::uint32_t v) { write_le(out, v); }
void write_u64(std::ostream& out, std::uint64_t v) { write_le(out, v); }
void write_f64(std::ostream& out, double v) {
  write_le(out, std::bit_cast<std::uint64_t>(v));
}

bool read_u32(std::istream& in, std::uint32_t& v) { return read_le(in, v); }
bool read_u64(std::istream& in, std::uint64_t& v) { return read_le(in, v); }
bool read_f64(std::istream& in, double& v) {
  std::uint64_t bits;
  if (!read_le(in, bits)) return false;
  v = std::bit_cast<double>(bits);
  return true;
}

void write_magic(std::ostream& out, std::string_view magic) {
  out.write(magic.data(), static_cast<std::streamsize>(magic.size()));
}

void expect_magic(std::istream& in, std::string_view magic,
                  std::string_view what) {
  std::string got(magic.size(), '\0');
  in.read(got.data(), static_cast<std::streamsize>(got.size()));
  if (in.gcount() != static_cast<std::streamsize>(magic.size()) ||
      got != magic) {
    throw FormatError("not a " + std::string(what) + " file (bad magic)");
  }
}

bool at_eof(std::istream& in) {
  return in.peek() == std::char_traits<char>::eof();
}

std::ifstream open_input(const std::filesystem::path& path, bool binary) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  return in;
}

std::ofstream open_output(const std::filesystem::path& path, bool binary) {
  std::ofstream out(path, binary ? std::ios::binary | std::ios::trunc
                                 : std::ios::out | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void check_written(std::ostream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace jointvec::detail
