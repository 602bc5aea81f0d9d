#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <string>
#include <string_view>

namespace jointvec::detail {

// Little-endian primitives shared by the binary formats.
void write_u32(std::ostream& out, std::uint32_t v);
void write_u64(std::ostream& out, std::uint64_t v);
void write_f64(std::ostream& out, double v);

// Each returns false when the stream runs out before the value is complete.
bool read_u32(std::istream& in, std::uint32_t& v);
bool read_u64(std::istream& in, std::uint64_t& v);
bool read_f64(std::istream& in, double& v);

void write_magic(std::ostream& out, std::string_view magic);
// Throws FormatError on mismatch.
void expect_magic(std::istream& in, std::string_view magic,
                  std::string_view what);

// True when no bytes remain.
bool at_eof(std::istream& in);

std::ifstream open_input(const std::filesystem::path& path, bool binary);
std::ofstream open_output(const std::filesystem::path& path, bool binary);
// Throws IoError if the stream has failed.
void check_written(std::ostream& out, const std::filesystem::path& path);

}  // namespace jointvec::detail
