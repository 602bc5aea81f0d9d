#include "jointvec/tokenizer.h"

#include <cstdint>
#include <optional>

namespace jointvec {

namespace {

struct Decoded {
  char32_t cp;
  std::size_t len;
};

// Returns nullopt for an invalid or truncated sequence.
std::optional<Decoded> decode(std::string_view s, std::size_t pos) {
  auto byte = [&](std::size_t k) {
    return static_cast<unsigned char>(s[pos + k]);
  };
  const unsigned char b0 = byte(0);
  if (b0 < 0x80) return Decoded{b0, 1};
  std::size_t len;
  char32_t cp;
  if ((b0 & 0xe0) == 0xc0) {
    len = 2;
    cp = b0 & 0x1f;
  } else if ((b0 & 0xf0) == 0xe0) {
    len = 3;
    cp = b0 & 0x0f;
  } else if ((b0 & 0xf8) == 0xf0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return std::nullopt;
  }
  if (pos + len > s.size()) return std::nullopt;
  for (std::size_t k = 1; k < len; ++k) {
    if ((byte(k) & 0xc0) != 0x80) return std::nullopt;
    cp = (cp << 6) | (byte(k) & 0x3f);
  }
  return Decoded{cp, len};
}

void encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else {
    out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  }
}

char32_t lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp < 0xc0) return cp;
  if (cp <= 0xde && cp != 0xd7) return cp + 0x20;  // Latin-1
  if (cp >= 0x100 && cp <= 0x17f) {                 // Latin Extended-A
    // Pairs are (even upper, odd lower) except in 0x139-0x148 and
    // 0x179-0x17e, where the upper case is odd.
    const bool odd_upper = (cp >= 0x139 && cp <= 0x148) ||
                           (cp >= 0x179 && cp <= 0x17e);
    if (cp == 0x130 || cp == 0x131 || cp == 0x138 || cp == 0x149 ||
        cp == 0x17f) {
      return cp;
    }
    if (cp == 0x178) return 0xff;
    if (odd_upper ? (cp % 2 == 1) : (cp % 2 == 0)) return cp + 1;
    return cp;
  }
  if (cp >= 0x391 && cp <= 0x3a9 && cp != 0x3a2) return cp + 0x20;  // Greek
  if (cp >= 0x410 && cp <= 0x42f) return cp + 0x20;                 // Cyrillic
  if (cp >= 0x400 && cp <= 0x40f) return cp + 0x50;
  return cp;
}

bool is_space(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0a: case 0x0b: case 0x0c: case 0x0d: case 0x20:
    case 0x85: case 0xa0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202f: case 0x205f: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200a;
  }
}

}  // namespace

std::string to_lower_utf8(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto d = decode(text, pos);
    if (!d) {
      out.push_back(text[pos++]);
      continue;
    }
    encode(lower(d->cp), out);
    pos += d->len;
  }
  return out;
}

std::vector<std::string> tokenize_line(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < line.size()) {
    auto d = decode(line, pos);
    if (!d) {
      current.push_back(line[pos++]);
      continue;
    }
    if (is_space(d->cp)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      encode(lower(d->cp), current);
    }
    pos += d->len;
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

}  // namespace jointvec
