#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace jointvec {

// Lowercases UTF-8 text. Covers ASCII, Latin-1, Latin Extended-A, Greek and
// Cyrillic capitals; other code points and invalid byte sequences are copied
// through unchanged.
std::string to_lower_utf8(std::string_view text);

// Splits a line on Unicode whitespace and lowercases every token. Never
// yields empty tokens.
std::vector<std::string> tokenize_line(std::string_view line);

}  // namespace jointvec
