#include "jointvec/tokenizer.h"

#include <gtest/gtest.h>

namespace jointvec {
namespace {

using Tokens = std::vector<std::string>;

TEST(TokenizeLine, LowercasesAndSplits) {
  EXPECT_EQ(tokenize_line("I like both cats and dogs"),
            (Tokens{"i", "like", "both", "cats", "and", "dogs"}));
}

TEST(TokenizeLine, EmptyInput) { EXPECT_TRUE(tokenize_line("").empty()); }

TEST(TokenizeLine, RepeatedWhitespaceCollapses) {
  EXPECT_EQ(tokenize_line("Cats  DOGS"), (Tokens{"cats", "dogs"}));
  EXPECT_EQ(tokenize_line("\t a \r\n b  "), (Tokens{"a", "b"}));
}

TEST(TokenizeLine, UnicodeWhitespaceAndCase) {
  // U+00A0 no-break space and U+3000 ideographic space separate tokens.
  EXPECT_EQ(tokenize_line("Caf\xC3\x89\xC2\xA0\xCE\x91\xCE\x92\xE3\x80\x80"
                          "\xD0\x9C\xD0\xB8\xD1\x80"),
            (Tokens{"caf\xC3\xA9", "\xCE\xB1\xCE\xB2",
                    "\xD0\xBC\xD0\xB8\xD1\x80"}));
}

TEST(TokenizeLine, InvalidBytesPassThrough) {
  EXPECT_EQ(tokenize_line("A\xFF" "B c"), (Tokens{"a\xFF" "b", "c"}));
}

TEST(ToLowerUtf8, LatinExtendedPairs) {
  EXPECT_EQ(to_lower_utf8("\xC5\x81\xC3\x93\xC4\x8C"),  // ŁÓČ
            "\xC5\x82\xC3\xB3\xC4\x8D");
}

}  // namespace
}  // namespace jointvec
