/*
 * Copyright 2026 The clonedist Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "clonedist/tokenizer.hpp"

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "clonedist/utf8.hpp"

namespace clonedist {
namespace {

std::vector<std::string> texts(const TokenSequence& seq) {
    std::vector<std::string> out;
    for (const auto& t : seq.tokens) out.push_back(t.kind == TokenKind::Newline ? "NEWLINE" : t.text);
    return out;
}

std::vector<TokenKind> kinds(const TokenSequence& seq) {
    std::vector<TokenKind> out;
    for (const auto& t : seq.tokens) out.push_back(t.kind);
    return out;
}

TEST(Tokenizer, EmptyInput) {
    const auto seq = tokenize_source("");
    EXPECT_TRUE(seq.tokens.empty());
    EXPECT_TRUE(seq.interned.empty());
}

TEST(Tokenizer, CommentOnlyLineEmitsNothing) {
    const auto seq = tokenize_source("a = 1\n# note\nb = 2");
    EXPECT_EQ(texts(seq), (std::vector<std::string>{"a", "=", "1", "NEWLINE", "b", "=", "2", "NEWLINE"}));
    EXPECT_EQ(kinds(seq), (std::vector<TokenKind>{TokenKind::Ident, TokenKind::Op, TokenKind::Number,
                                                  TokenKind::Newline, TokenKind::Ident, TokenKind::Op,
                                                  TokenKind::Number, TokenKind::Newline}));
}

TEST(Tokenizer, TripleQuotedStringSpansLines) {
    // s(1,1) =(1,3) '''x\ny'''(1,5); the string ends at byte 13, which is
    // column 5 of line 2, where the final NEWLINE sits.
    const auto seq = tokenize_source("s = '''x\ny'''");
    ASSERT_EQ(seq.tokens.size(), 4u);
    EXPECT_EQ(seq.tokens[0], (Token{"s", TokenKind::Ident, 1, 1}));
    EXPECT_EQ(seq.tokens[1], (Token{"=", TokenKind::Op, 1, 3}));
    EXPECT_EQ(seq.tokens[2], (Token{"'''x\ny'''", TokenKind::String, 1, 5}));
    EXPECT_EQ(seq.tokens[3].kind, TokenKind::Newline);
    EXPECT_EQ(seq.tokens[3].line, 2u);
    EXPECT_EQ(seq.tokens[3].col, 5u);
}

TEST(Tokenizer, PrefixedAndEscapedStrings) {
    const auto seq = tokenize_source(R"(x = rb'a\'b' + f"{y}" + u"")");
    EXPECT_EQ(texts(seq), (std::vector<std::string>{"x", "=", R"(rb'a\'b')", "+", R"(f"{y}")", "+", R"(u"")",
                                                    "NEWLINE"}));
    EXPECT_EQ(seq.tokens[2].kind, TokenKind::String);
}

TEST(Tokenizer, NonPrefixWordBeforeQuoteIsIdent) {
    const auto seq = tokenize_source("name'x'");
    EXPECT_EQ(texts(seq), (std::vector<std::string>{"name", "'x'", "NEWLINE"}));
}

TEST(Tokenizer, UnterminatedStringRunsToEndOfInput) {
    const auto seq = tokenize_source("a = 'oops\nb = 2\n");
    ASSERT_EQ(seq.tokens.size(), 4u);
    EXPECT_EQ(seq.tokens[2].text, "'oops\nb = 2\n");
    EXPECT_EQ(seq.tokens[2].kind, TokenKind::String);
}

TEST(Tokenizer, MaximalMunchOperators) {
    const auto seq = tokenize_source("a **= b // c -> d ... e := f != g");
    EXPECT_EQ(texts(seq), (std::vector<std::string>{"a", "**=", "b", "//", "c", "->", "d", "...", "e", ":=", "f",
                                                    "!=", "g", "NEWLINE"}));
}

TEST(Tokenizer, Numbers) {
    const auto seq = tokenize_source("1 3.14 .5 1e-3 0x1F 1_000 2j 1.e5");
    std::vector<std::string> expected{"1", "3.14", ".5", "1e-3", "0x1F", "1_000", "2j", "1.e5", "NEWLINE"};
    EXPECT_EQ(texts(seq), expected);
    for (std::size_t i = 0; i + 1 < seq.tokens.size(); ++i) EXPECT_EQ(seq.tokens[i].kind, TokenKind::Number);
}

TEST(Tokenizer, UnknownCharacters) {
    const auto seq = tokenize_source("a $ b ? `c`");
    EXPECT_EQ(texts(seq), (std::vector<std::string>{"a", "$", "b", "?", "`", "c", "`", "NEWLINE"}));
    EXPECT_EQ(seq.tokens[1].kind, TokenKind::Unknown);
}

TEST(Tokenizer, ShellEscapeAndMagicLines) {
    const auto seq = tokenize_source("!pip install x\n%matplotlib inline\n");
    EXPECT_EQ(texts(seq), (std::vector<std::string>{"!", "pip", "install", "x", "NEWLINE", "%", "matplotlib",
                                                    "inline", "NEWLINE"}));
}

TEST(Tokenizer, BracketsAndBackslashJoinLogicalLines) {
    const auto seq = tokenize_source("f(a,\n  b)\nx = 1 + \\\n  2\n");
    EXPECT_EQ(texts(seq), (std::vector<std::string>{"f", "(", "a", ",", "b", ")", "NEWLINE", "x", "=", "1", "+",
                                                    "2", "NEWLINE"}));
}

TEST(Tokenizer, IndentationIsDropped) {
    const auto a = tokenize_source("if x:\n    y()\n");
    const auto b = tokenize_source("if x:\n\ty()\n");
    EXPECT_EQ(a.interned, b.interned);
    EXPECT_EQ(texts(a), texts(b));
}

TEST(Tokenizer, CrLfLineEndings) {
    const auto seq = tokenize_source("a\r\nb\rc");
    EXPECT_EQ(texts(seq), (std::vector<std::string>{"a", "NEWLINE", "b", "NEWLINE", "c", "NEWLINE"}));
    EXPECT_EQ(seq.tokens[4].line, 3u);
}

TEST(Tokenizer, InterningMatchesText) {
    const auto seq = tokenize_source("a = a + b\nb = a\n");
    ASSERT_EQ(seq.tokens.size(), seq.interned.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = 0; j < seq.size(); ++j) {
            EXPECT_EQ(seq.interned[i] == seq.interned[j], seq.tokens[i].text == seq.tokens[j].text);
        }
    }
}

TEST(Tokenizer, SharedInternTableIsConsistentAcrossFiles) {
    auto first = tokenize_source("x = foo(1)\n");
    auto second = tokenize_source("y = foo(2)\nx = 3\n");
    InternTable table;
    intern_tokens(first, table);
    intern_tokens(second, table);
    for (std::size_t i = 0; i < first.size(); ++i) {
        for (std::size_t j = 0; j < second.size(); ++j) {
            EXPECT_EQ(first.interned[i] == second.interned[j], first.tokens[i].text == second.tokens[j].text);
        }
    }
}

TEST(Tokenizer, GenericProfileLexesIdentically) {
    const std::string src = "int main() { return 0; } // c++\n";
    EXPECT_EQ(tokenize_source(src, TokenizerProfile::Generic), tokenize_source(src, TokenizerProfile::Script));
}

// Random byte soup: never throws, deterministic, positions non-decreasing,
// only NEWLINE has synthetic text.
TEST(Tokenizer, PropertyTotalAndDeterministic) {
    std::mt19937_64 rng(7);
    const std::string alphabet = "ab1_ .'\"#\\\n\r\t()[]{}+-*/=<>!$?é\xff";
    for (int iter = 0; iter < 300; ++iter) {
        std::uniform_int_distribution<std::size_t> len(0, 120);
        std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
        std::string text;
        for (std::size_t n = len(rng); n > 0; --n) text.push_back(alphabet[pick(rng)]);
        text = sanitize_utf8(text);
        const auto seq = tokenize_source(text);
        EXPECT_EQ(seq, tokenize_source(text));
        ASSERT_EQ(seq.tokens.size(), seq.interned.size());
        for (std::size_t i = 0; i < seq.size(); ++i) {
            EXPECT_FALSE(seq.tokens[i].text.empty());
            EXPECT_GE(seq.tokens[i].line, 1u);
            EXPECT_GE(seq.tokens[i].col, 1u);
            if (i > 0) {
                const auto& a = seq.tokens[i - 1];
                const auto& b = seq.tokens[i];
                EXPECT_TRUE(a.line < b.line || (a.line == b.line && a.col <= b.col)) << text;
            }
        }
    }
}

TEST(Utf8, ReplacesMalformedSequences) {
    EXPECT_EQ(sanitize_utf8("ok"), "ok");
    EXPECT_EQ(sanitize_utf8("caf\xC3\xA9"), "caf\xC3\xA9");
    EXPECT_EQ(sanitize_utf8("a\xFF" "b"), "a\xEF\xBF\xBD" "b");
    EXPECT_EQ(sanitize_utf8("\xC0\xAF"), "\xEF\xBF\xBD\xEF\xBF\xBD");     // overlong
    EXPECT_EQ(sanitize_utf8("\xED\xA0\x80"), "\xEF\xBF\xBD\xEF\xBF\xBD\xEF\xBF\xBD"); // surrogate
    EXPECT_EQ(sanitize_utf8("\xE2\x82"), "\xEF\xBF\xBD\xEF\xBF\xBD");     // truncated
}

} // namespace
} // namespace clonedist
