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

#pragma once

// Tolerant lexer producing the token stream that clone detection runs on.
//
// Rules: comments and whitespace are dropped; a NEWLINE token closes every
// logical line that holds at least one token (lines are joined inside
// brackets and after a backslash continuation); quoted literals, including
// prefixed and triple-quoted ones, become a single STRING token; runs of
// identifier characters become IDENT, number syntax becomes NUMBER, operator
// characters are matched longest-first, and anything else is UNKNOWN. The
// lexer never fails: an unterminated string runs to end of input.

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>

#include "clonedist/token.hpp"

namespace clonedist {

enum class TokenizerProfile { Script, Generic };

namespace detail {

inline bool is_ident_start(char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalpha(u) || c == '_' || u >= 0x80;
}

inline bool is_ident_char(char c) {
    return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline bool is_string_prefix(std::string_view word) {
    if (word.empty() || word.size() > 2) return false;
    std::string lower(word);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    static constexpr std::array<std::string_view, 8> prefixes = {"r", "u", "b", "f",
                                                                 "br", "rb", "fr", "rf"};
    return std::find(prefixes.begin(), prefixes.end(), lower) != prefixes.end();
}

inline constexpr std::array<std::string_view, 5> kOps3 = {"**=", "//=", ">>=", "<<=", "..."};
inline constexpr std::array<std::string_view, 19> kOps2 = {
    "**", "//", "<<", ">>", "<=", ">=", "==", "!=", "->", "+=",
    "-=", "*=", "/=", "%=", "&=", "|=", "^=", "@=", ":="};
inline constexpr std::string_view kOps1 = "+-*/%@&|^~<>()[]{},:;.=!";

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        while (pos_ < src_.size()) step();
        close_logical_line(line_, column(pos_));
        return std::move(out_);
    }

private:
    std::uint32_t column(std::size_t at) const {
        return static_cast<std::uint32_t>(at - line_start_ + 1);
    }

    bool at(std::size_t i, char c) const { return i < src_.size() && src_[i] == c; }

    // Consumes a line break at pos_ ("\n", "\r\n" or "\r"); returns false if none.
    bool consume_line_break() {
        if (at(pos_, '\r')) {
            pos_ += at(pos_ + 1, '\n') ? 2 : 1;
        } else if (at(pos_, '\n')) {
            ++pos_;
        } else {
            return false;
        }
        ++line_;
        line_start_ = pos_;
        return true;
    }

    void emit(TokenKind kind, std::size_t begin, std::size_t end, std::uint32_t line,
              std::uint32_t col) {
        out_.push_back(Token{std::string(src_.substr(begin, end - begin)), kind, line, col});
        line_has_token_ = true;
    }

    void close_logical_line(std::uint32_t line, std::uint32_t col) {
        if (!line_has_token_) return;
        out_.push_back(Token{"\n", TokenKind::Newline, line, col});
        line_has_token_ = false;
        depth_ = 0;
    }

    void step() {
        const char c = src_[pos_];
        if (c == '\n' || c == '\r') {
            const auto line = line_;
            const auto col = column(pos_);
            consume_line_break();
            if (depth_ == 0) close_logical_line(line, col);
            return;
        }
        if (c == ' ' || c == '\t' || c == '\f' || c == '\v') {
            ++pos_;
            return;
        }
        if (c == '#') {
            while (pos_ < src_.size() && src_[pos_] != '\n' && src_[pos_] != '\r') ++pos_;
            return;
        }
        if (c == '\\' && (at(pos_ + 1, '\n') || at(pos_ + 1, '\r'))) {
            ++pos_;
            consume_line_break();
            return;
        }
        if (is_ident_start(c)) {
            lex_word();
            return;
        }
        if (c == '"' || c == '\'') {
            lex_string(pos_, pos_);
            return;
        }
        if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
            lex_number();
            return;
        }
        if (kOps1.find(c) != std::string_view::npos) {
            lex_op();
            return;
        }
        emit(TokenKind::Unknown, pos_, pos_ + 1, line_, column(pos_));
        ++pos_;
    }

    void lex_word() {
        std::size_t end = pos_;
        while (end < src_.size() && is_ident_char(src_[end])) ++end;
        if (end < src_.size() && (src_[end] == '"' || src_[end] == '\'') &&
            is_string_prefix(src_.substr(pos_, end - pos_))) {
            lex_string(pos_, end);
            return;
        }
        emit(TokenKind::Ident, pos_, end, line_, column(pos_));
        pos_ = end;
    }

    // `begin` is the token start (prefix letters included), `quote_at` the
    // opening quote.
    void lex_string(std::size_t begin, std::size_t quote_at) {
        const auto line = line_;
        const auto col = column(begin);
        const char q = src_[quote_at];
        const bool triple = at(quote_at + 1, q) && at(quote_at + 2, q);
        pos_ = quote_at + (triple ? 3 : 1);
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '\\' && pos_ + 1 < src_.size()) {
                ++pos_;
                if (!consume_line_break()) ++pos_;
                continue;
            }
            if (c == q) {
                if (!triple) {
                    ++pos_;
                    break;
                }
                if (at(pos_ + 1, q) && at(pos_ + 2, q)) {
                    pos_ += 3;
                    break;
                }
            }
            if (!consume_line_break()) ++pos_;
        }
        emit(TokenKind::String, begin, pos_, line, col);
    }

    void lex_number() {
        const std::size_t begin = pos_;
        const bool hex_like = src_[pos_] == '0' && pos_ + 1 < src_.size() &&
                              std::isalpha(static_cast<unsigned char>(src_[pos_ + 1])) &&
                              src_[pos_ + 1] != 'e' && src_[pos_ + 1] != 'E';
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (is_ident_char(c) && static_cast<unsigned char>(c) < 0x80) {
                ++pos_;
                if (!hex_like && (c == 'e' || c == 'E') &&
                    (at(pos_, '+') || at(pos_, '-')) && pos_ + 1 < src_.size() &&
                    is_digit(src_[pos_ + 1])) {
                    ++pos_;
                }
            } else if (c == '.') {
                ++pos_;
            } else {
                break;
            }
        }
        emit(TokenKind::Number, begin, pos_, line_, column(begin));
    }

    void lex_op() {
        const auto rest = src_.substr(pos_);
        std::size_t len = 1;
        if (std::any_of(kOps3.begin(), kOps3.end(),
                        [&](std::string_view op) { return rest.starts_with(op); })) {
            len = 3;
        } else if (std::any_of(kOps2.begin(), kOps2.end(),
                               [&](std::string_view op) { return rest.starts_with(op); })) {
            len = 2;
        }
        const char c = src_[pos_];
        if (len == 1) {
            if (c == '(' || c == '[' || c == '{') ++depth_;
            if ((c == ')' || c == ']' || c == '}') && depth_ > 0) --depth_;
        }
        emit(TokenKind::Op, pos_, pos_ + len, line_, column(pos_));
        pos_ += len;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_start_ = 0;
    std::uint32_t line_ = 1;
    int depth_ = 0;
    bool line_has_token_ = false;
    std::vector<Token> out_;
};

} // namespace detail

/// Tokenizes one source text. Both profiles lex identically; the profile is
/// recorded for callers that care about it.
inline TokenSequence tokenize_source(std::string_view text,
                                     TokenizerProfile profile = TokenizerProfile::Script,
                                     std::string file_id = {}) {
    (void)profile;
    TokenSequence seq;
    seq.file_id = std::move(file_id);
    seq.tokens = detail::Lexer(text).run();
    intern_tokens(seq);
    return seq;
}

} // namespace clonedist
