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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace clonedist {

using SymbolId = std::uint32_t;

enum class TokenKind { Ident, Number, String, Op, Newline, Unknown, Barrier };

inline std::string_view to_string(TokenKind kind) {
    switch (kind) {
    case TokenKind::Ident: return "IDENT";
    case TokenKind::Number: return "NUMBER";
    case TokenKind::String: return "STRING";
    case TokenKind::Op: return "OP";
    case TokenKind::Newline: return "NEWLINE";
    case TokenKind::Unknown: return "UNKNOWN";
    case TokenKind::Barrier: return "BARRIER";
    }
    return "UNKNOWN";
}

struct Token {
    std::string text;
    TokenKind kind = TokenKind::Unknown;
    std::uint32_t line = 1; // 1-based
    std::uint32_t col = 1;  // 1-based, in bytes

    friend bool operator==(const Token&, const Token&) = default;
};

/// Half-open token range [begin, end) of one notebook cell.
struct CellSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    friend bool operator==(const CellSpan&, const CellSpan&) = default;
};

struct TokenSequence {
    std::string file_id;
    std::vector<Token> tokens;
    std::vector<SymbolId> interned;
    std::vector<CellSpan> cell_spans;

    std::size_t size() const { return tokens.size(); }
    std::span<const SymbolId> ids() const { return interned; }

    friend bool operator==(const TokenSequence&, const TokenSequence&) = default;
};

/// Maps token text to dense symbol ids in first-seen order. Equal text gets
/// an equal id; a table may be shared across files for consistent interning.
class InternTable {
public:
    SymbolId intern(std::string_view text) {
        auto it = ids_.find(std::string(text));
        if (it != ids_.end()) return it->second;
        const auto id = static_cast<SymbolId>(ids_.size());
        ids_.emplace(std::string(text), id);
        return id;
    }

    std::size_t size() const { return ids_.size(); }

private:
    std::unordered_map<std::string, SymbolId> ids_;
};

/// Rebuilds `seq.interned` from token texts using `table`.
inline void intern_tokens(TokenSequence& seq, InternTable& table) {
    seq.interned.clear();
    seq.interned.reserve(seq.tokens.size());
    for (const auto& tok : seq.tokens) seq.interned.push_back(table.intern(tok.text));
}

inline void intern_tokens(TokenSequence& seq) {
    InternTable table;
    intern_tokens(seq, table);
}

} // namespace clonedist
