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

#include <string>
#include <string_view>

#include <json.hpp>

#include "clonedist/errors.hpp"
#include "clonedist/tokenizer.hpp"

namespace clonedist {

enum class CellBoundary { Barrier, None };

/// Synthetic text of the k-th cell barrier. The lexer never produces a single
/// token with this shape, so barrier symbols are unique within a file.
inline std::string barrier_text(std::size_t k) { return "<cell-barrier#" + std::to_string(k) + ">"; }

/// Tokenizes the code cells of an nbformat 4 notebook, in order. With
/// CellBoundary::Barrier a unique BARRIER token separates consecutive code
/// cells so that no repeat can span two cells.
inline TokenSequence extract_notebook(std::string_view raw, CellBoundary boundary,
                                      std::string file_id = {}) {
    const std::string name = file_id.empty() ? std::string("<notebook>") : file_id;
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(raw);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(name + ": malformed notebook JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array()) {
        throw InputError(name + ": notebook has no \"cells\" array");
    }
    if (auto it = doc.find("nbformat"); it != doc.end()) {
        if (!it->is_number_integer() || it->get<long long>() < 4) {
            throw InputError(name + ": unsupported nbformat (need 4 or later)");
        }
    }

    TokenSequence seq;
    seq.file_id = std::move(file_id);
    std::size_t cell_index = 0;
    for (const auto& cell : doc["cells"]) {
        ++cell_index;
        if (!cell.is_object()) throw InputError(name + ": cell " + std::to_string(cell_index) + " is not an object");
        const auto type = cell.find("cell_type");
        if (type == cell.end() || !type->is_string() || type->get<std::string>() != "code") continue;

        std::string source;
        const auto src = cell.find("source");
        if (src == cell.end()) {
            throw InputError(name + ": code cell " + std::to_string(cell_index) + " has no source");
        }
        if (src->is_string()) {
            source = src->get<std::string>();
        } else if (src->is_array()) {
            for (const auto& line : *src) {
                if (!line.is_string()) {
                    throw InputError(name + ": code cell " + std::to_string(cell_index) +
                                     " source is not a string list");
                }
                source += line.get<std::string>();
            }
        } else {
            throw InputError(name + ": code cell " + std::to_string(cell_index) +
                             " source is neither a string nor a string list");
        }

        if (!seq.cell_spans.empty() && boundary == CellBoundary::Barrier) {
            seq.tokens.push_back(
                Token{barrier_text(seq.cell_spans.size()), TokenKind::Barrier, 1, 1});
        }
        auto cell_tokens = detail::Lexer(source).run();
        const std::size_t begin = seq.tokens.size();
        seq.tokens.insert(seq.tokens.end(), std::make_move_iterator(cell_tokens.begin()),
                          std::make_move_iterator(cell_tokens.end()));
        seq.cell_spans.push_back(CellSpan{begin, seq.tokens.size()});
    }
    intern_tokens(seq);
    return seq;
}

} // namespace clonedist
