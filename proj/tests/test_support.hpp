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

// Shared helpers for the test binaries: temporary directories, sequence
// builders, and an independent brute-force repeat counter used to freeze
// expected values.

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "clonedist/clone_index.hpp"
#include "clonedist/token.hpp"

namespace clonedist::testing {

namespace fs = std::filesystem;

class TempDir {
public:
    TempDir() {
        static std::mt19937_64 rng(std::random_device{}());
        path_ = fs::temp_directory_path() / ("clonedist-test-" + std::to_string(rng()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const fs::path& path() const { return path_; }
    fs::path operator/(std::string_view rel) const { return path_ / fs::path(rel); }

private:
    fs::path path_;
};

inline void write_file(const fs::path& path, std::string_view content) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
}

inline std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline fs::path fixture_dir() { return fs::path(CLONEDIST_FIXTURE_DIR); }

/// A sequence whose symbols are given directly; token texts mirror the ids.
inline TokenSequence from_ids(std::vector<SymbolId> ids, std::string file_id = "seq") {
    TokenSequence seq;
    seq.file_id = std::move(file_id);
    for (auto id : ids) seq.tokens.push_back(Token{"s" + std::to_string(id), TokenKind::Ident, 1, 1});
    seq.interned = std::move(ids);
    return seq;
}

/// One symbol per character: "abab" -> a b a b.
inline TokenSequence from_letters(std::string_view letters) {
    std::vector<SymbolId> ids;
    for (char c : letters) ids.push_back(static_cast<SymbolId>(c - 'a'));
    return from_ids(std::move(ids), std::string(letters));
}

inline TokenSequence random_ids(std::mt19937_64& rng, std::size_t max_len, std::uint32_t max_alphabet) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<std::uint32_t> alpha(1, max_alphabet);
    const auto n = len(rng);
    const auto k = alpha(rng);
    std::uniform_int_distribution<SymbolId> sym(0, k - 1);
    std::vector<SymbolId> ids(n);
    for (auto& id : ids) id = sym(rng);
    return from_ids(std::move(ids));
}

/// Independent reference: all windows as vectors in an ordered map.
/// Returns, per size, the occurrence lists of every window that occurs twice.
inline std::map<std::size_t, std::map<std::vector<SymbolId>, std::vector<std::size_t>>>
repeated_windows(const std::vector<SymbolId>& ids, std::size_t min_size, std::size_t max_size) {
    std::map<std::size_t, std::map<std::vector<SymbolId>, std::vector<std::size_t>>> out;
    for (std::size_t s = min_size; s <= max_size && s <= ids.size(); ++s) {
        std::map<std::vector<SymbolId>, std::vector<std::size_t>> all;
        for (std::size_t p = 0; p + s <= ids.size(); ++p) {
            all[std::vector<SymbolId>(ids.begin() + p, ids.begin() + p + s)].push_back(p);
        }
        for (auto& [w, occ] : all) {
            if (occ.size() >= 2) out[s][w] = occ;
        }
    }
    return out;
}

inline bool is_maximal(const std::vector<SymbolId>& ids, std::size_t length, const std::vector<std::size_t>& occ) {
    auto same_neighbour = [&](auto neighbour) {
        std::optional<SymbolId> seen;
        for (auto p : occ) {
            const auto n = neighbour(p);
            if (!n) return false;
            if (seen && *seen != *n) return false;
            seen = n;
        }
        return true;
    };
    const bool left = same_neighbour([&](std::size_t p) -> std::optional<SymbolId> {
        return p == 0 ? std::nullopt : std::optional<SymbolId>(ids[p - 1]);
    });
    const bool right = same_neighbour([&](std::size_t p) -> std::optional<SymbolId> {
        return p + length >= ids.size() ? std::nullopt : std::optional<SymbolId>(ids[p + length]);
    });
    return !left && !right;
}

} // namespace clonedist::testing
