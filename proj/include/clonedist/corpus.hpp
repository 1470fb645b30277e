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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "clonedist/digest.hpp"
#include "clonedist/errors.hpp"

namespace clonedist {

namespace fs = std::filesystem;

enum class FileKind { Script, Notebook, Generic };

inline std::string_view to_string(FileKind kind) {
    switch (kind) {
    case FileKind::Script: return "script";
    case FileKind::Notebook: return "notebook";
    case FileKind::Generic: return "generic";
    }
    return "generic";
}

inline FileKind parse_file_kind(std::string_view text) {
    if (text == "script") return FileKind::Script;
    if (text == "notebook") return FileKind::Notebook;
    if (text == "generic") return FileKind::Generic;
    throw InputError("unknown file kind '" + std::string(text) + "'");
}

/// .py is a script, .ipynb a notebook; everything else needs the generic
/// tokenizer.
inline FileKind kind_from_extension(const fs::path& path) {
    const auto ext = path.extension().string();
    if (ext == ".py") return FileKind::Script;
    if (ext == ".ipynb") return FileKind::Notebook;
    return FileKind::Generic;
}

inline constexpr std::uint64_t kDefaultMaxBytes = 1u << 20;

struct CorpusFilters {
    /// Suffixes such as ".py"; empty selects every regular file.
    std::vector<std::string> extensions;
    std::uint64_t max_bytes = kDefaultMaxBytes;
    bool dedup = true;
    /// Overrides the extension-derived kind (used for the generic tokenizer).
    std::optional<FileKind> force_kind;
};

struct CorpusEntry {
    std::string path; // relative to root, forward slashes
    std::uint64_t bytes = 0;
    std::string content_hash;
    FileKind kind = FileKind::Generic;

    friend bool operator==(const CorpusEntry&, const CorpusEntry&) = default;
};

struct SkippedFile {
    std::string path;
    std::string reason; // "duplicate-content" | "too-large" | "io-error"

    friend bool operator==(const SkippedFile&, const SkippedFile&) = default;
};

struct CorpusManifest {
    std::string root;
    std::vector<CorpusEntry> entries;
    std::vector<SkippedFile> skipped;

    SetDigest digest() const {
        SetDigest d;
        for (const auto& e : entries) d.add(e.path, e.content_hash);
        return d;
    }

    friend bool operator==(const CorpusManifest&, const CorpusManifest&) = default;
};

inline std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.generic_string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path.generic_string());
    return std::move(buf).str();
}

/// Every regular file under `root` (symbolic links are not followed), as
/// sorted forward-slash relative paths.
inline std::vector<std::string> list_regular_files(const fs::path& root) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw InputError("corpus root is not a readable directory: " + root.generic_string());
    }
    fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
    if (ec) throw InputError("cannot read corpus root " + root.generic_string() + ": " + ec.message());

    std::vector<std::string> files;
    for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (ec) throw InputError("error walking " + root.generic_string() + ": " + ec.message());
        const auto status = it->symlink_status(ec);
        if (ec || !fs::is_regular_file(status)) continue;
        files.push_back(it->path().lexically_relative(root).generic_string());
    }
    std::sort(files.begin(), files.end());
    return files;
}

inline bool matches_extension(std::string_view path, const std::vector<std::string>& extensions) {
    if (extensions.empty()) return true;
    return std::any_of(extensions.begin(), extensions.end(),
                       [&](const std::string& ext) { return path.ends_with(ext); });
}

/// Lists, filters and deduplicates the files under `root`. Deterministic:
/// entries and skipped records follow lexicographic path order, and among
/// identical contents the first path wins.
inline CorpusManifest discover_corpus(const fs::path& root, const CorpusFilters& filters) {
    CorpusManifest manifest;
    manifest.root = root.generic_string();
    std::map<std::string, std::string> first_path_by_hash;

    for (const auto& rel : list_regular_files(root)) {
        if (!matches_extension(rel, filters.extensions)) continue;
        const fs::path full = root / fs::path(rel);
        std::error_code ec;
        const auto size = fs::file_size(full, ec);
        if (ec) {
            manifest.skipped.push_back({rel, "io-error"});
            continue;
        }
        if (size > filters.max_bytes) {
            manifest.skipped.push_back({rel, "too-large"});
            continue;
        }
        std::string hash;
        try {
            hash = sha256_hex(read_file(full));
        } catch (const IoError&) {
            manifest.skipped.push_back({rel, "io-error"});
            continue;
        }
        if (filters.dedup) {
            auto [it, inserted] = first_path_by_hash.emplace(hash, rel);
            if (!inserted) {
                manifest.skipped.push_back({rel, "duplicate-content"});
                continue;
            }
        }
        manifest.entries.push_back(
            CorpusEntry{rel, size, std::move(hash), filters.force_kind.value_or(kind_from_extension(rel))});
    }
    return manifest;
}

inline nlohmann::ordered_json to_json(const CorpusManifest& manifest) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["root"] = manifest.root;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : manifest.entries) {
        nlohmann::ordered_json entry;
        entry["path"] = e.path;
        entry["bytes"] = e.bytes;
        entry["content_hash"] = e.content_hash;
        entry["kind"] = std::string(to_string(e.kind));
        j["entries"].push_back(std::move(entry));
    }
    j["skipped"] = nlohmann::ordered_json::array();
    for (const auto& s : manifest.skipped) {
        nlohmann::ordered_json rec;
        rec["path"] = s.path;
        rec["reason"] = s.reason;
        j["skipped"].push_back(std::move(rec));
    }
    return j;
}

inline CorpusManifest manifest_from_json(const nlohmann::json& j) {
    try {
        if (j.at("version").get<int>() != 1) throw InputError("unsupported manifest version");
        CorpusManifest m;
        m.root = j.at("root").get<std::string>();
        for (const auto& e : j.at("entries")) {
            m.entries.push_back(CorpusEntry{e.at("path").get<std::string>(), e.at("bytes").get<std::uint64_t>(),
                                            e.at("content_hash").get<std::string>(),
                                            parse_file_kind(e.at("kind").get<std::string>())});
        }
        for (const auto& s : j.at("skipped")) {
            m.skipped.push_back(SkippedFile{s.at("path").get<std::string>(), s.at("reason").get<std::string>()});
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed manifest: ") + e.what());
    }
}

} // namespace clonedist
