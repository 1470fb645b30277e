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

// Corpus scan and profile aggregation, staged through JSON Lines files.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "clonedist/clone_index.hpp"
#include "clonedist/corpus.hpp"
#include "clonedist/distribution.hpp"
#include "clonedist/errors.hpp"
#include "clonedist/notebook.hpp"
#include "clonedist/tokenizer.hpp"
#include "clonedist/utf8.hpp"

namespace clonedist {

enum class Language { Python, Notebook, Generic };

inline std::string_view to_string(Language lang) {
    switch (lang) {
    case Language::Python: return "python";
    case Language::Notebook: return "notebook";
    case Language::Generic: return "generic";
    }
    return "generic";
}

inline Language parse_language(std::string_view text) {
    if (text == "python") return Language::Python;
    if (text == "notebook") return Language::Notebook;
    if (text == "generic") return Language::Generic;
    throw DomainError("unknown language '" + std::string(text) + "'");
}

inline CorpusFilters filters_for(Language lang) {
    CorpusFilters f;
    switch (lang) {
    case Language::Python: f.extensions = {".py"}; break;
    case Language::Notebook: f.extensions = {".ipynb"}; break;
    case Language::Generic: f.force_kind = FileKind::Generic; break;
    }
    return f;
}

/// Tokenizes file content according to its kind.
inline TokenSequence tokenize_content(std::string_view content, FileKind kind, CellBoundary boundary,
                                      std::string file_id) {
    switch (kind) {
    case FileKind::Notebook: return extract_notebook(content, boundary, std::move(file_id));
    case FileKind::Script:
        return tokenize_source(sanitize_utf8(content), TokenizerProfile::Script, std::move(file_id));
    case FileKind::Generic:
        return tokenize_source(sanitize_utf8(content), TokenizerProfile::Generic, std::move(file_id));
    }
    return {};
}

inline TokenSequence tokenize_file(const fs::path& path, FileKind kind, CellBoundary boundary) {
    return tokenize_content(read_file(path), kind, boundary, path.generic_string());
}

// Profile records ---------------------------------------------------------

inline nlohmann::ordered_json profile_record(const DuplicateProfile& p, std::string_view hash,
                                             std::string_view frontend) {
    nlohmann::ordered_json j;
    j["path"] = p.file_id;
    j["hash"] = std::string(hash);
    j["token_count"] = p.token_count;
    j["counts"] = counts_to_json(p.counts);
    j["mode"] = std::string(to_string(p.config.mode));
    j["min_size"] = p.config.min_size;
    j["cap_ratio"] = p.config.cap_ratio.str();
    j["frontend"] = std::string(frontend);
    return j;
}

inline nlohmann::ordered_json error_record(std::string_view path, std::string_view reason, std::string_view hash) {
    nlohmann::ordered_json j;
    j["path"] = std::string(path);
    j["error"] = std::string(reason);
    if (!hash.empty()) j["hash"] = std::string(hash);
    return j;
}

struct ProfileLine {
    bool is_error = false;
    std::string error;
    std::string hash;
    std::string frontend;
    DuplicateProfile profile;
};

inline ProfileLine parse_profile_line(std::string_view line) {
    ProfileLine out;
    try {
        const auto j = nlohmann::json::parse(line);
        out.profile.file_id = j.at("path").get<std::string>();
        if (j.contains("hash")) out.hash = j.at("hash").get<std::string>();
        if (j.contains("error")) {
            out.is_error = true;
            out.error = j.at("error").get<std::string>();
            return out;
        }
        out.profile.token_count = j.at("token_count").get<std::size_t>();
        out.profile.counts = counts_from_json(j.at("counts"));
        out.profile.config.mode = parse_counting_mode(j.at("mode").get<std::string>());
        out.profile.config.min_size = j.at("min_size").get<std::uint32_t>();
        out.profile.config.cap_ratio = CapRatio::parse(j.at("cap_ratio").get<std::string>());
        out.profile.config.validate();
        out.frontend = j.value("frontend", std::string("unknown"));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed profile record: ") + e.what());
    } catch (const DomainError& e) {
        throw InputError(std::string("malformed profile record: ") + e.what());
    }
    return out;
}

// Scan ---------------------------------------------------------------------

struct ScanOptions {
    Language lang = Language::Python;
    fs::path input;
    ScanConfig config;
    CellBoundary boundary = CellBoundary::Barrier;
    std::uint64_t max_bytes = kDefaultMaxBytes;
    bool dedup = true;
    unsigned jobs = 1;
};

struct ScanSummary {
    std::size_t files = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;
    CorpusManifest manifest;
};

/// Result line for one manifest entry; never throws for per-file problems.
inline std::string scan_entry(const ScanOptions& opts, const CorpusEntry& entry, bool& failed) {
    const auto frontend = to_string(opts.lang);
    try {
        auto seq = tokenize_file(opts.input / fs::path(entry.path), entry.kind, opts.boundary);
        seq.file_id = entry.path;
        failed = false;
        return profile_record(count_duplicates(seq, opts.config), entry.content_hash, frontend).dump();
    } catch (const InputError& e) {
        failed = true;
        return error_record(entry.path, e.what(), entry.content_hash).dump();
    } catch (const IoError& e) {
        failed = true;
        return error_record(entry.path, e.what(), entry.content_hash).dump();
    }
}

/// discover -> tokenize -> count, one JSON line per manifest entry in
/// manifest order. Work is spread over `opts.jobs` threads in bounded
/// batches; the output does not depend on the thread count.
inline ScanSummary scan_corpus(const ScanOptions& opts, std::ostream& out) {
    opts.config.validate();
    CorpusFilters filters = filters_for(opts.lang);
    filters.max_bytes = opts.max_bytes;
    filters.dedup = opts.dedup;

    ScanSummary summary;
    summary.manifest = discover_corpus(opts.input, filters);
    const auto& entries = summary.manifest.entries;
    summary.files = entries.size();
    summary.skipped = summary.manifest.skipped.size();
    summary.failures = static_cast<std::size_t>(
        std::count_if(summary.manifest.skipped.begin(), summary.manifest.skipped.end(),
                      [](const SkippedFile& s) { return s.reason == "io-error"; }));

    const unsigned jobs = std::max(1u, opts.jobs);
    const std::size_t batch = std::max<std::size_t>(64, std::size_t{jobs} * 16);
    std::vector<std::string> lines;
    std::vector<char> failed;
    for (std::size_t base = 0; base < entries.size(); base += batch) {
        const std::size_t count = std::min(batch, entries.size() - base);
        lines.assign(count, {});
        failed.assign(count, 0);
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                bool f = false;
                lines[i] = scan_entry(opts, entries[base + i], f);
                failed[i] = f ? 1 : 0;
            }
        };
        if (jobs == 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < std::min<std::size_t>(jobs, count); ++t) pool.emplace_back(work);
        }
        for (std::size_t i = 0; i < count; ++i) {
            out << lines[i] << '\n';
            summary.failures += static_cast<std::size_t>(failed[i]);
        }
    }
    out.flush();
    if (!out) throw IoError("failed to write profiles");
    return summary;
}

// Aggregate ------------------------------------------------------------------

struct AggregateResult {
    CloneSizeDistribution distribution;
    std::uint64_t error_records = 0;
};

/// Reduces a JSON Lines profile stream. All profiles must share one scan
/// configuration and one frontend.
inline AggregateResult aggregate_stream(std::istream& in) {
    DistributionBuilder builder;
    bool have_frontend = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        ProfileLine rec;
        try {
            rec = parse_profile_line(line);
        } catch (const InputError& e) {
            throw InputError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (!rec.hash.empty()) builder.provenance().manifest.add(rec.profile.file_id, rec.hash);
        if (rec.is_error) {
            builder.add_error();
            continue;
        }
        if (!have_frontend) {
            builder.provenance().frontend = rec.frontend;
            have_frontend = true;
        } else if (builder.provenance().frontend != rec.frontend) {
            throw ConfigError("line " + std::to_string(line_no) + ": frontend '" + rec.frontend +
                              "' differs from '" + builder.provenance().frontend + "'");
        }
        builder.add(rec.profile);
    }
    if (in.bad()) throw IoError("failed to read profiles");
    return {builder.result(), builder.error_count()};
}

} // namespace clonedist
