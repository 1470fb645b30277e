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

#include "clonedist/corpus.hpp"

#include <set>
#include <unistd.h>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace clonedist {
namespace {

using testing::TempDir;
using testing::write_file;

CorpusFilters py_only() {
    CorpusFilters f;
    f.extensions = {".py"};
    return f;
}

TEST(Corpus, EmptyDirectory) {
    TempDir dir;
    const auto m = discover_corpus(dir.path(), py_only());
    EXPECT_TRUE(m.entries.empty());
    EXPECT_TRUE(m.skipped.empty());
}

TEST(Corpus, DedupAndExtensionFilter) {
    TempDir dir;
    write_file(dir / "a.py", "x = 1\n");
    write_file(dir / "b.py", "x = 1\n");
    write_file(dir / "c.txt", "x = 1\n");
    const auto m = discover_corpus(dir.path(), py_only());
    ASSERT_EQ(m.entries.size(), 1u);
    EXPECT_EQ(m.entries[0].path, "a.py");
    EXPECT_EQ(m.entries[0].kind, FileKind::Script);
    EXPECT_EQ(m.entries[0].bytes, 6u);
    EXPECT_EQ(m.entries[0].content_hash, sha256_hex("x = 1\n"));
    EXPECT_EQ(m.skipped, (std::vector<SkippedFile>{{"b.py", "duplicate-content"}}));
}

TEST(Corpus, NotebooksSortedByPath) {
    TempDir dir;
    write_file(dir / "z.ipynb", R"({"cells": [], "id": 1})");
    write_file(dir / "sub/b.ipynb", R"({"cells": [], "id": 2})");
    write_file(dir / "a.ipynb", R"({"cells": [], "id": 3})");
    CorpusFilters f;
    f.extensions = {".ipynb"};
    const auto m = discover_corpus(dir.path(), f);
    ASSERT_EQ(m.entries.size(), 3u);
    EXPECT_EQ(m.entries[0].path, "a.ipynb");
    EXPECT_EQ(m.entries[1].path, "sub/b.ipynb");
    EXPECT_EQ(m.entries[2].path, "z.ipynb");
    for (const auto& e : m.entries) EXPECT_EQ(e.kind, FileKind::Notebook);
}

TEST(Corpus, NoDedupKeepsDuplicates) {
    TempDir dir;
    write_file(dir / "a.py", "same");
    write_file(dir / "b.py", "same");
    auto f = py_only();
    f.dedup = false;
    EXPECT_EQ(discover_corpus(dir.path(), f).entries.size(), 2u);
}

TEST(Corpus, TooLargeIsSkipped) {
    TempDir dir;
    write_file(dir / "big.py", std::string(100, 'x'));
    write_file(dir / "small.py", "y");
    auto f = py_only();
    f.max_bytes = 10;
    const auto m = discover_corpus(dir.path(), f);
    ASSERT_EQ(m.entries.size(), 1u);
    EXPECT_EQ(m.skipped, (std::vector<SkippedFile>{{"big.py", "too-large"}}));
}

TEST(Corpus, UnreadableFileIsRecorded) {
    if (::geteuid() == 0) GTEST_SKIP() << "permissions are not enforced for root";
    TempDir dir;
    write_file(dir / "a.py", "x");
    fs::permissions(dir / "a.py", fs::perms::none);
    const auto m = discover_corpus(dir.path(), py_only());
    EXPECT_EQ(m.skipped, (std::vector<SkippedFile>{{"a.py", "io-error"}}));
}

TEST(Corpus, SymlinksAreNotFollowed) {
    TempDir dir;
    write_file(dir / "real/a.py", "x = 1");
    fs::create_directory_symlink(dir / "real", dir / "loop");
    fs::create_symlink(dir / "real/a.py", dir / "link.py");
    const auto m = discover_corpus(dir.path(), py_only());
    ASSERT_EQ(m.entries.size(), 1u);
    EXPECT_EQ(m.entries[0].path, "real/a.py");
}

TEST(Corpus, MissingRootIsAnInputError) {
    TempDir dir;
    EXPECT_THROW(discover_corpus(dir / "nope", py_only()), InputError);
    write_file(dir / "file", "x");
    EXPECT_THROW(discover_corpus(dir / "file", py_only()), InputError);
}

TEST(Corpus, ForcedGenericKindSelectsEverything) {
    TempDir dir;
    write_file(dir / "a.c", "int x;");
    write_file(dir / "b.py", "x = 1");
    CorpusFilters f;
    f.force_kind = FileKind::Generic;
    const auto m = discover_corpus(dir.path(), f);
    ASSERT_EQ(m.entries.size(), 2u);
    for (const auto& e : m.entries) EXPECT_EQ(e.kind, FileKind::Generic);
}

TEST(Corpus, PropertyCountingAndDeterminism) {
    TempDir dir;
    std::mt19937_64 rng(4);
    const std::vector<std::string> exts{".py", ".ipynb", ".txt", ""};
    std::uniform_int_distribution<int> ext(0, 3), content(0, 9), size(0, 40);
    for (int i = 0; i < 60; ++i) {
        std::string body(static_cast<std::size_t>(size(rng)), 'a');
        body += std::to_string(content(rng));
        write_file(dir / ("d" + std::to_string(i % 4) + "/f" + std::to_string(i) + exts[ext(rng) % 4]), body);
    }
    auto f = py_only();
    f.max_bytes = 30;
    const auto m = discover_corpus(dir.path(), f);
    const auto all = list_regular_files(dir.path());
    std::size_t non_matching = 0;
    for (const auto& p : all) non_matching += matches_extension(p, f.extensions) ? 0 : 1;
    EXPECT_EQ(m.entries.size() + m.skipped.size() + non_matching, all.size());

    std::set<std::string> hashes;
    for (const auto& e : m.entries) EXPECT_TRUE(hashes.insert(e.content_hash).second);
    EXPECT_TRUE(std::is_sorted(m.entries.begin(), m.entries.end(),
                               [](const CorpusEntry& a, const CorpusEntry& b) { return a.path < b.path; }));

    EXPECT_EQ(to_json(m).dump(), to_json(discover_corpus(dir.path(), f)).dump());
    EXPECT_EQ(manifest_from_json(nlohmann::json::parse(to_json(m).dump())), m);
}

TEST(Corpus, ManifestJsonShape) {
    TempDir dir;
    write_file(dir / "a.py", "x");
    const auto j = to_json(discover_corpus(dir.path(), py_only()));
    EXPECT_EQ(j["version"], 1);
    EXPECT_EQ(j["entries"][0]["path"], "a.py");
    EXPECT_EQ(j["entries"][0]["kind"], "script");
    EXPECT_TRUE(j["skipped"].is_array());
    EXPECT_EQ(j.begin().key(), "version");
}

TEST(Digest, SetDigestIsOrderIndependent) {
    SetDigest a, b, c;
    a.add("x", "1");
    a.add("y", "2");
    b.add("y", "2");
    b.add("x", "1");
    EXPECT_EQ(a, b);
    c.combine(a);
    EXPECT_EQ(c, a);
    EXPECT_EQ(SetDigest::from_hex(a.hex()), a);
    EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

} // namespace
} // namespace clonedist
