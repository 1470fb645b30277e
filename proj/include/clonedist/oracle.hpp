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

// Brute-force reference for count_duplicates: every window of every size goes
// into a hash multiset keyed by its symbol content. Quadratic-to-cubic in L,
// so it is guarded to L <= kOracleMaxLength.

#include <cstddef>
#include <algorithm>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "clonedist/clone_index.hpp"
#include "clonedist/errors.hpp"

namespace clonedist {

inline constexpr std::size_t kOracleMaxLength = 10000;

namespace detail {

struct WindowHash {
    std::size_t operator()(std::span<const SymbolId> w) const {
        std::size_t h = 1469598103934665603ull;
        for (SymbolId id : w) {
            h ^= std::hash<SymbolId>{}(id);
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct WindowEqual {
    bool operator()(std::span<const SymbolId> a, std::span<const SymbolId> b) const {
        return std::equal(a.begin(), a.end(), b.begin(), b.end());
    }
};

} // namespace detail

inline DuplicateProfile count_duplicates_oracle(const TokenSequence& seq, const ScanConfig& config) {
    config.validate();
    const auto ids = seq.ids();
    const std::size_t n = ids.size();
    if (n > kOracleMaxLength) {
        throw SizeError("oracle refuses " + std::to_string(n) + " tokens (limit " +
                        std::to_string(kOracleMaxLength) + ")");
    }
    DuplicateProfile profile;
    profile.file_id = seq.file_id;
    profile.token_count = n;
    profile.config = config;

    const std::size_t cap = config.cap_ratio.cap(n);
    for (std::size_t s = config.min_size; s <= cap; ++s) {
        std::unordered_map<std::span<const SymbolId>, std::vector<std::size_t>, detail::WindowHash,
                           detail::WindowEqual>
            classes;
        for (std::size_t p = 0; p + s <= n; ++p) classes[ids.subspan(p, s)].push_back(p);

        std::uint64_t count = 0;
        for (const auto& [window, positions] : classes) {
            if (positions.size() < 2) continue;
            if (config.mode == CountingMode::Distinct) {
                ++count;
                continue;
            }
            // an extension that every occurrence shares keeps the whole set
            const std::size_t first = positions.front();
            bool left_shared = first > 0;
            bool right_shared = first + s < n;
            const SymbolId left = left_shared ? ids[first - 1] : 0;
            const SymbolId right = right_shared ? ids[first + s] : 0;
            for (std::size_t p : positions) {
                if (p == 0 || ids[p - 1] != left) left_shared = false;
                if (p + s >= n || ids[p + s] != right) right_shared = false;
            }
            if (!left_shared && !right_shared) ++count;
        }
        if (count > 0) profile.counts[static_cast<std::uint32_t>(s)] = count;
    }
    return profile;
}

/// Brute-force maximal repeats of length >= min_size, uncapped, in the order
/// find_clone_groups uses.
inline std::vector<CloneGroup> find_clone_groups_oracle(const TokenSequence& seq, std::uint32_t min_size) {
    if (min_size < 1) throw DomainError("min_size must be at least 1");
    const auto ids = seq.ids();
    const std::size_t n = ids.size();
    if (n > kOracleMaxLength) {
        throw SizeError("oracle refuses " + std::to_string(n) + " tokens (limit " +
                        std::to_string(kOracleMaxLength) + ")");
    }
    std::vector<CloneGroup> groups;
    for (std::size_t s = min_size; s < n; ++s) {
        std::unordered_map<std::span<const SymbolId>, std::vector<std::size_t>, detail::WindowHash,
                           detail::WindowEqual>
            classes;
        for (std::size_t p = 0; p + s <= n; ++p) classes[ids.subspan(p, s)].push_back(p);
        for (auto& [window, positions] : classes) {
            if (positions.size() < 2) continue;
            const std::size_t first = positions.front();
            bool left_shared = first > 0;
            bool right_shared = first + s < n;
            for (std::size_t p : positions) {
                if (p == 0 || ids[p - 1] != ids[first - (first > 0 ? 1 : 0)]) left_shared = false;
                if (p + s >= n || ids[p + s] != ids[first + s < n ? first + s : 0]) right_shared = false;
            }
            if (left_shared || right_shared) continue;
            groups.push_back(CloneGroup{static_cast<std::uint32_t>(s), positions,
                                        std::vector<SymbolId>(window.begin(), window.end())});
        }
    }
    std::sort(groups.begin(), groups.end(), [](const CloneGroup& a, const CloneGroup& b) {
        if (a.occurrences.front() != b.occurrences.front()) return a.occurrences.front() < b.occurrences.front();
        return a.length > b.length;
    });
    return groups;
}

} // namespace clonedist
