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

// Suffix array by prefix doubling with counting sorts, O(n log n), and the
// Kasai LCP array, O(n). Works over arbitrary integer symbol sequences.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace clonedist {

using Index = std::uint32_t;

template <typename Symbol>
std::vector<Index> build_suffix_array(std::span<const Symbol> s) {
    const std::size_t n = s.size();
    std::vector<Index> sa(n);
    if (n == 0) return sa;

    // dense initial ranks
    std::vector<Symbol> alphabet(s.begin(), s.end());
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    std::vector<Index> rank(n);
    for (std::size_t i = 0; i < n; ++i) {
        rank[i] = static_cast<Index>(
            std::lower_bound(alphabet.begin(), alphabet.end(), s[i]) - alphabet.begin());
    }
    std::size_t classes = alphabet.size();

    std::vector<Index> count(std::max(classes, n) + 1);
    std::vector<Index> second(n);
    std::vector<Index> next_rank(n);

    auto counting_sort = [&](std::span<const Index> order) {
        std::fill(count.begin(), count.begin() + classes + 1, 0);
        for (Index i : order) ++count[rank[i] + 1];
        std::partial_sum(count.begin(), count.begin() + classes + 1, count.begin());
        for (Index i : order) sa[count[rank[i]]++] = i;
    };

    std::iota(second.begin(), second.end(), Index{0});
    counting_sort(second);

    for (std::size_t k = 1; classes < n; k <<= 1) {
        // order by second key: suffixes without a k-ahead partner sort first
        std::size_t p = 0;
        for (std::size_t i = n - std::min(k, n); i < n; ++i) second[p++] = static_cast<Index>(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (sa[j] >= k) second[p++] = static_cast<Index>(sa[j] - k);
        }
        counting_sort(second);

        auto key2 = [&](Index i) -> std::int64_t {
            return i + k < n ? static_cast<std::int64_t>(rank[i + k]) : -1;
        };
        next_rank[sa[0]] = 0;
        Index r = 0;
        for (std::size_t j = 1; j < n; ++j) {
            if (rank[sa[j]] != rank[sa[j - 1]] || key2(sa[j]) != key2(sa[j - 1])) ++r;
            next_rank[sa[j]] = r;
        }
        rank.swap(next_rank);
        classes = static_cast<std::size_t>(r) + 1;
        if (k >= n) break;
    }
    return sa;
}

/// lcp[i] = length of the longest common prefix of suffixes sa[i-1] and sa[i];
/// lcp[0] = 0.
template <typename Symbol>
std::vector<Index> build_lcp_array(std::span<const Symbol> s, std::span<const Index> sa) {
    const std::size_t n = s.size();
    std::vector<Index> lcp(n, 0);
    if (n == 0) return lcp;
    std::vector<Index> inverse(n);
    for (std::size_t i = 0; i < n; ++i) inverse[sa[i]] = static_cast<Index>(i);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (inverse[i] == 0) {
            h = 0;
            continue;
        }
        const std::size_t j = sa[inverse[i] - 1];
        while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
        lcp[inverse[i]] = static_cast<Index>(h);
        if (h > 0) --h;
    }
    return lcp;
}

} // namespace clonedist
