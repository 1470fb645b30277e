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
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clonedist/errors.hpp"
#include "clonedist/suffix_array.hpp"
#include "clonedist/token.hpp"

namespace clonedist {

enum class CountingMode { Distinct, Maximal };

inline std::string_view to_string(CountingMode mode) {
    return mode == CountingMode::Distinct ? "distinct" : "maximal";
}

inline CountingMode parse_counting_mode(std::string_view text) {
    if (text == "distinct") return CountingMode::Distinct;
    if (text == "maximal") return CountingMode::Maximal;
    throw DomainError("unknown counting mode '" + std::string(text) + "'");
}

/// Positive ratio num/den in lowest terms, 0 < num/den <= 1.
class CapRatio {
public:
    constexpr CapRatio() = default;
    CapRatio(std::uint32_t num, std::uint32_t den) {
        if (num == 0 || den == 0 || num > den) {
            throw DomainError("cap ratio must lie in (0, 1], got " + std::to_string(num) + "/" +
                              std::to_string(den));
        }
        const auto g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    static CapRatio parse(std::string_view text) {
        const auto slash = text.find('/');
        auto to_u32 = [&](std::string_view digits) {
            if (digits.empty() || digits.size() > 9 ||
                !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
                throw DomainError("malformed cap ratio '" + std::string(text) + "'");
            }
            return static_cast<std::uint32_t>(std::stoul(std::string(digits)));
        };
        if (slash == std::string_view::npos) return CapRatio(to_u32(text), 1);
        return CapRatio(to_u32(text.substr(0, slash)), to_u32(text.substr(slash + 1)));
    }

    std::uint32_t num() const { return num_; }
    std::uint32_t den() const { return den_; }

    /// floor(length * ratio)
    std::size_t cap(std::size_t length) const {
        return static_cast<std::size_t>(static_cast<std::uint64_t>(length) * num_ / den_);
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend bool operator==(const CapRatio&, const CapRatio&) = default;

private:
    std::uint32_t num_ = 1;
    std::uint32_t den_ = 2;
};

struct ScanConfig {
    std::uint32_t min_size = 3;
    CapRatio cap_ratio{};
    CountingMode mode = CountingMode::Distinct;

    void validate() const {
        if (min_size < 1) throw DomainError("min_size must be at least 1");
    }

    friend bool operator==(const ScanConfig&, const ScanConfig&) = default;
};

using SizeCounts = std::map<std::uint32_t, std::uint64_t>;

/// Duplicates of each exact size found in one file. Only positive counts are
/// stored, and only for sizes in [min_size, floor(L * cap_ratio)].
struct DuplicateProfile {
    std::string file_id;
    std::size_t token_count = 0;
    SizeCounts counts;
    ScanConfig config;

    friend bool operator==(const DuplicateProfile&, const DuplicateProfile&) = default;
};

/// One maximal exact repeat and every position where it starts.
struct CloneGroup {
    std::uint32_t length = 0;
    std::vector<std::size_t> occurrences;
    std::vector<SymbolId> text_ids;

    friend bool operator==(const CloneGroup&, const CloneGroup&) = default;
};

namespace detail {

struct SuffixIndex {
    std::vector<Index> sa;
    std::vector<Index> lcp;
};

inline SuffixIndex build_index(std::span<const SymbolId> ids) {
    SuffixIndex index;
    index.sa = build_suffix_array(ids);
    index.lcp = build_lcp_array<SymbolId>(ids, index.sa);
    return index;
}

/// Calls visit(lcp, lb, rb, left_maximal) for every lcp-interval with a
/// positive lcp value, i.e. every right-maximal repeat. The interval
/// [lb, rb] indexes the suffix array; `left_maximal` is true when the
/// preceding symbols of the occurrences are not all one and the same.
template <typename Visit>
void for_each_lcp_interval(std::span<const SymbolId> ids, const SuffixIndex& index, Visit&& visit) {
    const std::size_t n = ids.size();
    if (n < 2) return;
    const auto& sa = index.sa;
    const auto& lcp = index.lcp;

    // prefix counts of "left context differs from previous suffix's" and of
    // "suffix starts the sequence" (no left context at all)
    std::vector<std::uint32_t> changes(n + 1, 0);
    std::vector<std::uint32_t> starts(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const bool changed = k > 0 && (sa[k] == 0 || sa[k - 1] == 0 ||
                                       ids[sa[k] - 1] != ids[sa[k - 1] - 1]);
        changes[k + 1] = changes[k] + (changed ? 1 : 0);
        starts[k + 1] = starts[k] + (sa[k] == 0 ? 1 : 0);
    }
    auto left_maximal = [&](std::size_t lb, std::size_t rb) {
        return changes[rb + 1] - changes[lb + 1] > 0 || starts[rb + 1] - starts[lb] > 0;
    };

    struct Open {
        Index lcp;
        std::size_t lb;
    };
    std::vector<Open> stack{{0, 0}};
    for (std::size_t i = 1; i <= n; ++i) {
        const Index cur = i < n ? lcp[i] : 0;
        std::size_t lb = i - 1;
        while (cur < stack.back().lcp) {
            const Open top = stack.back();
            stack.pop_back();
            visit(top.lcp, top.lb, i - 1, left_maximal(top.lb, i - 1));
            lb = top.lb;
        }
        if (cur > stack.back().lcp) stack.push_back({cur, lb});
    }
}

} // namespace detail

/// Counts the duplicates of every size in [min_size, floor(L * cap_ratio)].
///
/// Distinct mode counts distinct id-subsequences of that exact length which
/// start at two or more (possibly overlapping) positions. A repeated string
/// of length s corresponds to a maximal run of adjacent suffixes whose LCP is
/// at least s, so each LCP rise from a to b opens one run for every length in
/// (a, b]; a difference array over lengths sums them in O(L).
///
/// Maximal mode counts maximal repeats of each exact length: lcp-intervals
/// (right-maximal) whose occurrences do not all share a left neighbour.
inline DuplicateProfile count_duplicates(const TokenSequence& seq, const ScanConfig& config) {
    config.validate();
    DuplicateProfile profile;
    profile.file_id = seq.file_id;
    profile.token_count = seq.interned.size();
    profile.config = config;

    const std::size_t cap = config.cap_ratio.cap(profile.token_count);
    if (cap < config.min_size) return profile;
    const auto ids = seq.ids();
    const auto index = detail::build_index(ids);
    const std::size_t lo = config.min_size;

    if (config.mode == CountingMode::Distinct) {
        std::vector<std::int64_t> diff(cap + 2, 0);
        for (std::size_t i = 1; i < ids.size(); ++i) {
            const std::size_t prev = i >= 2 ? index.lcp[i - 1] : 0;
            const std::size_t cur = index.lcp[i];
            if (cur <= prev) continue;
            const std::size_t from = std::max(prev + 1, lo);
            const std::size_t to = std::min(cur, cap);
            if (from > to) continue;
            ++diff[from];
            --diff[to + 1];
        }
        std::int64_t running = 0;
        for (std::size_t s = lo; s <= cap; ++s) {
            running += diff[s];
            if (running > 0) profile.counts[static_cast<std::uint32_t>(s)] = static_cast<std::uint64_t>(running);
        }
    } else {
        detail::for_each_lcp_interval(ids, index, [&](Index len, std::size_t, std::size_t, bool left_max) {
            if (left_max && len >= lo && len <= cap) ++profile.counts[len];
        });
    }
    return profile;
}

/// All maximal repeats of length >= min_size with their full occurrence
/// lists, uncapped. Sorted by first occurrence, then by length descending.
inline std::vector<CloneGroup> find_clone_groups(const TokenSequence& seq, std::uint32_t min_size) {
    if (min_size < 1) throw DomainError("min_size must be at least 1");
    const auto ids = seq.ids();
    const auto index = detail::build_index(ids);
    std::vector<CloneGroup> groups;
    detail::for_each_lcp_interval(ids, index, [&](Index len, std::size_t lb, std::size_t rb, bool left_max) {
        if (!left_max || len < min_size) return;
        CloneGroup group;
        group.length = len;
        group.occurrences.assign(index.sa.begin() + static_cast<std::ptrdiff_t>(lb),
                                 index.sa.begin() + static_cast<std::ptrdiff_t>(rb) + 1);
        std::sort(group.occurrences.begin(), group.occurrences.end());
        const auto first = group.occurrences.front();
        group.text_ids.assign(ids.begin() + static_cast<std::ptrdiff_t>(first),
                              ids.begin() + static_cast<std::ptrdiff_t>(first + len));
        groups.push_back(std::move(group));
    });
    std::sort(groups.begin(), groups.end(), [](const CloneGroup& a, const CloneGroup& b) {
        if (a.occurrences.front() != b.occurrences.front()) {
            return a.occurrences.front() < b.occurrences.front();
        }
        return a.length > b.length;
    });
    return groups;
}

} // namespace clonedist
