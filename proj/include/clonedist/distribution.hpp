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

// Corpus clone-size distributions and quantile-rank threshold transfer.
//
// A distribution stores integer totals per duplicate size (summed over files)
// and the file count; the per-file mean w(s) = totals[s] / N is derived. The
// transferred quantity is the duplicate-size mass function: the rank of a
// threshold t is the share of duplicate mass strictly below t, and 1 - rank is
// the share that a detector with minimum size t would highlight.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "clonedist/clone_index.hpp"
#include "clonedist/digest.hpp"
#include "clonedist/errors.hpp"
#include "clonedist/rational.hpp"

namespace clonedist {

struct Provenance {
    std::string frontend;  // "python" | "notebook" | "generic"
    SetDigest manifest;    // digest of the scanned (path, content hash) set

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct CloneSizeDistribution {
    SizeCounts totals;
    std::uint64_t file_count = 0;
    ScanConfig config;
    Provenance provenance;

    bool empty() const { return totals.empty(); }

    std::uint64_t total_mass() const {
        std::uint64_t w = 0;
        for (const auto& [size, count] : totals) w += count;
        return w;
    }

    /// Mean number of duplicates of exactly `size` per file.
    Rational mean_per_file(std::uint32_t size) const {
        if (file_count == 0) throw DomainError("mean of a distribution with no files");
        auto it = totals.find(size);
        return make_rational(it == totals.end() ? 0 : it->second, file_count);
    }

    std::uint32_t min_support() const { return totals.begin()->first; }
    std::uint32_t max_support() const { return totals.rbegin()->first; }

    friend bool operator==(const CloneSizeDistribution&, const CloneSizeDistribution&) = default;
};

/// Streaming reduction of per-file profiles. Error records are tallied apart
/// and do not count as files.
class DistributionBuilder {
public:
    explicit DistributionBuilder(Provenance provenance = {}) { dist_.provenance = std::move(provenance); }

    void add(const DuplicateProfile& profile) {
        if (!has_config_) {
            dist_.config = profile.config;
            has_config_ = true;
        } else if (!(dist_.config == profile.config)) {
            throw ConfigError("profile '" + profile.file_id + "' was scanned with a different configuration");
        }
        for (const auto& [size, count] : profile.counts) {
            if (count > 0) dist_.totals[size] += count;
        }
        ++dist_.file_count;
    }

    void add_error() { ++errors_; }

    std::uint64_t error_count() const { return errors_; }
    Provenance& provenance() { return dist_.provenance; }
    const CloneSizeDistribution& result() const { return dist_; }

private:
    CloneSizeDistribution dist_;
    bool has_config_ = false;
    std::uint64_t errors_ = 0;
};

inline CloneSizeDistribution aggregate_profiles(std::span<const DuplicateProfile> profiles,
                                                Provenance provenance = {}) {
    DistributionBuilder builder(std::move(provenance));
    for (const auto& p : profiles) builder.add(p);
    return builder.result();
}

inline bool is_neutral(const CloneSizeDistribution& d) { return d.file_count == 0 && d.totals.empty(); }

/// Pointwise sum. A distribution over zero files is the identity element.
inline CloneSizeDistribution merge_distributions(const CloneSizeDistribution& a, const CloneSizeDistribution& b) {
    if (is_neutral(a) || is_neutral(b)) {
        CloneSizeDistribution out = is_neutral(a) ? b : a;
        out.provenance.manifest = a.provenance.manifest;
        out.provenance.manifest.combine(b.provenance.manifest);
        return out;
    }
    if (!(a.config == b.config)) throw ConfigError("cannot merge distributions with different scan configurations");
    if (a.provenance.frontend != b.provenance.frontend) {
        throw ConfigError("cannot merge distributions from frontends '" + a.provenance.frontend + "' and '" +
                          b.provenance.frontend + "'");
    }
    CloneSizeDistribution out = a;
    for (const auto& [size, count] : b.totals) out.totals[size] += count;
    out.file_count += b.file_count;
    out.provenance.manifest.combine(b.provenance.manifest);
    return out;
}

inline void require_nonempty(const CloneSizeDistribution& d) {
    if (d.empty()) throw DomainError("distribution has no duplicates; ranks and quantiles are undefined");
}

/// W(< t) / W: the share of duplicate mass below t.
inline Rational quantile_rank(const CloneSizeDistribution& d, std::uint32_t t) {
    require_nonempty(d);
    std::uint64_t below = 0;
    for (auto it = d.totals.begin(); it != d.totals.end() && it->first < t; ++it) below += it->second;
    return make_rational(below, d.total_mass());
}

/// Share of duplicate mass at or above t.
inline Rational highlight_fraction(const CloneSizeDistribution& d, std::uint32_t t) {
    return Rational(1) - quantile_rank(d, t);
}

/// Smallest support size s with W(<= s) / W >= p.
inline std::uint32_t quantile(const CloneSizeDistribution& d, const Rational& p) {
    require_nonempty(d);
    if (p < 0 || p > 1) throw DomainError("probability outside [0, 1]: " + to_fraction_string(p));
    const std::uint64_t w = d.total_mass();
    std::uint64_t cumulative = 0;
    for (const auto& [size, count] : d.totals) {
        cumulative += count;
        if (make_rational(cumulative, w) >= p) return size;
    }
    return d.max_support();
}

struct TransferResult {
    std::uint32_t source_threshold = 0;
    Rational source_quantile;
    std::uint32_t target_threshold = 0;
    Rational attained_quantile;
    Rational highlight_fraction_source;
    Rational highlight_fraction_target;
    /// Diagnostic only: linear interpolation of the target rank curve between
    /// target_threshold - 1 and target_threshold.
    double interpolated_target_threshold = 0.0;

    friend bool operator==(const TransferResult&, const TransferResult&) = default;
};

/// Rank of t_src in `src`, then the smallest integer threshold t >= min_size
/// whose rank in `tgt` reaches it. The search ends at max support + 1, where
/// the rank is 1, so it always succeeds.
inline TransferResult transfer_threshold(const CloneSizeDistribution& src, std::uint32_t t_src,
                                         const CloneSizeDistribution& tgt) {
    require_nonempty(src);
    require_nonempty(tgt);
    if (t_src < src.config.min_size) {
        throw DomainError("source threshold " + std::to_string(t_src) + " is below the scan minimum " +
                          std::to_string(src.config.min_size));
    }
    TransferResult r;
    r.source_threshold = t_src;
    r.source_quantile = quantile_rank(src, t_src);
    r.highlight_fraction_source = Rational(1) - r.source_quantile;

    const std::uint64_t w = tgt.total_mass();
    const std::uint32_t lo = tgt.config.min_size;
    const std::uint32_t hi = tgt.max_support() + 1;
    std::uint64_t below = 0;
    auto it = tgt.totals.begin();
    std::optional<Rational> previous;
    for (std::uint32_t t = lo; t <= hi; ++t) {
        while (it != tgt.totals.end() && it->first < t) below += (it++)->second;
        const Rational rank = make_rational(below, w);
        if (rank >= r.source_quantile) {
            r.target_threshold = t;
            r.attained_quantile = rank;
            if (previous && rank > *previous) {
                const Rational frac = (r.source_quantile - *previous) / (rank - *previous);
                r.interpolated_target_threshold = static_cast<double>(t - 1) + to_double(frac);
            } else {
                r.interpolated_target_threshold = static_cast<double>(t);
            }
            break;
        }
        previous = rank;
    }
    r.highlight_fraction_target = Rational(1) - r.attained_quantile;
    return r;
}

// Serialization ------------------------------------------------------------

inline nlohmann::ordered_json counts_to_json(const SizeCounts& counts) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [size, count] : counts) j[std::to_string(size)] = count;
    return j;
}

inline SizeCounts counts_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("\"counts\" must be an object");
    SizeCounts counts;
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        unsigned long size = 0;
        try {
            size = std::stoul(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || key.empty() || size > UINT32_MAX) {
            throw InputError("size key '" + key + "' is not a decimal integer");
        }
        if (!value.is_number_unsigned()) throw InputError("count for size " + key + " is not a non-negative integer");
        if (value.get<std::uint64_t>() > 0) counts[static_cast<std::uint32_t>(size)] = value.get<std::uint64_t>();
    }
    return counts;
}

inline nlohmann::ordered_json to_json(const CloneSizeDistribution& d) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["mode"] = std::string(to_string(d.config.mode));
    j["min_size"] = d.config.min_size;
    j["cap_ratio"] = d.config.cap_ratio.str();
    j["frontend"] = d.provenance.frontend;
    j["file_count"] = d.file_count;
    j["totals"] = counts_to_json(d.totals);
    j["manifest_hash"] = d.provenance.manifest.hex();
    return j;
}

inline CloneSizeDistribution distribution_from_json(const nlohmann::json& j) {
    try {
        if (j.at("version").get<int>() != 1) throw InputError("unsupported distribution version");
        CloneSizeDistribution d;
        d.config.mode = parse_counting_mode(j.at("mode").get<std::string>());
        d.config.min_size = j.at("min_size").get<std::uint32_t>();
        d.config.cap_ratio = CapRatio::parse(j.at("cap_ratio").get<std::string>());
        d.config.validate();
        d.provenance.frontend = j.at("frontend").get<std::string>();
        d.file_count = j.at("file_count").get<std::uint64_t>();
        d.totals = counts_from_json(j.at("totals"));
        d.provenance.manifest = SetDigest::from_hex(j.at("manifest_hash").get<std::string>());
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed distribution: ") + e.what());
    } catch (const DomainError& e) {
        throw InputError(std::string("malformed distribution: ") + e.what());
    }
}

inline nlohmann::ordered_json to_json(const TransferResult& r) {
    nlohmann::ordered_json j;
    j["source_threshold"] = r.source_threshold;
    j["source_quantile"] = to_fraction_string(r.source_quantile);
    j["target_threshold"] = r.target_threshold;
    j["attained_quantile"] = to_fraction_string(r.attained_quantile);
    j["highlight_fraction_source"] = to_fraction_string(r.highlight_fraction_source);
    j["highlight_fraction_target"] = to_fraction_string(r.highlight_fraction_target);
    j["source_quantile_decimal"] = to_decimal_string(r.source_quantile, 6);
    j["attained_quantile_decimal"] = to_decimal_string(r.attained_quantile, 6);
    j["interpolated_target_threshold"] = r.interpolated_target_threshold;
    return j;
}

} // namespace clonedist
