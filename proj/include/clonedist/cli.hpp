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

// Command-line front end: argument parsing into validated commands and the
// verbs that run the staged pipeline.
//
// Exit codes: 0 success, 1 usage error, 2 input or I/O error, 3 internal
// invariant violation (oracle mismatch in `verify`).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clonedist/clone_index.hpp"
#include "clonedist/corpus.hpp"
#include "clonedist/distribution.hpp"
#include "clonedist/errors.hpp"
#include "clonedist/oracle.hpp"
#include "clonedist/pipeline.hpp"
#include "clonedist/report.hpp"

namespace clonedist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInvariant = 3;

enum class Verb { Scan, Aggregate, Transfer, QQ, Plot, Clones, Verify };

struct ScanArgs {
    ScanOptions options;
    fs::path out;
    std::optional<fs::path> manifest_out;
};

struct AggregateArgs {
    fs::path profiles;
    fs::path out;
};

struct TransferArgs {
    fs::path source;
    fs::path target;
    std::uint32_t threshold = 0;
};

struct QQArgs {
    fs::path source;
    fs::path target;
    std::vector<Rational> grid;
    fs::path out;
};

struct PlotArgs {
    std::vector<fs::path> dists;
    std::optional<fs::path> qq;
    std::optional<std::uint32_t> threshold;
    fs::path out;
};

struct ClonesArgs {
    fs::path file;
    Language lang = Language::Python;
    std::uint32_t min_size = 3;
    CellBoundary boundary = CellBoundary::Barrier;
};

struct VerifyArgs {
    fs::path input;
    Language lang = Language::Python;
    std::uint64_t seed = 1;
    std::size_t random = 500;
};

struct Command {
    Verb verb = Verb::Scan;
    std::variant<ScanArgs, AggregateArgs, TransferArgs, QQArgs, PlotArgs, ClonesArgs, VerifyArgs> options;

    template <typename T>
    const T& as() const {
        return std::get<T>(options);
    }
};

/// --help was requested; carries the help text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline CellBoundary parse_boundary(std::string_view text) {
    if (text == "barrier") return CellBoundary::Barrier;
    if (text == "none") return CellBoundary::None;
    throw UsageError("unknown cell boundary '" + std::string(text) + "'");
}

inline unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Parses and validates argv (without the program name). Throws UsageError
/// with a one-line reason, or HelpRequested.
inline Command parse_args(const std::vector<std::string>& argv) {
    CLI::App app{"Exact within-file clone distributions and threshold transfer", "clonedist"};
    app.require_subcommand(1);
    const std::vector<std::string> langs{"python", "notebook", "generic"};

    // scan
    std::string scan_lang, scan_input, scan_out, scan_manifest, cap_ratio = "1/2", mode = "distinct",
                                                                boundary = "barrier";
    std::uint32_t min_size = 3;
    std::uint64_t max_bytes = kDefaultMaxBytes;
    bool no_dedup = false;
    unsigned jobs = default_jobs();
    auto* scan = app.add_subcommand("scan", "Scan a corpus into per-file duplicate profiles (JSON Lines)");
    scan->add_option("--lang", scan_lang, "Frontend")->required()->check(CLI::IsMember(langs));
    scan->add_option("--input", scan_input, "Corpus directory")->required();
    scan->add_option("--out", scan_out, "Profiles output (.jsonl)")->required();
    scan->add_option("--min-size", min_size, "Smallest duplicate size in tokens")->check(CLI::PositiveNumber);
    scan->add_option("--cap-ratio", cap_ratio, "Largest size as a fraction of file length, e.g. 1/2");
    scan->add_option("--mode", mode, "Counting mode")->check(CLI::IsMember({"distinct", "maximal"}));
    scan->add_option("--cell-boundary", boundary, "Notebook cell separation")
        ->check(CLI::IsMember({"barrier", "none"}));
    scan->add_option("--max-bytes", max_bytes, "Skip files larger than this");
    scan->add_flag("--no-dedup", no_dedup, "Keep files with duplicate content");
    scan->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    scan->add_option("--manifest", scan_manifest, "Also write the corpus manifest (JSON)");

    // aggregate
    std::string agg_profiles, agg_out;
    auto* aggregate = app.add_subcommand("aggregate", "Sum profiles into a clone-size distribution");
    aggregate->add_option("--profiles", agg_profiles, "Profiles (.jsonl)")->required();
    aggregate->add_option("--out", agg_out, "Distribution output (.json)")->required();

    // transfer
    std::string tr_source, tr_target;
    std::uint32_t tr_threshold = 0;
    auto* transfer = app.add_subcommand("transfer", "Transfer a threshold by quantile rank");
    transfer->add_option("--source", tr_source, "Source distribution")->required();
    transfer->add_option("--target", tr_target, "Target distribution")->required();
    transfer->add_option("--threshold", tr_threshold, "Source threshold in tokens")
        ->required()
        ->check(CLI::PositiveNumber);

    // qq
    std::string qq_source, qq_target, qq_grid, qq_out;
    auto* qq = app.add_subcommand("qq", "Quantile-quantile series as CSV");
    qq->add_option("--source", qq_source, "Source distribution")->required();
    qq->add_option("--target", qq_target, "Target distribution")->required();
    qq->add_option("--grid", qq_grid, "Probability grid a:b:step (default 0.5:0.995:0.005 plus 0.999)");
    qq->add_option("--out", qq_out, "CSV output")->required();

    // plot
    std::vector<std::string> plot_dists;
    std::string plot_qq, plot_out;
    std::uint32_t plot_threshold = 0;
    auto* plot = app.add_subcommand("plot", "Render density and QQ charts as SVG");
    plot->add_option("--dist", plot_dists, "Distribution (repeatable, at most two)")->expected(1)->take_all();
    plot->add_option("--qq", plot_qq, "QQ CSV from the qq command");
    plot->add_option("--threshold", plot_threshold, "Mark the transfer of this source threshold")
        ->check(CLI::PositiveNumber);
    plot->add_option("--out", plot_out, "SVG output")->required();

    // clones
    std::string cl_file, cl_lang, cl_boundary = "barrier";
    std::uint32_t cl_min = 3;
    auto* clones = app.add_subcommand("clones", "List maximal exact clones in one file");
    clones->add_option("--file", cl_file, "Source file")->required();
    clones->add_option("--lang", cl_lang, "Frontend")->required()->check(CLI::IsMember(langs));
    clones->add_option("--min-size", cl_min, "Smallest clone in tokens")->check(CLI::PositiveNumber);
    clones->add_option("--cell-boundary", cl_boundary, "Notebook cell separation")
        ->check(CLI::IsMember({"barrier", "none"}));

    // verify
    std::string vf_input, vf_lang;
    std::uint64_t vf_seed = 1;
    std::size_t vf_random = 500;
    auto* verify = app.add_subcommand("verify", "Cross-check the suffix-array counts against the brute-force oracle");
    verify->add_option("--input", vf_input, "File or directory")->required();
    verify->add_option("--lang", vf_lang, "Frontend")->required()->check(CLI::IsMember(langs));
    verify->add_option("--seed", vf_seed, "Seed for the random sequences");
    verify->add_option("--random", vf_random, "Number of random sequences to check in addition to the files");

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        for (auto* sub : app.get_subcommands()) throw HelpRequested(sub->help());
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    Command cmd;
    try {
        if (scan->parsed()) {
            ScanArgs a;
            a.options.lang = parse_language(scan_lang);
            a.options.input = scan_input;
            a.options.config.min_size = min_size;
            a.options.config.cap_ratio = CapRatio::parse(cap_ratio);
            a.options.config.mode = parse_counting_mode(mode);
            a.options.boundary = parse_boundary(boundary);
            a.options.max_bytes = max_bytes;
            a.options.dedup = !no_dedup;
            a.options.jobs = jobs;
            a.out = scan_out;
            if (!scan_manifest.empty()) a.manifest_out = scan_manifest;
            cmd = {Verb::Scan, a};
        } else if (aggregate->parsed()) {
            cmd = {Verb::Aggregate, AggregateArgs{agg_profiles, agg_out}};
        } else if (transfer->parsed()) {
            cmd = {Verb::Transfer, TransferArgs{tr_source, tr_target, tr_threshold}};
        } else if (qq->parsed()) {
            QQArgs a{qq_source, qq_target, {}, qq_out};
            if (qq_grid.empty()) {
                a.grid = default_qq_grid();
            } else {
                a.grid = parse_grid(qq_grid);
                if (a.grid.empty()) throw UsageError("--grid produced no points");
            }
            cmd = {Verb::QQ, a};
        } else if (plot->parsed()) {
            PlotArgs a;
            for (const auto& d : plot_dists) a.dists.emplace_back(d);
            if (a.dists.size() > 2) throw UsageError("--dist accepts at most two distributions");
            if (a.dists.empty() && plot_qq.empty()) throw UsageError("plot needs --dist or --qq");
            if (!plot_qq.empty()) a.qq = plot_qq;
            if (plot_threshold > 0) {
                if (a.dists.size() != 2) throw UsageError("--threshold needs exactly two --dist files");
                a.threshold = plot_threshold;
            }
            a.out = plot_out;
            cmd = {Verb::Plot, a};
        } else if (clones->parsed()) {
            cmd = {Verb::Clones, ClonesArgs{cl_file, parse_language(cl_lang), cl_min, parse_boundary(cl_boundary)}};
        } else if (verify->parsed()) {
            cmd = {Verb::Verify, VerifyArgs{vf_input, parse_language(vf_lang), vf_seed, vf_random}};
        }
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return cmd;
}

namespace detail {

inline std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.generic_string() + " for writing");
    return out;
}

inline CloneSizeDistribution load_distribution(const fs::path& path) {
    const auto text = read_file(path);
    try {
        return distribution_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path.generic_string() + ": " + e.what());
    }
}

inline std::string label_for(const fs::path& path) { return path.stem().string(); }

inline int run_scan(const ScanArgs& a, std::ostream& err) {
    auto out = open_output(a.out);
    const auto summary = scan_corpus(a.options, out);
    if (a.manifest_out) {
        auto m = open_output(*a.manifest_out);
        m << to_json(summary.manifest).dump(2) << '\n';
        if (!m) throw IoError("failed to write manifest");
    }
    err << "scanned " << summary.files << " files, " << summary.skipped << " skipped, " << summary.failures
        << " failed\n";
    return summary.failures > 0 ? kExitInput : kExitOk;
}

inline int run_aggregate(const AggregateArgs& a, std::ostream& err) {
    std::ifstream in(a.profiles, std::ios::binary);
    if (!in) throw IoError("cannot open " + a.profiles.generic_string());
    const auto result = aggregate_stream(in);
    auto out = open_output(a.out);
    out << to_json(result.distribution).dump(2) << '\n';
    if (!out) throw IoError("failed to write distribution");
    if (result.error_records > 0) err << result.error_records << " error records excluded\n";
    return kExitOk;
}

inline int run_transfer(const TransferArgs& a, std::ostream& out) {
    const auto src = load_distribution(a.source);
    const auto tgt = load_distribution(a.target);
    out << to_json(transfer_threshold(src, a.threshold, tgt)).dump(2) << '\n';
    return kExitOk;
}

inline int run_qq(const QQArgs& a) {
    const auto src = load_distribution(a.source);
    const auto tgt = load_distribution(a.target);
    auto out = open_output(a.out);
    emit_csv(qq_series(src, tgt, a.grid), out);
    return kExitOk;
}

inline int run_plot(const PlotArgs& a) {
    std::vector<Series> series;
    std::vector<CloneSizeDistribution> dists;
    for (const auto& path : a.dists) {
        dists.push_back(load_distribution(path));
        series.push_back(pdf_series(dists.back(), label_for(path)));
    }
    SvgStyle density{640, 420, "Duplicate size density", "duplicate size (tokens)", "density"};
    std::optional<QQSeries> qq;
    if (a.qq) {
        std::ifstream in(*a.qq, std::ios::binary);
        if (!in) throw IoError("cannot open " + a.qq->generic_string());
        qq = read_qq_csv(in);
        if (dists.size() == 2) {
            qq->source_label = label_for(a.dists[0]);
            qq->target_label = label_for(a.dists[1]);
        }
    }
    if (a.threshold && qq) {
        const auto r = transfer_threshold(dists[0], *a.threshold, dists[1]);
        qq->marker = TransferMarker{r.source_quantile, r.source_threshold, r.target_threshold};
    }
    auto out = open_output(a.out);
    if (qq) {
        SvgStyle qq_style{640, 420, "Quantile-quantile", qq->source_label + " quantile (tokens)",
                          qq->target_label + " quantile (tokens)"};
        if (series.empty()) {
            emit_svg(*qq, qq_style, out);
        } else {
            emit_svg(series, density, *qq, qq_style, out);
        }
    } else {
        emit_svg(series, density, out);
    }
    return kExitOk;
}

inline FileKind kind_for(Language lang) {
    switch (lang) {
    case Language::Python: return FileKind::Script;
    case Language::Notebook: return FileKind::Notebook;
    case Language::Generic: return FileKind::Generic;
    }
    return FileKind::Generic;
}

inline nlohmann::ordered_json clones_to_json(const TokenSequence& seq, const std::vector<CloneGroup>& groups,
                                             std::uint32_t min_size) {
    auto cell_of = [&](std::size_t index) -> std::optional<std::size_t> {
        for (std::size_t c = 0; c < seq.cell_spans.size(); ++c) {
            if (index >= seq.cell_spans[c].begin && index < seq.cell_spans[c].end) return c;
        }
        return std::nullopt;
    };
    nlohmann::ordered_json j;
    j["path"] = seq.file_id;
    j["token_count"] = seq.size();
    j["min_size"] = min_size;
    j["groups"] = nlohmann::ordered_json::array();
    for (const auto& g : groups) {
        nlohmann::ordered_json group;
        group["length"] = g.length;
        std::string text;
        for (std::size_t k = 0; k < g.length; ++k) {
            const auto& tok = seq.tokens[g.occurrences.front() + k];
            if (!text.empty() && text.back() != '\n' && tok.kind != TokenKind::Newline) text.push_back(' ');
            text += tok.text;
        }
        group["text"] = text;
        group["occurrences"] = nlohmann::ordered_json::array();
        for (std::size_t start : g.occurrences) {
            const auto& first = seq.tokens[start];
            const auto& last = seq.tokens[start + g.length - 1];
            nlohmann::ordered_json occ;
            occ["start"] = start;
            occ["end"] = start + g.length;
            if (auto cell = cell_of(start)) occ["cell"] = *cell;
            occ["start_line"] = first.line;
            occ["start_col"] = first.col;
            occ["end_line"] = last.line;
            group["occurrences"].push_back(std::move(occ));
        }
        j["groups"].push_back(std::move(group));
    }
    return j;
}

inline int run_clones(const ClonesArgs& a, std::ostream& out) {
    auto seq = tokenize_file(a.file, kind_for(a.lang), a.boundary);
    out << clones_to_json(seq, find_clone_groups(seq, a.min_size), a.min_size).dump(2) << '\n';
    return kExitOk;
}

/// Configurations every verified sequence is checked under.
inline std::vector<ScanConfig> verify_configs() {
    std::vector<ScanConfig> configs;
    for (auto mode : {CountingMode::Distinct, CountingMode::Maximal}) {
        configs.push_back({3, CapRatio(1, 2), mode});
        configs.push_back({1, CapRatio(1, 1), mode});
    }
    return configs;
}

/// Returns the number of mismatches, reporting each to `err`.
inline std::size_t verify_sequence(const TokenSequence& seq, std::ostream& err) {
    std::size_t mismatches = 0;
    for (const auto& config : verify_configs()) {
        if (count_duplicates(seq, config).counts != count_duplicates_oracle(seq, config).counts) {
            ++mismatches;
            err << "mismatch: " << seq.file_id << " mode=" << to_string(config.mode) << " min_size=" << config.min_size
                << " cap_ratio=" << config.cap_ratio.str() << '\n';
        }
    }
    if (find_clone_groups(seq, 3) != find_clone_groups_oracle(seq, 3)) {
        ++mismatches;
        err << "mismatch: " << seq.file_id << " clone groups\n";
    }
    return mismatches;
}

inline TokenSequence random_sequence(std::mt19937_64& rng, std::size_t index) {
    std::uniform_int_distribution<std::uint32_t> alphabet(1, 4);
    std::uniform_int_distribution<std::size_t> length(1, 200);
    const auto k = alphabet(rng);
    const auto n = length(rng);
    std::uniform_int_distribution<SymbolId> symbol(0, k - 1);
    TokenSequence seq;
    seq.file_id = "random#" + std::to_string(index);
    for (std::size_t i = 0; i < n; ++i) seq.interned.push_back(symbol(rng));
    seq.tokens.resize(n);
    return seq;
}

inline int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<std::pair<fs::path, FileKind>> files;
    std::error_code ec;
    if (fs::is_directory(a.input, ec)) {
        const auto manifest = discover_corpus(a.input, filters_for(a.lang));
        for (const auto& e : manifest.entries) files.emplace_back(a.input / fs::path(e.path), e.kind);
    } else if (fs::is_regular_file(a.input, ec)) {
        files.emplace_back(a.input, kind_for(a.lang));
    } else {
        throw InputError("no such file or directory: " + a.input.generic_string());
    }

    std::size_t mismatches = 0, input_errors = 0, oversize = 0;
    for (const auto& [path, kind] : files) {
        try {
            const auto seq = tokenize_file(path, kind, CellBoundary::Barrier);
            if (seq.size() > kOracleMaxLength) {
                ++oversize;
                continue;
            }
            mismatches += verify_sequence(seq, err);
        } catch (const InputError& e) {
            ++input_errors;
            err << e.what() << '\n';
        } catch (const IoError& e) {
            ++input_errors;
            err << e.what() << '\n';
        }
    }
    std::mt19937_64 rng(a.seed);
    for (std::size_t i = 0; i < a.random; ++i) mismatches += verify_sequence(random_sequence(rng, i), err);

    out << "verified " << files.size() - input_errors - oversize << " files and " << a.random
        << " random sequences: " << mismatches << " mismatches";
    if (oversize > 0) out << ", " << oversize << " files over the oracle limit skipped";
    if (input_errors > 0) out << ", " << input_errors << " unreadable";
    out << '\n';
    if (mismatches > 0) return kExitInvariant;
    return input_errors > 0 ? kExitInput : kExitOk;
}

} // namespace detail

/// Runs a validated command; maps errors onto exit codes.
inline int run(const Command& cmd, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    try {
        switch (cmd.verb) {
        case Verb::Scan: return detail::run_scan(cmd.as<ScanArgs>(), err);
        case Verb::Aggregate: return detail::run_aggregate(cmd.as<AggregateArgs>(), err);
        case Verb::Transfer: return detail::run_transfer(cmd.as<TransferArgs>(), out);
        case Verb::QQ: return detail::run_qq(cmd.as<QQArgs>());
        case Verb::Plot: return detail::run_plot(cmd.as<PlotArgs>());
        case Verb::Clones: return detail::run_clones(cmd.as<ClonesArgs>(), out);
        case Verb::Verify: return detail::run_verify(cmd.as<VerifyArgs>(), out, err);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}

/// parse_args + run, for main().
inline int main(const std::vector<std::string>& argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    Command cmd;
    try {
        cmd = parse_args(argv);
    } catch (const HelpRequested& h) {
        out << h.what();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return run(cmd, out, err);
}

} // namespace clonedist::cli
