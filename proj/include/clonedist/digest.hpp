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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include <openssl/evp.h>

#include "clonedist/errors.hpp"

namespace clonedist {

using Digest = std::array<std::uint8_t, 32>;

inline Digest sha256(std::string_view data) {
    Digest out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != out.size()) {
        throw InvariantError("SHA-256 computation failed");
    }
    return out;
}

inline std::string to_hex(const Digest& d) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(d.size() * 2);
    for (auto b : d) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xF]);
    }
    return out;
}

inline Digest digest_from_hex(std::string_view hex) {
    if (hex.size() != 64) throw InputError("digest must have 64 hex digits");
    auto nibble = [&](char c) -> std::uint8_t {
        if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<std::uint8_t>(c - 'A' + 10);
        throw InputError("invalid hex digit in digest");
    };
    Digest d{};
    for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
    }
    return d;
}

inline std::string sha256_hex(std::string_view data) { return to_hex(sha256(data)); }

/// Order-independent digest of a set of (path, content hash) entries: the XOR
/// of each entry's SHA-256. Combining two digests is XOR, so partial
/// aggregates merge associatively and commutatively; the empty set is zero.
class SetDigest {
public:
    void add(std::string_view path, std::string_view content_hash) {
        std::string key(path);
        key.push_back('\0');
        key.append(content_hash);
        combine(sha256(key));
    }

    void combine(const Digest& other) {
        for (std::size_t i = 0; i < value_.size(); ++i) value_[i] ^= other[i];
    }

    void combine(const SetDigest& other) { combine(other.value_); }

    const Digest& value() const { return value_; }
    std::string hex() const { return to_hex(value_); }

    static SetDigest from_hex(std::string_view hex) {
        SetDigest d;
        d.value_ = digest_from_hex(hex);
        return d;
    }

    friend bool operator==(const SetDigest&, const SetDigest&) = default;

private:
    Digest value_{};
};

} // namespace clonedist
