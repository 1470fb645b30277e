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

// Exact rational arithmetic for ranks, quantiles and densities.

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "clonedist/errors.hpp"

namespace clonedist {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::uint64_t num, std::uint64_t den) {
    return Rational(BigInt(num), BigInt(den));
}

/// "p/q" in lowest terms; integers print without a denominator only when
/// `always_fraction` is false.
inline std::string to_fraction_string(const Rational& r, bool always_fraction = true) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (!always_fraction && den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Decimal rendering rounded half-up to at most `max_digits` fraction digits,
/// trailing zeros trimmed. Exact for terminating fractions within the limit.
inline std::string to_decimal_string(const Rational& r, int max_digits = 12) {
    BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    const bool negative = num < 0;
    if (negative) num = -num;
    BigInt scale = 1;
    for (int i = 0; i < max_digits; ++i) scale *= 10;
    const BigInt scaled = (num * scale * 2 + den) / (den * 2);
    const BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;

    std::string out = (negative && scaled != 0) ? "-" : "";
    out += whole.str();
    if (frac != 0) {
        std::string digits = frac.str();
        digits.insert(0, static_cast<std::size_t>(max_digits) - digits.size(), '0');
        while (!digits.empty() && digits.back() == '0') digits.pop_back();
        out += "." + digits;
    }
    return out;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parses "p/q", "n" or a plain decimal such as "0.995" into an exact rational.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw DomainError("not a rational number: '" + std::string(text) + "'");
    };
    auto parse_int = [&](std::string_view digits) {
        if (digits.empty()) fail();
        BigInt v = 0;
        for (char c : digits) {
            if (c < '0' || c > '9') fail();
            v = v * 10 + (c - '0');
        }
        return v;
    };
    if (text.empty()) return fail();
    bool negative = false;
    if (text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_int(text.substr(0, slash));
        const BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) return fail();
        value = Rational(num, den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if (whole.empty() && frac.empty()) return fail();
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const BigInt w = whole.empty() ? BigInt(0) : parse_int(whole);
        const BigInt f = frac.empty() ? BigInt(0) : parse_int(frac);
        value = Rational(w * scale + f, scale);
    } else {
        value = Rational(parse_int(text));
    }
    return negative ? Rational(-value) : value;
}

} // namespace clonedist
