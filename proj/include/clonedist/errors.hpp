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

#include <stdexcept>
#include <string>

namespace clonedist {

/// Bad corpus input: unreadable root, malformed notebook, malformed profile line.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inputs built under different scan configurations or frontends were combined.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The brute-force oracle refuses sequences beyond its length guard.
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A query on an empty distribution, or an argument outside its domain.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when two independent computations disagree.
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace clonedist
