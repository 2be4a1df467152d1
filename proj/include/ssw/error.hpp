// Copyright 2026-present the ssw authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ssw {

enum class ErrorKind {
    MalformedInput,
    Overflow,
    ZeroRowOrColumn,
    InvalidPartition,
    NotAmalgamable,
    DimensionMismatch,
    EmptyChain,
    SearchSpaceTooLarge,
    NotWellDefined,
    UnpairedPath,
    BranchOutOfRange,
    ExplosionGuard,
    SideMismatch,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {
    }

    ErrorKind
    kind() const noexcept {
        return kind_;
    }

    /// True for errors raised by a configured resource cap rather than bad input.
    bool
    is_resource_cap() const noexcept {
        return kind_ == ErrorKind::SearchSpaceTooLarge || kind_ == ErrorKind::ExplosionGuard;
    }

private:
    ErrorKind kind_;
};

/// Outcome of a verification. `locus` names the first failing place when refuted.
struct Verdict {
    bool verified = true;
    std::string locus;
    std::vector<std::string> warnings;

    static Verdict
    ok() {
        return {};
    }

    static Verdict
    refuted(std::string where) {
        Verdict v;
        v.verified = false;
        v.locus = std::move(where);
        return v;
    }

    explicit operator bool() const noexcept {
        return verified;
    }
};

}  // namespace ssw
