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

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "ssw/error.hpp"

namespace ssw {

using BigInt = mpz_class;

/// Integer arithmetic used by the matrix kernels. The int64 overloads never
/// wrap; they raise ErrorKind::Overflow instead.
enum class Arithmetic { Checked64, Arbitrary };

inline std::int64_t
add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw Error(ErrorKind::Overflow, "int64 addition " + std::to_string(a) + " + " + std::to_string(b));
    }
    return r;
}

inline std::int64_t
sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw Error(ErrorKind::Overflow, "int64 subtraction " + std::to_string(a) + " - " + std::to_string(b));
    }
    return r;
}

inline std::int64_t
mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw Error(ErrorKind::Overflow, "int64 product " + std::to_string(a) + " * " + std::to_string(b));
    }
    return r;
}

inline BigInt
add(const BigInt& a, const BigInt& b) {
    return a + b;
}

inline BigInt
sub(const BigInt& a, const BigInt& b) {
    return a - b;
}

inline BigInt
mul(const BigInt& a, const BigInt& b) {
    return a * b;
}

inline BigInt
to_big(std::int64_t v) {
    return BigInt(static_cast<long>(v));
}

/// Narrowing back to int64; throws Overflow when the value does not fit.
inline std::int64_t
to_int64(const BigInt& v) {
    if (!v.fits_slong_p()) {
        throw Error(ErrorKind::Overflow, "value " + v.get_str() + " exceeds int64");
    }
    return static_cast<std::int64_t>(v.get_si());
}

inline std::string
to_decimal(std::int64_t v) {
    return std::to_string(v);
}

inline std::string
to_decimal(const BigInt& v) {
    return v.get_str();
}

}  // namespace ssw
