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

#include <cstddef>
#include <vector>

#include "ssw/checked.hpp"
#include "ssw/matrix.hpp"

namespace ssw {

/// U * M * V = diag(divisors, 0, ...), U and V unimodular, each divisor
/// positive and dividing the next. `divisors.size()` is the rank of M.
struct SmithForm {
    BigMatrix U;
    BigMatrix V;
    std::vector<BigInt> divisors;

    std::size_t
    rank() const noexcept {
        return divisors.size();
    }
};

/// Pivot rule: smallest nonzero absolute value in the active block, ties
/// broken by row-major position. Always runs on GMP integers.
SmithForm
smith_normal_form(const BigMatrix& m);

inline SmithForm
smith_normal_form(const IntMatrix& m) {
    return smith_normal_form(to_big(m));
}

/// Exact determinant (fraction-free Bareiss elimination).
BigInt
determinant(const BigMatrix& m);

}  // namespace ssw
