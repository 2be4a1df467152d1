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


#include "ssw/error.hpp"
#include "ssw/matrix.hpp"

namespace ssw {

std::string_view
to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedInput:
            return "MalformedInput";
        case ErrorKind::Overflow:
            return "Overflow";
        case ErrorKind::ZeroRowOrColumn:
            return "ZeroRowOrColumn";
        case ErrorKind::InvalidPartition:
            return "InvalidPartition";
        case ErrorKind::NotAmalgamable:
            return "NotAmalgamable";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::EmptyChain:
            return "EmptyChain";
        case ErrorKind::SearchSpaceTooLarge:
            return "SearchSpaceTooLarge";
        case ErrorKind::NotWellDefined:
            return "NotWellDefined";
        case ErrorKind::UnpairedPath:
            return "UnpairedPath";
        case ErrorKind::BranchOutOfRange:
            return "BranchOutOfRange";
        case ErrorKind::ExplosionGuard:
            return "ExplosionGuard";
        case ErrorKind::SideMismatch:
            return "SideMismatch";
    }
    return "Unknown";
}

BigMatrix
to_big(const IntMatrix& m) {
    BigMatrix b(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            b(i, j) = to_big(m(i, j));
        }
    }
    return b;
}

IntMatrix
to_int64(const BigMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            r(i, j) = to_int64(m(i, j));
        }
    }
    return r;
}

}  // namespace ssw
