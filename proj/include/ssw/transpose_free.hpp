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

#include <string_view>
#include <vector>

#include "ssw/elementary.hpp"
#include "ssw/splitting.hpp"

namespace ssw {

/// Which matrix a move acts on: the chain matrix itself or its transpose.
enum class Side { Direct, Transposed };
/// Moves are out-splittings and their inverses; in-splittings appear as
/// out-splittings on the transposed side.
enum class Move { OutSplit, OutAmalgamate };

std::string_view
to_string(Side side);
std::string_view
to_string(Move move);

/// One transpose-free step. `witness` is an out-split on the stated side:
/// of `from` (OutSplit) or of `to` (OutAmalgamate), transposed first when
/// side is Transposed.
struct TFStep {
    TransitionMatrix from;
    TransitionMatrix to;
    Side side = Side::Direct;
    Move move = Move::OutSplit;
    SplitResult witness;
};

/// Certifies a split. Out-splits only certify Direct; in-splits only
/// certify Transposed, where the witness becomes the out-split of G^t.
/// Throws SideMismatch otherwise.
TFStep
step_from_split(const SplitResult& split, Side side);

/// Inverse move of step_from_split: from the split matrix back to the
/// original.
TFStep
amalgamation_step(const SplitResult& split, Side side);

/// The step's witness sends `from` to `to` on its side.
Verdict
verify_tf_step(const TFStep& step);

/// The elementary equivalence from -> to carried by a verified step.
ElementaryEquivalence
implied_elementary(const TFStep& step);

struct TFChainReport {
    Verdict verdict;
    SSEChain implied;  // filled when verified
};

/// Throws EmptyChain. Only splitting-induced steps are admissible.
TFChainReport
verify_tf_chain(const std::vector<TFStep>& chain);

}  // namespace ssw
