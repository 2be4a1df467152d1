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
#include <cstdint>
#include <map>
#include <vector>

#include "ssw/elementary.hpp"
#include "ssw/graph.hpp"

namespace ssw {

/// Composable sequence of edge ids of G_A.
using Word = std::vector<std::size_t>;

struct WordOptions {
    std::size_t max_words = 1'000'000;
};

/// All allowed words of length k >= 1 in canonical (lexicographic edge id)
/// order. Throws ExplosionGuard past `max_words`.
std::vector<Word>
allowed_words(const TransitionMatrix& a, std::size_t k, const WordOptions& options = {});

/// trace(A^n).
BigInt
periodic_count(const TransitionMatrix& a, std::size_t n, Arithmetic mode = Arithmetic::Checked64);

/// Integer-valued function of the first `depth` edges of a one-sided path.
/// Depth 0 is a constant stored under the empty word.
class CylinderFunction {
public:
    CylinderFunction() = default;
    CylinderFunction(std::size_t depth, std::map<Word, std::int64_t> values);

    static CylinderFunction
    constant(std::int64_t c);

    /// The function taking `values[i]` on the i-th allowed word of A at `depth`.
    static CylinderFunction
    tabulate(const TransitionMatrix& a, std::size_t depth, const std::vector<std::int64_t>& values,
             const WordOptions& options = {});

    std::size_t
    depth() const noexcept {
        return depth_;
    }
    const std::map<Word, std::int64_t>&
    values() const noexcept {
        return values_;
    }

    /// Value on any word at least `depth` long (only its prefix matters).
    std::int64_t
    operator()(const Word& w) const;

    /// The same function regarded at a larger depth.
    CylinderFunction
    lifted(const TransitionMatrix& a, std::size_t depth, const WordOptions& options = {}) const;

    friend bool
    operator==(const CylinderFunction&, const CylinderFunction&) = default;

private:
    std::size_t depth_ = 0;
    std::map<Word, std::int64_t> values_;
};

/// Total on the allowed words of A at the function's depth.
bool
is_total(const CylinderFunction& f, const TransitionMatrix& a, const WordOptions& options = {});

CylinderFunction
operator+(const CylinderFunction& f, const CylinderFunction& g);

/// Agreement after lifting both to the larger depth.
bool
same_function(const CylinderFunction& f, const CylinderFunction& g, const TransitionMatrix& a,
              const WordOptions& options = {});

/// (f ∘ σ)(x_1 ... x_{k+1}) = f(x_2 ... x_{k+1}).
CylinderFunction
shift_compose(const CylinderFunction& f, const TransitionMatrix& a, const WordOptions& options = {});

/// φ: functions on X_A -> functions on X_B, one depth deeper.
/// φ(f)(b_1 ... b_{k+1}) = f(a_1 ... a_k) with a_j the A-edge c(b_j) d(b_{j+1}).
CylinderFunction
phi_map(const ElementaryEquivalence& ee, const CylinderFunction& f, const WordOptions& options = {});

/// ψ: functions on X_B -> functions on X_A, one depth deeper.
/// ψ(g)(a_1 ... a_{k+1}) = g(b_1 ... b_k) with b_j the B-edge d(a_j) c(a_{j+1}).
CylinderFunction
psi_map(const ElementaryEquivalence& ee, const CylinderFunction& g, const WordOptions& options = {});

/// Overloads reusing a pairing computed once for `ee`.
CylinderFunction
phi_map(const ElementaryEquivalence& ee, const EdgePairing& pairing, const CylinderFunction& f,
        const WordOptions& options = {});
CylinderFunction
psi_map(const ElementaryEquivalence& ee, const EdgePairing& pairing, const CylinderFunction& g,
        const WordOptions& options = {});

struct TransferLawOptions {
    std::size_t max_depth = 2;
    /// Depths with at most this many words are checked on every {0,1}-valued
    /// function; larger ones on the indicator basis plus pairwise additivity.
    std::size_t exhaustive_word_limit = 12;
    WordOptions words;
};

struct TransferLawReport {
    Verdict verdict;
    std::size_t functions_checked = 0;
    bool exhaustive = true;
};

/// ψ(φ(f)) = f ∘ σ_A and φ(ψ(g)) = g ∘ σ_B for {0,1}-valued cylinder
/// functions of depth <= max_depth.
TransferLawReport
check_transfer_law(const ElementaryEquivalence& ee, const TransferLawOptions& options = {});

}  // namespace ssw
