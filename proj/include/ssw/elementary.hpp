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
#include <utility>
#include <vector>

#include "ssw/error.hpp"
#include "ssw/graph.hpp"
#include "ssw/splitting.hpp"

namespace ssw {

/// A = C D, B = D C with C: N x M and D: M x N nonnegative. The struct is
/// plain data; verify_elementary decides whether it is a witness.
struct ElementaryEquivalence {
    TransitionMatrix A;
    TransitionMatrix B;
    IntMatrix C;
    IntMatrix D;
};

/// Builds the equivalence whose endpoints are C*D and D*C.
ElementaryEquivalence
make_elementary(IntMatrix c, IntMatrix d);

/// (C, D) taken from a splitting: A = original, B = split matrix.
ElementaryEquivalence
elementary_from_split(const SplitResult& split);

/// Swaps the roles of A and B (C and D exchange places).
ElementaryEquivalence
reversed(const ElementaryEquivalence& ee);

/// Verified iff C D = A and D C = B. The locus names the first mismatching
/// entry. Warnings flag reducible or permutation endpoints.
Verdict
verify_elementary(const TransitionMatrix& a, const TransitionMatrix& b, const IntMatrix& c, const IntMatrix& d);

inline Verdict
verify_elementary(const ElementaryEquivalence& ee) {
    return verify_elementary(ee.A, ee.B, ee.C, ee.D);
}

struct SSEChain {
    std::vector<ElementaryEquivalence> steps;

    const TransitionMatrix&
    source() const {
        return steps.front().A;
    }
    const TransitionMatrix&
    target() const {
        return steps.back().B;
    }
};

/// Throws EmptyChain. Locus is "step <i>: ..." (1-based).
Verdict
verify_chain(const SSEChain& chain);

/// C_1 C_2 ... C_n.
IntMatrix
chain_forward_matrix(const SSEChain& chain);

/// D_n ... D_2 D_1.
IntMatrix
chain_backward_matrix(const SSEChain& chain);

/// The bipartite edge decomposition of an elementary equivalence.
/// C-edges run from A-vertices to B-vertices, D-edges the other way.
/// A-edge a is the path c(a) d(a); B-edge b is the path d(b) c(b).
/// When several paths share endpoints, copies are matched in
/// lexicographic (middle vertex, first copy, second copy) order.
struct EdgePairing {
    std::vector<Edge> c_edges;
    std::vector<Edge> d_edges;
    std::vector<std::pair<std::size_t, std::size_t>> a_paths;  // a -> (c, d)
    std::vector<std::pair<std::size_t, std::size_t>> b_paths;  // b -> (d, c)

    /// A-edge whose path is c d; throws UnpairedPath if c d is not composable.
    std::size_t
    a_edge(std::size_t c, std::size_t d) const;
    /// B-edge whose path is d c.
    std::size_t
    b_edge(std::size_t d, std::size_t c) const;

private:
    friend EdgePairing edge_pairing(const ElementaryEquivalence&);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> a_index_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> b_index_;
};

/// Canonical enumeration of the parallel edges of a rectangular matrix.
std::vector<Edge>
enumerate_edges(const IntMatrix& m);

EdgePairing
edge_pairing(const ElementaryEquivalence& ee);

/// D̂(i,l) = 1 iff d(a_i) = d(b_l); N_A x M_B.
IntMatrix
dhat(const ElementaryEquivalence& ee);

struct SearchOptions {
    std::int64_t entry_bound = 1;
    /// Raw candidate cap; exceeding it throws SearchSpaceTooLarge.
    double max_candidates = 1e8;
};

/// Every (C, D) with entries in [0, entry_bound], C D = A and D C = B,
/// ordered lexicographically by (C, D) in row-major order.
std::vector<ElementaryEquivalence>
search_elementary(const TransitionMatrix& a, const TransitionMatrix& b, const SearchOptions& options = {});

/// Index maps j -> k(j-1)+i, i = 1..k, on the positive integers.
class CuntzFamily {
public:
    explicit CuntzFamily(std::int64_t k);

    std::int64_t
    branching() const noexcept {
        return k_;
    }

    /// Image of j under branch i (both 1-based). Throws BranchOutOfRange.
    std::int64_t
    apply(std::int64_t branch, std::int64_t j) const;

    /// The branch images restricted to {1..prefix_len} hit every integer
    /// there exactly once.
    Verdict
    verify_partition(std::int64_t prefix_len) const;

private:
    std::int64_t k_;
};

}  // namespace ssw
