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
#include <string>
#include <vector>

#include "ssw/graph.hpp"

namespace ssw {

enum class SplitKind { Out, In };

std::string_view
to_string(SplitKind kind);

/// Per-vertex partition of the out-edges E_I (Out) or in-edges E^J (In)
/// into nonempty blocks. Blocks are held in canonical order (by least edge
/// id, edges ascending inside a block); the caller's original order is kept
/// in `user_order` so it can be reported back.
template <SplitKind K>
class EdgePartition {
public:
    using Blocks = std::vector<std::vector<std::size_t>>;

    EdgePartition() = default;

    /// Validates against `g`: every block nonempty, blocks disjoint, union
    /// equal to the vertex's out- (in-) edges. Throws InvalidPartition.
    EdgePartition(const DirectedMultigraph& g, std::vector<Blocks> blocks_per_vertex);

    /// One block per vertex.
    static EdgePartition
    trivial(const DirectedMultigraph& g);

    /// Singleton blocks: the finest partition.
    static EdgePartition
    discrete(const DirectedMultigraph& g);

    std::size_t
    vertex_count() const noexcept {
        return blocks_.size();
    }
    const Blocks&
    blocks(std::size_t vertex) const {
        return blocks_.at(vertex);
    }
    std::size_t
    block_count(std::size_t vertex) const {
        return blocks_.at(vertex).size();
    }
    /// user_order(v)[canonical block] = position in the caller's input.
    const std::vector<std::size_t>&
    user_order(std::size_t vertex) const {
        return user_order_.at(vertex);
    }

    /// Block index (0-based, canonical) holding `edge`, which must belong to `vertex`.
    std::size_t
    block_of(std::size_t vertex, std::size_t edge) const;

    /// Checks this partition against a graph; throws InvalidPartition.
    void
    validate(const DirectedMultigraph& g) const;

private:
    std::vector<Blocks> blocks_;
    std::vector<std::vector<std::size_t>> user_order_;
};

using OutPartition = EdgePartition<SplitKind::Out>;
using InPartition = EdgePartition<SplitKind::In>;

/// New vertex I^n (out) or J_n (in): `block` is 0-based.
struct SplitVertex {
    std::size_t old_vertex = 0;
    std::size_t block = 0;
};

/// New edge e^j (out) or e_i (in): `copy` is the 0-based block index of the
/// endpoint vertex that the copy is attached to.
struct SplitEdge {
    std::size_t old_edge = 0;
    std::size_t copy = 0;
};

/// Everything produced by a single state splitting. For both kinds
/// C * D = original and D * C = split_matrix.
struct SplitResult {
    SplitKind kind = SplitKind::Out;
    TransitionMatrix original;
    DirectedMultigraph graph;
    TransitionMatrix split_matrix;
    IntMatrix C;
    IntMatrix D;
    TransitionMatrix Z_hat;
    std::vector<SplitVertex> vertex_map;  // indexed by new vertex
    std::vector<SplitEdge> edge_map;      // indexed by new edge id
};

SplitResult
out_split(const DirectedMultigraph& g, const OutPartition& p);

/// In-split: edge e in block E^J_j with s(e) = I gives e_1..e_{m(I)},
/// e_i : I_i -> J_j. Companions are C(I,J_k) = |E_I ∩ E^J_k| and
/// D(J_k,J') = [J = J'].
SplitResult
in_split(const DirectedMultigraph& g, const InPartition& p);

/// Reinterprets an in-partition of G as an out-partition of G^t
/// (edge i->j#k of G is edge j->i#k of G^t).
OutPartition
as_transposed_out_partition(const DirectedMultigraph& g, const InPartition& p);

/// [[0, C], [D, 0]].
TransitionMatrix
bipartite_companion(const IntMatrix& c, const IntMatrix& d);

/// Vertex classes of size >= 2 whose columns in A coincide, ascending
/// lexicographically.
std::vector<std::vector<std::size_t>>
find_out_amalgamations(const TransitionMatrix& a);

/// As above, by identical rows.
std::vector<std::vector<std::size_t>>
find_in_amalgamations(const TransitionMatrix& a);

/// Result of merging a vertex set. `witness` re-splits `merged` with
/// `partition`; `relabel[v]` is the original vertex that split vertex v
/// corresponds to, so witness.split_matrix(v,w) = A(relabel[v], relabel[w]).
struct OutAmalgamation {
    TransitionMatrix merged;
    OutPartition partition;
    SplitResult witness;
    std::vector<std::size_t> relabel;
};

struct InAmalgamation {
    TransitionMatrix merged;
    InPartition partition;
    SplitResult witness;
    std::vector<std::size_t> relabel;
};

/// Throws NotAmalgamable if the columns of `merge_set` differ or a member
/// has no out-edge.
OutAmalgamation
out_amalgamate(const DirectedMultigraph& g, const std::vector<std::size_t>& merge_set);

/// Mirror of out_amalgamate: members must share rows.
InAmalgamation
in_amalgamate(const DirectedMultigraph& g, const std::vector<std::size_t>& merge_set);

/// Applies a vertex relabeling: out(v,w) = a(relabel[v], relabel[w]).
TransitionMatrix
relabeled(const TransitionMatrix& a, const std::vector<std::size_t>& relabel);

}  // namespace ssw
