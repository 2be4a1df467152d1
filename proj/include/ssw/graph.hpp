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
#include <optional>
#include <string>
#include <vector>

#include "ssw/checked.hpp"
#include "ssw/matrix.hpp"

namespace ssw {

/// Square nonnegative integer matrix A; the adjacency data of a multigraph.
class TransitionMatrix {
public:
    TransitionMatrix() = default;
    explicit TransitionMatrix(IntMatrix entries);
    TransitionMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
        : TransitionMatrix(IntMatrix(rows)) {
    }

    std::size_t
    dim() const noexcept {
        return m_.rows();
    }
    std::int64_t
    operator()(std::size_t i, std::size_t j) const {
        return m_(i, j);
    }
    const IntMatrix&
    matrix() const noexcept {
        return m_;
    }

    friend bool
    operator==(const TransitionMatrix& a, const TransitionMatrix& b) {
        return a.m_ == b.m_;
    }

private:
    IntMatrix m_;
};

std::ostream&
operator<<(std::ostream& os, const TransitionMatrix& a);

/// Throws DimensionMismatch/MalformedInput unless every entry of `m` is >= 0.
void
require_nonnegative(const IntMatrix& m, const char* what);

struct Edge {
    std::size_t source = 0;  // 0-based vertex index
    std::size_t target = 0;
    std::int64_t copy = 1;   // 1..A(source, target)

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// G_A: vertices 0..N-1 and the A(i,j) parallel edges i -> j, kept in
/// canonical (source, target, copy) order so edge ids are stable.
class DirectedMultigraph {
public:
    DirectedMultigraph() = default;
    DirectedMultigraph(std::vector<std::string> vertex_labels, std::vector<Edge> edges);

    std::size_t
    vertex_count() const noexcept {
        return labels_.size();
    }
    std::size_t
    edge_count() const noexcept {
        return edges_.size();
    }
    const std::vector<Edge>&
    edges() const noexcept {
        return edges_;
    }
    const Edge&
    edge(std::size_t id) const {
        return edges_.at(id);
    }
    const std::string&
    vertex_label(std::size_t v) const {
        return labels_.at(v);
    }
    const std::vector<std::string>&
    vertex_labels() const noexcept {
        return labels_;
    }

    /// Out-edges E_I and in-edges E^J, each ascending by edge id.
    const std::vector<std::size_t>&
    out_edges(std::size_t v) const {
        return out_.at(v);
    }
    const std::vector<std::size_t>&
    in_edges(std::size_t v) const {
        return in_.at(v);
    }

    std::optional<std::size_t>
    find_edge(std::size_t source, std::size_t target, std::int64_t copy) const;

    /// "i->j#k", 1-based.
    std::string
    edge_label(std::size_t id) const;

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
};

std::string
edge_label(const Edge& e);

DirectedMultigraph
from_matrix(const TransitionMatrix& a);

/// Same as from_matrix but with caller-chosen vertex labels.
DirectedMultigraph
from_matrix(const TransitionMatrix& a, std::vector<std::string> vertex_labels);

TransitionMatrix
to_matrix(const DirectedMultigraph& g);

/// A = R S and A^G = S R, where A^G(i,j) = 1 iff t(a_i) = s(a_j).
struct EdgeFactorization {
    TransitionMatrix AG;
    IntMatrix R;  // N x N_A, R(j,i) = 1 iff vertex j = s(a_i)
    IntMatrix S;  // N_A x N, S(i,j) = 1 iff t(a_i) = vertex j
};

bool
is_essential(const TransitionMatrix& a);

/// Throws ZeroRowOrColumn if some vertex lacks an in- or out-edge.
EdgeFactorization
edge_graph(const TransitionMatrix& a);

bool
is_irreducible(const TransitionMatrix& a);
bool
is_permutation(const TransitionMatrix& a);
TransitionMatrix
transpose(const TransitionMatrix& a);

/// trace(A^n) for n = 1..n_max.
std::vector<BigInt>
trace_sequence(const TransitionMatrix& a, std::size_t n_max, Arithmetic mode = Arithmetic::Checked64);

}  // namespace ssw
