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


#include "ssw/graph.hpp"

#include <algorithm>
#include <ostream>

namespace ssw {

void
require_nonnegative(const IntMatrix& m, const char* what) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) < 0) {
                throw Error(ErrorKind::MalformedInput, std::string(what) + " has negative entry at (" +
                                                           std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            }
        }
    }
}

TransitionMatrix::TransitionMatrix(IntMatrix entries) : m_(std::move(entries)) {
    if (!m_.is_square()) {
        throw Error(ErrorKind::DimensionMismatch, "transition matrix must be square");
    }
    if (m_.rows() == 0) {
        throw Error(ErrorKind::MalformedInput, "transition matrix must have dimension >= 1");
    }
    require_nonnegative(m_, "transition matrix");
}

std::ostream&
operator<<(std::ostream& os, const TransitionMatrix& a) {
    return os << a.matrix();
}

std::string
edge_label(const Edge& e) {
    return std::to_string(e.source + 1) + "->" + std::to_string(e.target + 1) + "#" + std::to_string(e.copy);
}

DirectedMultigraph::DirectedMultigraph(std::vector<std::string> vertex_labels, std::vector<Edge> edges)
    : labels_(std::move(vertex_labels)), edges_(std::move(edges)) {
    const auto n = labels_.size();
    std::sort(edges_.begin(), edges_.end());
    out_.assign(n, {});
    in_.assign(n, {});
    for (std::size_t id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        if (e.source >= n || e.target >= n) {
            throw Error(ErrorKind::MalformedInput, "edge " + ssw::edge_label(e) + " references a missing vertex");
        }
        // copies of each (source, target) pair must be exactly 1..count
        const bool first = id == 0 || edges_[id - 1].source != e.source || edges_[id - 1].target != e.target;
        const std::int64_t expected = first ? 1 : edges_[id - 1].copy + 1;
        if (e.copy != expected) {
            throw Error(ErrorKind::MalformedInput, "edge " + ssw::edge_label(e) + " breaks copy numbering");
        }
        out_[e.source].push_back(id);
        in_[e.target].push_back(id);
    }
}

std::optional<std::size_t>
DirectedMultigraph::find_edge(std::size_t source, std::size_t target, std::int64_t copy) const {
    const Edge key{source, target, copy};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - edges_.begin());
}

std::string
DirectedMultigraph::edge_label(std::size_t id) const {
    return ssw::edge_label(edges_.at(id));
}

DirectedMultigraph
from_matrix(const TransitionMatrix& a, std::vector<std::string> vertex_labels) {
    if (vertex_labels.size() != a.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "vertex label count differs from matrix dimension");
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            for (std::int64_t k = 1; k <= a(i, j); ++k) {
                edges.push_back({i, j, k});
            }
        }
    }
    return DirectedMultigraph(std::move(vertex_labels), std::move(edges));
}

DirectedMultigraph
from_matrix(const TransitionMatrix& a) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        labels.push_back(std::to_string(i + 1));
    }
    return from_matrix(a, std::move(labels));
}

TransitionMatrix
to_matrix(const DirectedMultigraph& g) {
    IntMatrix m(g.vertex_count(), g.vertex_count());
    for (const Edge& e : g.edges()) {
        m(e.source, e.target) = add(m(e.source, e.target), std::int64_t{1});
    }
    return TransitionMatrix(std::move(m));
}

bool
is_essential(const TransitionMatrix& a) {
    const auto n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        bool row = false;
        bool col = false;
        for (std::size_t j = 0; j < n; ++j) {
            row = row || a(i, j) > 0;
            col = col || a(j, i) > 0;
        }
        if (!row || !col) {
            return false;
        }
    }
    return true;
}

EdgeFactorization
edge_graph(const TransitionMatrix& a) {
    if (!is_essential(a)) {
        throw Error(ErrorKind::ZeroRowOrColumn, "matrix " + render(a.matrix()) + " has a zero row or column");
    }
    const auto g = from_matrix(a);
    const auto n = a.dim();
    const auto ne = g.edge_count();
    IntMatrix r(n, ne);
    IntMatrix s(ne, n);
    IntMatrix ag(ne, ne);
    for (std::size_t i = 0; i < ne; ++i) {
        const Edge& e = g.edge(i);
        r(e.source, i) = 1;
        s(i, e.target) = 1;
        for (std::size_t j : g.out_edges(e.target)) {
            ag(i, j) = 1;
        }
    }
    EdgeFactorization f{TransitionMatrix(std::move(ag)), std::move(r), std::move(s)};
    if (!(multiply(f.R, f.S) == a.matrix()) || !(multiply(f.S, f.R) == f.AG.matrix())) {
        throw Error(ErrorKind::MalformedInput, "edge-graph factorization failed to reproduce A");
    }
    return f;
}

bool
is_irreducible(const TransitionMatrix& a) {
    const auto n = a.dim();
    // forward and backward reachability from vertex 0
    auto reach = [&](bool forward) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < n; ++w) {
                const auto entry = forward ? a(v, w) : a(w, v);
                if (entry > 0 && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    };
    return reach(true) && reach(false);
}

bool
is_permutation(const TransitionMatrix& a) {
    const auto n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t row = 0;
        std::int64_t col = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (a(i, j) > 1 || a(j, i) > 1) {
                return false;
            }
            row += a(i, j);
            col += a(j, i);
        }
        if (row != 1 || col != 1) {
            return false;
        }
    }
    return true;
}

TransitionMatrix
transpose(const TransitionMatrix& a) {
    return TransitionMatrix(a.matrix().transposed());
}

namespace {

template <class T>
std::vector<BigInt>
traces(const Matrix<T>& a, std::size_t n_max) {
    std::vector<BigInt> out;
    out.reserve(n_max);
    Matrix<T> power = a;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (n > 1) {
            power = multiply(power, a);
        }
        if constexpr (std::is_same_v<T, BigInt>) {
            out.push_back(trace(power));
        } else {
            out.push_back(to_big(trace(power)));
        }
    }
    return out;
}

}  // namespace

std::vector<BigInt>
trace_sequence(const TransitionMatrix& a, std::size_t n_max, Arithmetic mode) {
    if (n_max == 0) {
        throw Error(ErrorKind::MalformedInput, "trace sequence length must be >= 1");
    }
    if (mode == Arithmetic::Arbitrary) {
        // exact either way; int64 is much faster when nothing overflows
        try {
            return traces(a.matrix(), n_max);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Overflow) {
                throw;
            }
        }
        return traces(to_big(a.matrix()), n_max);
    }
    return traces(a.matrix(), n_max);
}

}  // namespace ssw
