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


#include "ssw/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace ssw {

std::string_view
to_string(SplitKind kind) {
    return kind == SplitKind::Out ? "out" : "in";
}

namespace {

template <SplitKind K>
const std::vector<std::size_t>&
incident(const DirectedMultigraph& g, std::size_t v) {
    if constexpr (K == SplitKind::Out) {
        return g.out_edges(v);
    } else {
        return g.in_edges(v);
    }
}

[[noreturn]] void
invalid(const std::string& what) {
    throw Error(ErrorKind::InvalidPartition, what);
}

}  // namespace

template <SplitKind K>
EdgePartition<K>::EdgePartition(const DirectedMultigraph& g, std::vector<Blocks> blocks_per_vertex)
    : blocks_(std::move(blocks_per_vertex)) {
    if (blocks_.size() != g.vertex_count()) {
        invalid("partition covers " + std::to_string(blocks_.size()) + " vertices, graph has " +
                std::to_string(g.vertex_count()));
    }
    user_order_.resize(blocks_.size());
    for (std::size_t v = 0; v < blocks_.size(); ++v) {
        auto& blocks = blocks_[v];
        for (auto& b : blocks) {
            std::sort(b.begin(), b.end());
        }
        std::vector<std::size_t> order(blocks.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            if (blocks[x].empty() || blocks[y].empty()) {
                return !blocks[x].empty() && blocks[y].empty();
            }
            return blocks[x].front() < blocks[y].front();
        });
        Blocks sorted;
        sorted.reserve(blocks.size());
        for (std::size_t idx : order) {
            sorted.push_back(std::move(blocks[idx]));
        }
        blocks = std::move(sorted);
        user_order_[v] = std::move(order);
    }
    validate(g);
}

template <SplitKind K>
void
EdgePartition<K>::validate(const DirectedMultigraph& g) const {
    if (blocks_.size() != g.vertex_count()) {
        invalid("partition does not match the graph's vertex count");
    }
    for (std::size_t v = 0; v < blocks_.size(); ++v) {
        const auto& expected = incident<K>(g, v);
        const auto& vname = g.vertex_label(v);
        if (expected.empty()) {
            // a vertex with no incident edges cannot be split at all
            if (!blocks_[v].empty()) {
                invalid("vertex " + vname + " has no edges to partition");
            }
            continue;
        }
        if (blocks_[v].empty()) {
            invalid("vertex " + vname + " has no blocks");
        }
        std::vector<std::size_t> seen;
        for (const auto& block : blocks_[v]) {
            if (block.empty()) {
                invalid("vertex " + vname + " has an empty block");
            }
            seen.insert(seen.end(), block.begin(), block.end());
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
            invalid("vertex " + vname + " has overlapping blocks");
        }
        if (seen != expected) {
            invalid("blocks of vertex " + vname + " do not cover its " +
                    (K == SplitKind::Out ? std::string("out-edges") : std::string("in-edges")) + " exactly");
        }
    }
}

template <SplitKind K>
EdgePartition<K>
EdgePartition<K>::trivial(const DirectedMultigraph& g) {
    std::vector<Blocks> blocks(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (!incident<K>(g, v).empty()) {
            blocks[v].push_back(incident<K>(g, v));
        }
    }
    return EdgePartition(g, std::move(blocks));
}

template <SplitKind K>
EdgePartition<K>
EdgePartition<K>::discrete(const DirectedMultigraph& g) {
    std::vector<Blocks> blocks(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t e : incident<K>(g, v)) {
            blocks[v].push_back({e});
        }
    }
    return EdgePartition(g, std::move(blocks));
}

template <SplitKind K>
std::size_t
EdgePartition<K>::block_of(std::size_t vertex, std::size_t edge) const {
    const auto& blocks = blocks_.at(vertex);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (std::binary_search(blocks[b].begin(), blocks[b].end(), edge)) {
            return b;
        }
    }
    invalid("edge " + std::to_string(edge + 1) + " is in no block of vertex " + std::to_string(vertex + 1));
}

template class EdgePartition<SplitKind::Out>;
template class EdgePartition<SplitKind::In>;

TransitionMatrix
bipartite_companion(const IntMatrix& c, const IntMatrix& d) {
    if (c.rows() != d.cols() || c.cols() != d.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "C and D shapes are not transposes of each other");
    }
    const auto n = c.rows();
    const auto m = c.cols();
    IntMatrix z(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            z(i, n + j) = c(i, j);
            z(n + j, i) = d(j, i);
        }
    }
    return TransitionMatrix(std::move(z));
}

namespace {

struct PendingEdge {
    std::size_t source;
    std::size_t target;
    std::size_t old_edge;
    std::size_t copy;

    auto
    key() const {
        return std::tie(source, target, old_edge, copy);
    }
};

// Shared tail of out_split / in_split: canonicalize pending edges and
// check the companion identities.
template <SplitKind K>
SplitResult
assemble(const DirectedMultigraph& g, const EdgePartition<K>& p, std::vector<PendingEdge> pending,
         std::size_t new_count, IntMatrix c, IntMatrix d) {
    SplitResult r;
    r.kind = K;
    r.original = to_matrix(g);

    std::vector<std::string> labels;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t b = 0; b < p.block_count(v); ++b) {
            r.vertex_map.push_back({v, b});
            labels.push_back(g.vertex_label(v) + (K == SplitKind::Out ? "^" : "_") + std::to_string(b + 1));
        }
    }

    std::sort(pending.begin(), pending.end(),
              [](const PendingEdge& x, const PendingEdge& y) { return x.key() < y.key(); });
    std::vector<Edge> edges;
    edges.reserve(pending.size());
    for (std::size_t i = 0; i < pending.size(); ++i) {
        const auto& pe = pending[i];
        const bool first = i == 0 || pending[i - 1].source != pe.source || pending[i - 1].target != pe.target;
        const std::int64_t copy = first ? 1 : edges.back().copy + 1;
        edges.push_back({pe.source, pe.target, copy});
        r.edge_map.push_back({pe.old_edge, pe.copy});
    }
    r.graph = DirectedMultigraph(std::move(labels), std::move(edges));
    r.split_matrix = to_matrix(r.graph);
    if (r.split_matrix.dim() != new_count) {
        throw Error(ErrorKind::InvalidPartition, "split produced an inconsistent vertex count");
    }
    r.C = std::move(c);
    r.D = std::move(d);
    r.Z_hat = bipartite_companion(r.C, r.D);
    if (!(multiply(r.C, r.D) == r.original.matrix()) || !(multiply(r.D, r.C) == r.split_matrix.matrix())) {
        throw Error(ErrorKind::InvalidPartition, "companion matrices do not factor the split");
    }
    return r;
}

template <SplitKind K>
std::vector<std::size_t>
block_offsets(const EdgePartition<K>& p, std::size_t& total) {
    std::vector<std::size_t> offset(p.vertex_count());
    total = 0;
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        offset[v] = total;
        total += p.block_count(v);
    }
    return offset;
}

}  // namespace

SplitResult
out_split(const DirectedMultigraph& g, const OutPartition& p) {
    p.validate(g);
    const auto n = g.vertex_count();
    std::size_t m = 0;
    const auto offset = block_offsets(p, m);

    std::vector<PendingEdge> pending;
    IntMatrix c(n, m);
    IntMatrix d(m, n);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t b = 0; b < p.block_count(v); ++b) {
            c(v, offset[v] + b) = 1;
        }
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        const auto i = p.block_of(edge.source, e);
        const auto src = offset[edge.source] + i;
        d(src, edge.target) = add(d(src, edge.target), std::int64_t{1});
        for (std::size_t j = 0; j < p.block_count(edge.target); ++j) {
            pending.push_back({src, offset[edge.target] + j, e, j});
        }
    }
    return assemble(g, p, std::move(pending), m, std::move(c), std::move(d));
}

SplitResult
in_split(const DirectedMultigraph& g, const InPartition& p) {
    p.validate(g);
    const auto n = g.vertex_count();
    std::size_t m = 0;
    const auto offset = block_offsets(p, m);

    std::vector<PendingEdge> pending;
    IntMatrix c(n, m);
    IntMatrix d(m, n);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t b = 0; b < p.block_count(v); ++b) {
            d(offset[v] + b, v) = 1;
        }
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        const auto j = p.block_of(edge.target, e);
        const auto dst = offset[edge.target] + j;
        c(edge.source, dst) = add(c(edge.source, dst), std::int64_t{1});
        for (std::size_t i = 0; i < p.block_count(edge.source); ++i) {
            pending.push_back({offset[edge.source] + i, dst, e, i});
        }
    }
    return assemble(g, p, std::move(pending), m, std::move(c), std::move(d));
}

OutPartition
as_transposed_out_partition(const DirectedMultigraph& g, const InPartition& p) {
    p.validate(g);
    const auto gt = from_matrix(transpose(to_matrix(g)), g.vertex_labels());
    std::vector<OutPartition::Blocks> blocks(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        for (const auto& block : p.blocks(v)) {
            std::vector<std::size_t> mapped;
            for (std::size_t e : block) {
                const Edge& edge = g.edge(e);
                mapped.push_back(*gt.find_edge(edge.target, edge.source, edge.copy));
            }
            blocks[v].push_back(std::move(mapped));
        }
    }
    return OutPartition(gt, std::move(blocks));
}

TransitionMatrix
relabeled(const TransitionMatrix& a, const std::vector<std::size_t>& relabel) {
    IntMatrix m(relabel.size(), relabel.size());
    for (std::size_t v = 0; v < relabel.size(); ++v) {
        for (std::size_t w = 0; w < relabel.size(); ++w) {
            m(v, w) = a(relabel.at(v), relabel.at(w));
        }
    }
    return TransitionMatrix(std::move(m));
}

namespace {

// by_columns: vertices share in-edge patterns (out-amalgamation);
// otherwise they share out-edge patterns (in-amalgamation).
std::vector<std::vector<std::size_t>>
identical_classes(const TransitionMatrix& a, bool by_columns) {
    const auto n = a.dim();
    auto line = [&](std::size_t v) {
        std::vector<std::int64_t> out(n);
        for (std::size_t k = 0; k < n; ++k) {
            out[k] = by_columns ? a(k, v) : a(v, k);
        }
        return out;
    };
    std::vector<bool> used(n, false);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t v = 0; v < n; ++v) {
        if (used[v]) {
            continue;
        }
        std::vector<std::size_t> cls{v};
        const auto ref = line(v);
        for (std::size_t w = v + 1; w < n; ++w) {
            if (!used[w] && line(w) == ref) {
                cls.push_back(w);
                used[w] = true;
            }
        }
        if (cls.size() >= 2) {
            classes.push_back(std::move(cls));
        }
    }
    return classes;
}

struct MergePlan {
    std::vector<std::size_t> members;  // sorted merge set
    std::vector<std::size_t> rep;      // original vertex -> merged index
    std::vector<std::size_t> back;     // merged index -> original representative
    TransitionMatrix merged;
};

MergePlan
plan_merge(const TransitionMatrix& a, std::vector<std::size_t> set, bool by_columns) {
    const auto n = a.dim();
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.empty()) {
        throw Error(ErrorKind::NotAmalgamable, "empty merge set");
    }
    for (std::size_t v : set) {
        if (v >= n) {
            throw Error(ErrorKind::NotAmalgamable, "merge set references vertex " + std::to_string(v + 1));
        }
    }
    const auto s0 = set.front();
    for (std::size_t v : set) {
        for (std::size_t k = 0; k < n; ++k) {
            const bool same = by_columns ? a(k, v) == a(k, s0) : a(v, k) == a(s0, k);
            if (!same) {
                throw Error(ErrorKind::NotAmalgamable, std::string(by_columns ? "columns " : "rows ") +
                                                           std::to_string(s0 + 1) + " and " + std::to_string(v + 1) +
                                                           " differ");
            }
        }
        std::int64_t degree = 0;
        for (std::size_t k = 0; k < n; ++k) {
            degree += by_columns ? a(v, k) : a(k, v);
        }
        if (degree == 0) {
            throw Error(ErrorKind::NotAmalgamable, "vertex " + std::to_string(v + 1) + " has no edge to distribute");
        }
    }

    MergePlan plan;
    plan.members = set;
    plan.rep.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        const bool absorbed = v != s0 && std::binary_search(set.begin(), set.end(), v);
        if (!absorbed) {
            plan.rep[v] = plan.back.size();
            plan.back.push_back(v);
        }
    }
    for (std::size_t v : set) {
        plan.rep[v] = plan.rep[s0];
    }
    const auto n2 = plan.back.size();
    IntMatrix m(n2, n2);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t w = 0; w < n; ++w) {
            // the shared side of the merge is counted once, through s0
            const auto shared = by_columns ? w : u;
            const bool absorbed = shared != s0 && std::binary_search(set.begin(), set.end(), shared);
            if (!absorbed) {
                m(plan.rep[u], plan.rep[w]) = add(m(plan.rep[u], plan.rep[w]), a(u, w));
            }
        }
    }
    plan.merged = TransitionMatrix(std::move(m));
    return plan;
}

// Blocks of the merged vertex: one per member, copies numbered by (member, copy).
std::vector<std::vector<std::size_t>>
member_blocks(const TransitionMatrix& a, const DirectedMultigraph& merged_graph, const MergePlan& plan,
              bool by_columns) {
    const auto merged_vertex = plan.rep[plan.members.front()];
    std::vector<std::vector<std::size_t>> blocks(plan.members.size());
    for (std::size_t other = 0; other < plan.back.size(); ++other) {
        const auto other_orig = plan.back[other];
        std::int64_t next = 1;
        for (std::size_t k = 0; k < plan.members.size(); ++k) {
            const auto s = plan.members[k];
            const auto count = by_columns ? a(s, other_orig) : a(other_orig, s);
            for (std::int64_t c = 0; c < count; ++c, ++next) {
                const auto edge = by_columns ? merged_graph.find_edge(merged_vertex, other, next)
                                             : merged_graph.find_edge(other, merged_vertex, next);
                blocks[k].push_back(*edge);
            }
        }
    }
    return blocks;
}

template <SplitKind K>
std::vector<std::size_t>
relabel_from(const SplitResult& witness, const EdgePartition<K>& p, const MergePlan& plan) {
    const auto merged_vertex = plan.rep[plan.members.front()];
    std::vector<std::size_t> relabel;
    for (const auto& sv : witness.vertex_map) {
        if (sv.old_vertex == merged_vertex) {
            relabel.push_back(plan.members[p.user_order(merged_vertex)[sv.block]]);
        } else {
            relabel.push_back(plan.back[sv.old_vertex]);
        }
    }
    return relabel;
}

}  // namespace

std::vector<std::vector<std::size_t>>
find_out_amalgamations(const TransitionMatrix& a) {
    return identical_classes(a, true);
}

std::vector<std::vector<std::size_t>>
find_in_amalgamations(const TransitionMatrix& a) {
    return identical_classes(a, false);
}

OutAmalgamation
out_amalgamate(const DirectedMultigraph& g, const std::vector<std::size_t>& merge_set) {
    const auto a = to_matrix(g);
    auto plan = plan_merge(a, merge_set, true);
    const auto merged_graph = from_matrix(plan.merged);
    std::vector<OutPartition::Blocks> blocks(plan.back.size());
    for (std::size_t v = 0; v < plan.back.size(); ++v) {
        if (!merged_graph.out_edges(v).empty()) {
            blocks[v].push_back(merged_graph.out_edges(v));
        }
    }
    blocks[plan.rep[plan.members.front()]] = member_blocks(a, merged_graph, plan, true);
    OutPartition p(merged_graph, std::move(blocks));
    auto witness = out_split(merged_graph, p);
    auto relabel = relabel_from(witness, p, plan);
    if (!(relabeled(a, relabel) == witness.split_matrix)) {
        throw Error(ErrorKind::NotAmalgamable, "re-splitting the amalgamation does not recover the graph");
    }
    return {std::move(plan.merged), std::move(p), std::move(witness), std::move(relabel)};
}

InAmalgamation
in_amalgamate(const DirectedMultigraph& g, const std::vector<std::size_t>& merge_set) {
    const auto a = to_matrix(g);
    auto plan = plan_merge(a, merge_set, false);
    const auto merged_graph = from_matrix(plan.merged);
    std::vector<InPartition::Blocks> blocks(plan.back.size());
    for (std::size_t v = 0; v < plan.back.size(); ++v) {
        if (!merged_graph.in_edges(v).empty()) {
            blocks[v].push_back(merged_graph.in_edges(v));
        }
    }
    blocks[plan.rep[plan.members.front()]] = member_blocks(a, merged_graph, plan, false);
    InPartition p(merged_graph, std::move(blocks));
    auto witness = in_split(merged_graph, p);
    auto relabel = relabel_from(witness, p, plan);
    if (!(relabeled(a, relabel) == witness.split_matrix)) {
        throw Error(ErrorKind::NotAmalgamable, "re-splitting the amalgamation does not recover the graph");
    }
    return {std::move(plan.merged), std::move(p), std::move(witness), std::move(relabel)};
}

}  // namespace ssw
