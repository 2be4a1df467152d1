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


#include <doctest.h>

#include "ssw/splitting.hpp"
#include "support.hpp"

using namespace ssw;
using ssw::testing::naive_product;

namespace {

const TransitionMatrix kGolden{{1, 1}, {1, 0}};

// Undo a split by merging each old vertex's children, last vertex first so
// earlier indices stay put.
TransitionMatrix
amalgamate_back(const SplitResult& s, bool out) {
    TransitionMatrix current = s.split_matrix;
    const auto n = s.original.dim();
    for (std::size_t old = n; old-- > 0;) {
        std::vector<std::size_t> children;
        for (std::size_t v = 0; v < s.vertex_map.size(); ++v) {
            if (s.vertex_map[v].old_vertex == old) {
                children.push_back(v);
            }
        }
        if (children.size() > 1) {
            const auto g = from_matrix(current);
            current = out ? out_amalgamate(g, children).merged : in_amalgamate(g, children).merged;
        }
    }
    return current;
}

IntMatrix
block_square(const IntMatrix& c, const IntMatrix& d) {
    const auto cd = naive_product(c, d);
    const auto dc = naive_product(d, c);
    const auto n = cd.rows();
    const auto m = dc.rows();
    IntMatrix out(n + m, n + m, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = cd(i, j);
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            out(n + i, n + j) = dc(i, j);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("out-split of the golden mean") {
    const auto g = from_matrix(kGolden);
    const auto s = out_split(g, OutPartition(g, {{{0}, {1}}, {{2}}}));
    CHECK(s.split_matrix == TransitionMatrix{{1, 1, 0}, {0, 0, 1}, {1, 1, 0}});
    CHECK(s.C == IntMatrix{{1, 1, 0}, {0, 0, 1}});
    CHECK(s.D == IntMatrix{{1, 0}, {0, 1}, {1, 0}});
    CHECK(naive_product(s.C, s.D) == kGolden.matrix());
    CHECK(naive_product(s.D, s.C) == s.split_matrix.matrix());
    CHECK(s.graph.vertex_label(1) == "1^2");
}

TEST_CASE("out-split of [2] into singletons") {
    const auto g = from_matrix({{2}});
    const auto s = out_split(g, OutPartition(g, {{{0}, {1}}}));
    CHECK(s.split_matrix == TransitionMatrix{{1, 1}, {1, 1}});
    CHECK(s.C == IntMatrix{{1, 1}});
    CHECK(s.D == IntMatrix{{1}, {1}});
}

TEST_CASE("trivial out-partition is the identity split") {
    testing::Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        const auto a = testing::random_essential(rng);
        const auto g = from_matrix(a);
        const auto s = out_split(g, OutPartition::trivial(g));
        CHECK(s.split_matrix == a);
        CHECK(s.C == IntMatrix::identity(a.dim()));
        CHECK(s.D == a.matrix());
    }
}

TEST_CASE("invalid partitions are rejected") {
    const auto g = from_matrix(kGolden);
    CHECK_THROWS_AS(OutPartition(g, {{{0}}, {{2}}}), Error);
    CHECK_THROWS_AS(OutPartition(g, {{{0, 1}, {1}}, {{2}}}), Error);
    CHECK_THROWS_AS(OutPartition(g, {{{0, 1}, {}}, {{2}}}), Error);
    CHECK_THROWS_AS(OutPartition(g, {{{0, 2}}, {{1}}}), Error);
}

TEST_CASE("in-split agrees with the out-split of the transpose") {
    const auto g = from_matrix(kGolden);
    const InPartition p(g, {{{0}, {2}}, {{1}}});
    const auto s = in_split(g, p);
    const auto gt = from_matrix(transpose(kGolden));
    const auto t = out_split(gt, as_transposed_out_partition(g, p));
    CHECK(s.split_matrix == transpose(t.split_matrix));
    CHECK(naive_product(s.C, s.D) == kGolden.matrix());
    CHECK(naive_product(s.D, s.C) == s.split_matrix.matrix());
}

TEST_CASE("trivial in-partition") {
    const auto g = from_matrix({{2}});
    const auto s = in_split(g, InPartition::trivial(g));
    CHECK(s.split_matrix == TransitionMatrix{{2}});
    CHECK(s.C == IntMatrix{{2}});
    CHECK(s.D == IntMatrix{{1}});
}

TEST_CASE("in-split of [2] into singletons") {
    const auto g = from_matrix({{2}});
    const auto s = in_split(g, InPartition(g, {{{0}, {1}}}));
    CHECK(s.split_matrix == TransitionMatrix{{1, 1}, {1, 1}});
    CHECK(s.graph.vertex_label(0) == "1_1");
}

TEST_CASE("bipartite companion squares to the block diagonal") {
    const auto g = from_matrix(kGolden);
    const auto s = out_split(g, OutPartition(g, {{{0}, {1}}, {{2}}}));
    CHECK(s.Z_hat == bipartite_companion(s.C, s.D));
    CHECK(naive_product(s.Z_hat, s.Z_hat) == block_square(s.C, s.D));
}

TEST_CASE("out-amalgamation candidates") {
    using Sets = std::vector<std::vector<std::size_t>>;
    CHECK(find_out_amalgamations({{1, 1, 0}, {0, 0, 1}, {1, 1, 0}}) == Sets{{0, 1}});
    CHECK(find_out_amalgamations(kGolden).empty());
    CHECK(find_out_amalgamations({{1, 1}, {1, 1}}) == Sets{{0, 1}});
    CHECK(find_in_amalgamations({{1, 1, 0}, {0, 0, 1}, {1, 1, 0}}) == Sets{{0, 2}});
}

TEST_CASE("out-amalgamation inverts the golden-mean split") {
    const TransitionMatrix split{{1, 1, 0}, {0, 0, 1}, {1, 1, 0}};
    const auto r = out_amalgamate(from_matrix(split), {0, 1});
    CHECK(r.merged == kGolden);
    const auto g = from_matrix(kGolden);
    CHECK(r.partition.blocks(0) == OutPartition::Blocks{{0}, {1}});
    CHECK(r.partition.blocks(1) == OutPartition::Blocks{{2}});
    CHECK(relabeled(split, r.relabel) == r.witness.split_matrix);
    CHECK(out_split(g, r.partition).split_matrix == r.witness.split_matrix);
}

TEST_CASE("amalgamation edge cases") {
    CHECK(out_amalgamate(from_matrix(kGolden), {1}).merged == kGolden);
    CHECK(out_amalgamate(from_matrix({{1, 1}, {1, 1}}), {0, 1}).merged == TransitionMatrix{{2}});
    CHECK(in_amalgamate(from_matrix({{1, 1}, {1, 1}}), {0, 1}).merged == TransitionMatrix{{2}});
    CHECK_THROWS_AS(out_amalgamate(from_matrix(kGolden), {0, 1}), Error);
}

TEST_CASE("random splits factor exactly and amalgamate back") {
    testing::Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = testing::random_essential(rng);
        const auto g = from_matrix(a);
        const auto s = out_split(g, testing::random_out_partition(rng, g));
        REQUIRE(naive_product(s.C, s.D) == a.matrix());
        REQUIRE(naive_product(s.D, s.C) == s.split_matrix.matrix());
        REQUIRE(naive_product(s.Z_hat, s.Z_hat) == block_square(s.C, s.D));
        REQUIRE(amalgamate_back(s, true) == a);

        const auto t = in_split(g, testing::random_in_partition(rng, g));
        REQUIRE(naive_product(t.C, t.D) == a.matrix());
        REQUIRE(naive_product(t.D, t.C) == t.split_matrix.matrix());
        REQUIRE(amalgamate_back(t, false) == a);
        std::int64_t edges = 0;
        for (auto x : t.split_matrix.matrix().data()) {
            edges += x;
        }
        REQUIRE(static_cast<std::size_t>(edges) == t.edge_map.size());
    }
}
