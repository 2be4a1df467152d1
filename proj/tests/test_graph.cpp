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

#include "ssw/graph.hpp"
#include "support.hpp"

using namespace ssw;
using ssw::testing::naive_product;

namespace {

std::vector<Edge>
edges_of(const TransitionMatrix& a) {
    return from_matrix(a).edges();
}

}  // namespace

TEST_CASE("from_matrix lists edges in canonical order") {
    CHECK(edges_of({{1, 1}, {1, 0}}) == std::vector<Edge>{{0, 0, 1}, {0, 1, 1}, {1, 0, 1}});
    CHECK(edges_of({{2}}) == std::vector<Edge>{{0, 0, 1}, {0, 0, 2}});
    CHECK(edges_of({{0, 2}, {1, 0}}) == std::vector<Edge>{{0, 1, 1}, {0, 1, 2}, {1, 0, 1}});
    CHECK(from_matrix({{2}}).edge_label(1) == "1->1#2");
}

TEST_CASE("to_matrix inverts from_matrix") {
    const TransitionMatrix gm{{1, 1}, {1, 0}};
    CHECK(to_matrix(from_matrix(gm)) == gm);
    CHECK(to_matrix(DirectedMultigraph({"1", "2"}, {})) == TransitionMatrix{{0, 0}, {0, 0}});
    CHECK(to_matrix(from_matrix({{3}})) == TransitionMatrix{{3}});
}

TEST_CASE("malformed transition matrices are rejected") {
    CHECK_THROWS_AS(TransitionMatrix({{1, -1}, {0, 1}}), Error);
    CHECK_THROWS_AS(TransitionMatrix(IntMatrix(2, 3, 0)), Error);
    CHECK_THROWS_AS(DirectedMultigraph({"1"}, {{0, 0, 2}}), Error);
}

TEST_CASE("edge graph of the golden mean") {
    const auto f = edge_graph({{1, 1}, {1, 0}});
    CHECK(f.R == IntMatrix{{1, 1, 0}, {0, 0, 1}});
    CHECK(f.S == IntMatrix{{1, 0}, {0, 1}, {1, 0}});
    CHECK(f.AG == TransitionMatrix{{1, 1, 0}, {0, 0, 1}, {1, 1, 0}});
    CHECK(naive_product(f.R, f.S) == IntMatrix{{1, 1}, {1, 0}});
    CHECK(naive_product(f.S, f.R) == f.AG.matrix());
}

TEST_CASE("edge graph of small cases") {
    const auto two = edge_graph({{2}});
    CHECK(two.R == IntMatrix{{1, 1}});
    CHECK(two.S == IntMatrix{{1}, {1}});
    CHECK(two.AG == TransitionMatrix{{1, 1}, {1, 1}});
    const auto one = edge_graph({{1}});
    CHECK(one.R == IntMatrix{{1}});
    CHECK(one.S == IntMatrix{{1}});
    CHECK(one.AG == TransitionMatrix{{1}});
}

TEST_CASE("edge graph requires an essential graph") {
    CHECK_THROWS_AS(edge_graph({{1, 1}, {0, 0}}), Error);
    CHECK_THROWS_AS(edge_graph({{1, 0}, {1, 0}}), Error);
    CHECK_FALSE(is_essential({{0}}));
}

TEST_CASE("irreducibility and permutation tests") {
    CHECK(is_irreducible({{1, 1}, {1, 0}}));
    CHECK_FALSE(is_permutation({{1, 1}, {1, 0}}));
    CHECK(is_irreducible({{0, 1}, {1, 0}}));
    CHECK(is_permutation({{0, 1}, {1, 0}}));
    CHECK_FALSE(is_irreducible({{1, 1}, {0, 1}}));
    CHECK(transpose({{1, 2}, {3, 4}}) == TransitionMatrix{{1, 3}, {2, 4}});
}

TEST_CASE("trace sequences") {
    CHECK(trace_sequence({{2}}, 4) == std::vector<BigInt>{2, 4, 8, 16});
    CHECK(trace_sequence({{1, 1}, {1, 0}}, 4) == std::vector<BigInt>{1, 3, 4, 7});
    CHECK(trace_sequence({{1, 0}, {0, 1}}, 3) == std::vector<BigInt>{2, 2, 2});
}

TEST_CASE("checked arithmetic overflows and big mode does not") {
    const TransitionMatrix big{{1000000}};
    CHECK_THROWS_AS(trace_sequence(big, 4), Error);
    const auto seq = trace_sequence(big, 4, Arithmetic::Arbitrary);
    CHECK(seq.back() == BigInt("1000000000000000000000000"));
}

TEST_CASE("random essential matrices: factorization and reachability") {
    testing::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = testing::random_essential(rng);
        const auto f = edge_graph(a);
        REQUIRE(naive_product(f.R, f.S) == a.matrix());
        REQUIRE(naive_product(f.S, f.R) == f.AG.matrix());
        REQUIRE(to_matrix(from_matrix(a)) == a);
        const auto seq = trace_sequence(a, 5);
        for (std::size_t n = 1; n <= 5; ++n) {
            REQUIRE(seq[n - 1] == testing::closed_walks(a, n));
        }
        // Reachability oracle: (I + A)^(N-1) has no zero entry.
        auto reach = IntMatrix::identity(a.dim());
        IntMatrix step = a.matrix();
        for (std::size_t i = 0; i < a.dim(); ++i) {
            for (std::size_t j = 0; j < a.dim(); ++j) {
                step(i, j) = (i == j || step(i, j) != 0) ? 1 : 0;
            }
        }
        for (std::size_t k = 1; k < a.dim(); ++k) {
            reach = naive_product(reach, step);
            for (std::size_t i = 0; i < a.dim(); ++i) {
                for (std::size_t j = 0; j < a.dim(); ++j) {
                    reach(i, j) = reach(i, j) != 0;
                }
            }
        }
        const bool all = std::all_of(reach.data().begin(), reach.data().end(), [](auto x) { return x != 0; });
        REQUIRE(is_irreducible(a) == all);
    }
}
