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

#include <set>

#include "ssw/elementary.hpp"
#include "support.hpp"

using namespace ssw;
using ssw::testing::naive_product;

namespace {

const TransitionMatrix kGolden{{1, 1}, {1, 0}};

ElementaryEquivalence
two_to_ones() {
    return make_elementary(IntMatrix{{1, 1}}, IntMatrix{{1}, {1}});
}

ElementaryEquivalence
golden_split() {
    const auto g = from_matrix(kGolden);
    return elementary_from_split(out_split(g, OutPartition(g, {{{0}, {1}}, {{2}}})));
}

struct PathOracle {
    std::vector<std::pair<std::size_t, std::size_t>> a_paths;
    std::vector<std::pair<std::size_t, std::size_t>> b_paths;
};

std::vector<Edge>
edge_list(const IntMatrix& m) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            for (std::int64_t k = 1; k <= m(i, j); ++k) {
                out.push_back({i, j, k});
            }
        }
    }
    return out;
}

// Enumerate two-step paths from scratch: the n-th path between a pair of
// endpoints, ordered by (middle, first edge, second edge), is the n-th edge
// between those endpoints.
std::vector<std::pair<std::size_t, std::size_t>>
paths(const IntMatrix& first, const IntMatrix& second) {
    const auto e1 = edge_list(first);
    const auto e2 = edge_list(second);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < first.rows(); ++i) {
        for (std::size_t j = 0; j < second.cols(); ++j) {
            for (std::size_t k = 0; k < first.cols(); ++k) {
                for (std::size_t x = 0; x < e1.size(); ++x) {
                    for (std::size_t y = 0; y < e2.size(); ++y) {
                        if (e1[x].source == i && e1[x].target == k && e2[y].source == k && e2[y].target == j) {
                            out.emplace_back(x, y);
                        }
                    }
                }
            }
        }
    }
    return out;
}

IntMatrix
dhat_oracle(const ElementaryEquivalence& ee) {
    const auto a = paths(ee.C, ee.D);
    const auto b = paths(ee.D, ee.C);
    IntMatrix out(a.size(), b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t l = 0; l < b.size(); ++l) {
            out(i, l) = a[i].second == b[l].first;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("verify_elementary") {
    CHECK(verify_elementary({{2}}, {{1, 1}, {1, 1}}, IntMatrix{{1, 1}}, IntMatrix{{1}, {1}}));
    CHECK(verify_elementary(golden_split()));
    const auto bad = verify_elementary({{2}}, {{3}}, IntMatrix{{1}}, IntMatrix{{2}});
    CHECK_FALSE(bad);
    CHECK(bad.locus.find("(1,1)") != std::string::npos);
    CHECK_THROWS_AS(verify_elementary({{2}}, {{3}}, IntMatrix{{1, 1}}, IntMatrix{{2}}), Error);
}

TEST_CASE("verify_elementary warns on permutation endpoints") {
    const auto v = verify_elementary({{0, 1}, {1, 0}}, {{0, 1}, {1, 0}}, IntMatrix{{1, 0}, {0, 1}},
                                     IntMatrix{{0, 1}, {1, 0}});
    CHECK(v);
    CHECK_FALSE(v.warnings.empty());
}

TEST_CASE("verify_chain") {
    const auto step = two_to_ones();
    CHECK(verify_chain({{step}}));
    CHECK(verify_chain({{step, reversed(step)}}));
    const auto broken = verify_chain({{step, golden_split()}});
    CHECK_FALSE(broken);
    CHECK(broken.locus.rfind("step 2", 0) == 0);
    CHECK_THROWS_AS(verify_chain({}), Error);
}

TEST_CASE("chain forward matrix") {
    const auto step = two_to_ones();
    CHECK(chain_forward_matrix({{step}}) == step.C);
    CHECK(chain_forward_matrix({{step, reversed(step)}}) == IntMatrix{{2}});
    const auto g = from_matrix(kGolden);
    const auto trivial = elementary_from_split(out_split(g, OutPartition::trivial(g)));
    CHECK(chain_forward_matrix({{trivial, trivial}}) == IntMatrix::identity(2));
}

TEST_CASE("edge pairing of [2] = CD") {
    const auto p = edge_pairing(two_to_ones());
    CHECK(p.c_edges.size() == 2);
    CHECK(p.d_edges.size() == 2);
    using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
    CHECK(p.a_paths == Pairs{{0, 0}, {1, 1}});
    CHECK(p.b_paths == Pairs{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(p.a_edge(1, 1) == 1);
    CHECK(p.b_edge(1, 0) == 2);
}

TEST_CASE("edge pairing counts and identity witness") {
    const auto p = edge_pairing(golden_split());
    CHECK(p.a_paths.size() == 3);
    CHECK(p.b_paths.size() == 5);
    const auto id = make_elementary(IntMatrix::identity(2), kGolden.matrix());
    const auto q = edge_pairing(make_elementary(IntMatrix::identity(2), IntMatrix::identity(2)));
    CHECK(q.a_paths == decltype(q.a_paths){{0, 0}, {1, 1}});
    CHECK(q.b_paths == decltype(q.b_paths){{0, 0}, {1, 1}});
    CHECK(edge_pairing(id).a_paths.size() == 3);
}

TEST_CASE("D-hat") {
    CHECK(dhat(two_to_ones()) == IntMatrix{{1, 1, 0, 0}, {0, 0, 1, 1}});
    CHECK(dhat(golden_split()) == IntMatrix{{1, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 1}});
    CHECK(dhat(make_elementary(IntMatrix::identity(3), IntMatrix::identity(3))) == IntMatrix::identity(3));
}

TEST_CASE("witness search") {
    const auto found = search_elementary({{2}}, {{1, 1}, {1, 1}}, {.entry_bound = 1});
    REQUIRE(found.size() == 1);
    CHECK(found[0].C == IntMatrix{{1, 1}});
    CHECK(found[0].D == IntMatrix{{1}, {1}});
    CHECK(search_elementary({{2}}, {{3}}, {.entry_bound = 1}).empty());
    CHECK(search_elementary({{2}}, {{3}}, {.entry_bound = 3}).empty());
    const auto one = search_elementary({{1}}, {{1}}, {.entry_bound = 1});
    REQUIRE(one.size() == 1);
    CHECK(one[0].C == IntMatrix{{1}});
    CHECK_THROWS_AS(search_elementary({{1, 1}, {1, 0}}, {{1, 1, 0}, {0, 0, 1}, {1, 1, 0}},
                                      {.entry_bound = 9, .max_candidates = 1e3}),
                    Error);
}

TEST_CASE("search finds every witness and only witnesses") {
    const TransitionMatrix b{{1, 1, 0}, {0, 0, 1}, {1, 1, 0}};
    const auto found = search_elementary(kGolden, b, {.entry_bound = 1});
    std::set<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> seen;
    for (const auto& ee : found) {
        REQUIRE(naive_product(ee.C, ee.D) == kGolden.matrix());
        REQUIRE(naive_product(ee.D, ee.C) == b.matrix());
        seen.insert({ee.C.data(), ee.D.data()});
    }
    CHECK(seen.size() == found.size());
    CHECK(seen.count({golden_split().C.data(), golden_split().D.data()}) == 1);
    // Brute force over all 0/1 pairs: 2^12 candidates.
    std::size_t brute = 0;
    for (unsigned mask = 0; mask < (1u << 12); ++mask) {
        IntMatrix c(2, 3, 0);
        IntMatrix d(3, 2, 0);
        for (unsigned bit = 0; bit < 6; ++bit) {
            c(bit / 3, bit % 3) = (mask >> bit) & 1u;
            d(bit / 2, bit % 2) = (mask >> (bit + 6)) & 1u;
        }
        brute += naive_product(c, d) == kGolden.matrix() && naive_product(d, c) == b.matrix();
    }
    CHECK(brute == found.size());
}

TEST_CASE("index-map family") {
    const CuntzFamily two(2);
    CHECK(two.apply(1, 1) == 1);
    CHECK(two.apply(1, 3) == 5);
    CHECK(two.apply(2, 3) == 6);
    const CuntzFamily one(1);
    for (std::int64_t j = 1; j < 20; ++j) {
        CHECK(one.apply(1, j) == j);
    }
    const CuntzFamily three(3);
    CHECK(three.verify_partition(9));
    std::vector<std::set<std::int64_t>> images(3);
    for (std::int64_t i = 1; i <= 3; ++i) {
        for (std::int64_t j = 1; j <= 3; ++j) {
            images[static_cast<std::size_t>(i - 1)].insert(three.apply(i, j));
        }
    }
    CHECK(images[0] == std::set<std::int64_t>{1, 4, 7});
    CHECK(images[1] == std::set<std::int64_t>{2, 5, 8});
    CHECK(images[2] == std::set<std::int64_t>{3, 6, 9});
    CHECK_THROWS_AS(three.apply(4, 1), Error);
    CHECK_THROWS_AS(CuntzFamily(0), Error);
}

TEST_CASE("random split witnesses: pairing and D-hat against path oracle") {
    testing::Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = testing::random_essential(rng, 4, 2);
        const auto g = from_matrix(a);
        const auto ee = (trial % 2 == 0) ? elementary_from_split(out_split(g, testing::random_out_partition(rng, g)))
                                         : elementary_from_split(in_split(g, testing::random_in_partition(rng, g)));
        REQUIRE(verify_elementary(ee));
        const auto p = edge_pairing(ee);
        REQUIRE(p.a_paths == paths(ee.C, ee.D));
        REQUIRE(p.b_paths == paths(ee.D, ee.C));
        const auto d = dhat(ee);
        REQUIRE(d == dhat_oracle(ee));
        const auto cd = edge_list(ee.C);
        for (std::size_t i = 0; i < d.rows(); ++i) {
            // Row sums equal the C-layer out-degree at the end of d(a_i).
            const auto mid = edge_list(ee.D)[p.a_paths[i].second].target;
            std::int64_t row = 0;
            std::int64_t degree = 0;
            for (std::size_t l = 0; l < d.cols(); ++l) {
                row += d(i, l);
            }
            for (const auto& e : cd) {
                degree += e.source == mid;
            }
            REQUIRE(row == degree);
        }
    }
}
