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


#include "ssw/elementary.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace ssw {

ElementaryEquivalence
make_elementary(IntMatrix c, IntMatrix d) {
    require_nonnegative(c, "C");
    require_nonnegative(d, "D");
    auto a = TransitionMatrix(multiply(c, d));
    auto b = TransitionMatrix(multiply(d, c));
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

ElementaryEquivalence
elementary_from_split(const SplitResult& split) {
    return {split.original, split.split_matrix, split.C, split.D};
}

ElementaryEquivalence
reversed(const ElementaryEquivalence& ee) {
    return {ee.B, ee.A, ee.D, ee.C};
}

namespace {

std::string
position(const char* name, std::size_t i, std::size_t j) {
    return std::string(name) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::optional<std::string>
first_mismatch(const IntMatrix& product, const TransitionMatrix& expected, const char* product_name,
               const char* expected_name) {
    for (std::size_t i = 0; i < product.rows(); ++i) {
        for (std::size_t j = 0; j < product.cols(); ++j) {
            if (product(i, j) != expected(i, j)) {
                return position(product_name, i, j) + "=" + std::to_string(product(i, j)) + " but " +
                       position(expected_name, i, j) + "=" + std::to_string(expected(i, j));
            }
        }
    }
    return std::nullopt;
}

void
standing_hypothesis_warnings(const TransitionMatrix& m, const char* name, std::vector<std::string>& out) {
    if (!is_irreducible(m)) {
        out.push_back(std::string(name) + " is reducible");
    }
    if (is_permutation(m)) {
        out.push_back(std::string(name) + " is a permutation matrix");
    }
}

}  // namespace

Verdict
verify_elementary(const TransitionMatrix& a, const TransitionMatrix& b, const IntMatrix& c, const IntMatrix& d) {
    const auto n = a.dim();
    const auto m = b.dim();
    if (c.rows() != n || c.cols() != m || d.rows() != m || d.cols() != n) {
        throw Error(ErrorKind::DimensionMismatch, "expected C " + std::to_string(n) + "x" + std::to_string(m) +
                                                      " and D " + std::to_string(m) + "x" + std::to_string(n));
    }
    require_nonnegative(c, "C");
    require_nonnegative(d, "D");
    Verdict v;
    if (auto bad = first_mismatch(multiply(c, d), a, "CD", "A")) {
        v = Verdict::refuted(*bad);
    } else if (auto bad2 = first_mismatch(multiply(d, c), b, "DC", "B")) {
        v = Verdict::refuted(*bad2);
    }
    standing_hypothesis_warnings(a, "A", v.warnings);
    standing_hypothesis_warnings(b, "B", v.warnings);
    return v;
}

Verdict
verify_chain(const SSEChain& chain) {
    if (chain.steps.empty()) {
        throw Error(ErrorKind::EmptyChain, "chain has no steps");
    }
    Verdict out;
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const auto& step = chain.steps[i];
        const auto tag = "step " + std::to_string(i + 1);
        if (i > 0 && !(chain.steps[i - 1].B == step.A)) {
            return Verdict::refuted(tag + ": source " + render(step.A.matrix()) + " differs from previous target " +
                                    render(chain.steps[i - 1].B.matrix()));
        }
        Verdict v;
        try {
            v = verify_elementary(step);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DimensionMismatch) {
                throw;
            }
            return Verdict::refuted(tag + ": " + e.what());
        }
        if (!v) {
            return Verdict::refuted(tag + ": " + v.locus);
        }
        for (auto& w : v.warnings) {
            out.warnings.push_back(tag + ": " + w);
        }
    }
    return out;
}

IntMatrix
chain_forward_matrix(const SSEChain& chain) {
    if (chain.steps.empty()) {
        throw Error(ErrorKind::EmptyChain, "chain has no steps");
    }
    IntMatrix product = chain.steps.front().C;
    for (std::size_t i = 1; i < chain.steps.size(); ++i) {
        product = multiply(product, chain.steps[i].C);
    }
    return product;
}

IntMatrix
chain_backward_matrix(const SSEChain& chain) {
    if (chain.steps.empty()) {
        throw Error(ErrorKind::EmptyChain, "chain has no steps");
    }
    IntMatrix product = chain.steps.back().D;
    for (std::size_t i = chain.steps.size() - 1; i-- > 0;) {
        product = multiply(product, chain.steps[i].D);
    }
    return product;
}

std::vector<Edge>
enumerate_edges(const IntMatrix& m) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            for (std::int64_t k = 1; k <= m(i, j); ++k) {
                edges.push_back({i, j, k});
            }
        }
    }
    return edges;
}

std::size_t
EdgePairing::a_edge(std::size_t c, std::size_t d) const {
    auto it = a_index_.find({c, d});
    if (it == a_index_.end()) {
        throw Error(ErrorKind::UnpairedPath, "C-edge " + std::to_string(c + 1) + " then D-edge " +
                                                 std::to_string(d + 1) + " is not an A-edge");
    }
    return it->second;
}

std::size_t
EdgePairing::b_edge(std::size_t d, std::size_t c) const {
    auto it = b_index_.find({d, c});
    if (it == b_index_.end()) {
        throw Error(ErrorKind::UnpairedPath, "D-edge " + std::to_string(d + 1) + " then C-edge " +
                                                 std::to_string(c + 1) + " is not a B-edge");
    }
    return it->second;
}

namespace {

// Ids of the edges of `edges` leaving `v`, which are contiguous in canonical order.
std::vector<std::vector<std::size_t>>
out_lists(const std::vector<Edge>& edges, std::size_t vertex_count) {
    std::vector<std::vector<std::size_t>> out(vertex_count);
    for (std::size_t id = 0; id < edges.size(); ++id) {
        out[edges[id].source].push_back(id);
    }
    return out;
}

// Pairs every edge of first*second (as a multigraph over `outer` vertices)
// with its canonical two-step path.
std::vector<std::pair<std::size_t, std::size_t>>
pair_paths(const IntMatrix& product, const std::vector<Edge>& first, const std::vector<Edge>& second,
           std::size_t middle_count, std::map<std::pair<std::size_t, std::size_t>, std::size_t>& index) {
    const auto first_out = out_lists(first, product.rows());
    const auto second_out = out_lists(second, middle_count);
    std::vector<std::pair<std::size_t, std::size_t>> paths;
    for (std::size_t i = 0; i < product.rows(); ++i) {
        for (std::size_t j = 0; j < product.cols(); ++j) {
            std::int64_t copies = 0;
            // first_out[i] is ascending by (middle, copy); second_out likewise by (target, copy)
            for (std::size_t x : first_out[i]) {
                for (std::size_t y : second_out[first[x].target]) {
                    if (second[y].target == j) {
                        index[{x, y}] = paths.size();
                        paths.emplace_back(x, y);
                        ++copies;
                    }
                }
            }
            if (copies != product(i, j)) {
                throw Error(ErrorKind::UnpairedPath, "path count differs from product entry");
            }
        }
    }
    return paths;
}

}  // namespace

EdgePairing
edge_pairing(const ElementaryEquivalence& ee) {
    if (!verify_elementary(ee)) {
        throw Error(ErrorKind::UnpairedPath, "edge pairing needs a verified elementary equivalence");
    }
    EdgePairing p;
    p.c_edges = enumerate_edges(ee.C);
    p.d_edges = enumerate_edges(ee.D);
    // edges of A are enumerated (i, j, copy); pair_paths walks the same order
    p.a_paths = pair_paths(ee.A.matrix(), p.c_edges, p.d_edges, ee.B.dim(), p.a_index_);
    p.b_paths = pair_paths(ee.B.matrix(), p.d_edges, p.c_edges, ee.A.dim(), p.b_index_);
    return p;
}

IntMatrix
dhat(const ElementaryEquivalence& ee) {
    const auto p = edge_pairing(ee);
    IntMatrix h(p.a_paths.size(), p.b_paths.size());
    for (std::size_t i = 0; i < p.a_paths.size(); ++i) {
        for (std::size_t l = 0; l < p.b_paths.size(); ++l) {
            h(i, l) = p.a_paths[i].second == p.b_paths[l].first ? 1 : 0;
        }
    }
    return h;
}

namespace {

// Advances `v` as a base-(bound+1) odometer, last position fastest.
bool
next_vector(std::vector<std::int64_t>& v, std::int64_t bound) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] < bound) {
            ++v[i];
            return true;
        }
        v[i] = 0;
    }
    return false;
}

}  // namespace

std::vector<ElementaryEquivalence>
search_elementary(const TransitionMatrix& a, const TransitionMatrix& b, const SearchOptions& options) {
    if (options.entry_bound < 0) {
        throw Error(ErrorKind::MalformedInput, "entry bound must be >= 0");
    }
    const auto n = a.dim();
    const auto m = b.dim();
    const double raw = std::pow(static_cast<double>(options.entry_bound + 1), static_cast<double>(2 * n * m));
    if (raw > options.max_candidates) {
        throw Error(ErrorKind::SearchSpaceTooLarge,
                    "candidate space " + std::to_string(raw) + " exceeds cap " + std::to_string(options.max_candidates));
    }
    std::vector<ElementaryEquivalence> found;
    if (trace(a.matrix()) != trace(b.matrix())) {
        return found;  // trace(CD) = trace(DC) for every pair
    }

    std::vector<std::int64_t> cvals(n * m, 0);
    do {
        IntMatrix c(n, m);
        for (std::size_t i = 0; i < n * m; ++i) {
            c(i / m, i % m) = cvals[i];
        }
        // D column by column: C x = A(:, j)
        std::vector<std::vector<std::vector<std::int64_t>>> columns(n);
        bool feasible = true;
        for (std::size_t j = 0; j < n && feasible; ++j) {
            std::vector<std::int64_t> x(m, 0);
            do {
                bool ok = true;
                for (std::size_t i = 0; i < n && ok; ++i) {
                    std::int64_t s = 0;
                    for (std::size_t k = 0; k < m; ++k) {
                        s = add(s, mul(c(i, k), x[k]));
                    }
                    ok = s == a(i, j);
                }
                if (ok) {
                    columns[j].push_back(x);
                }
            } while (next_vector(x, options.entry_bound));
            feasible = !columns[j].empty();
        }
        if (!feasible) {
            continue;
        }
        std::vector<IntMatrix> ds;
        std::vector<std::size_t> pick(n, 0);
        while (true) {
            IntMatrix d(m, n);
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < m; ++k) {
                    d(k, j) = columns[j][pick[j]][k];
                }
            }
            if (multiply(d, c) == b.matrix()) {
                ds.push_back(std::move(d));
            }
            std::size_t pos = n;
            while (pos-- > 0) {
                if (++pick[pos] < columns[pos].size()) {
                    break;
                }
                pick[pos] = 0;
            }
            if (pos == static_cast<std::size_t>(-1)) {
                break;
            }
        }
        std::sort(ds.begin(), ds.end(), [](const IntMatrix& x, const IntMatrix& y) { return x.data() < y.data(); });
        for (auto& d : ds) {
            found.push_back({a, b, c, std::move(d)});
        }
    } while (next_vector(cvals, options.entry_bound));
    return found;
}

CuntzFamily::CuntzFamily(std::int64_t k) : k_(k) {
    if (k < 1) {
        throw Error(ErrorKind::BranchOutOfRange, "branching degree must be >= 1");
    }
}

std::int64_t
CuntzFamily::apply(std::int64_t branch, std::int64_t j) const {
    if (branch < 1 || branch > k_) {
        throw Error(ErrorKind::BranchOutOfRange,
                    "branch " + std::to_string(branch) + " outside 1.." + std::to_string(k_));
    }
    if (j < 1) {
        throw Error(ErrorKind::BranchOutOfRange, "argument " + std::to_string(j) + " is not a positive integer");
    }
    return add(mul(k_, j - 1), branch);
}

Verdict
CuntzFamily::verify_partition(std::int64_t prefix_len) const {
    std::vector<int> hits(static_cast<std::size_t>(std::max<std::int64_t>(prefix_len, 0)) + 1, 0);
    for (std::int64_t i = 1; i <= k_; ++i) {
        for (std::int64_t j = 1;; ++j) {
            const auto image = apply(i, j);
            if (image > prefix_len) {
                break;
            }
            if (++hits[static_cast<std::size_t>(image)] > 1) {
                return Verdict::refuted("index " + std::to_string(image) + " hit by more than one branch");
            }
        }
    }
    for (std::int64_t n = 1; n <= prefix_len; ++n) {
        if (hits[static_cast<std::size_t>(n)] != 1) {
            return Verdict::refuted("index " + std::to_string(n) + " not covered");
        }
    }
    return Verdict::ok();
}

}  // namespace ssw
