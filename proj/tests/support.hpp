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

// Test-only oracles and generators. Nothing here calls into the library
// code under test except for plain data types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "ssw/graph.hpp"
#include "ssw/matrix.hpp"
#include "ssw/splitting.hpp"

namespace ssw::testing {

using Rng = std::mt19937_64;

inline IntMatrix
naive_product(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows(), b.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::int64_t s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                s += a(i, k) * b(k, j);
            }
            out(i, j) = s;
        }
    }
    return out;
}

inline IntMatrix
naive_product(const TransitionMatrix& a, const TransitionMatrix& b) {
    return naive_product(a.matrix(), b.matrix());
}

inline BigMatrix
naive_product(const BigMatrix& a, const BigMatrix& b) {
    BigMatrix out(a.rows(), b.cols(), BigInt(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            BigInt s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                s += a(i, k) * b(k, j);
            }
            out(i, j) = s;
        }
    }
    return out;
}

inline bool
has_zero_row_or_column(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        bool row = false;
        bool col = false;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row = row || m(i, j) != 0;
            col = col || m(j, i) != 0;
        }
        if (!row || !col) {
            return true;
        }
    }
    return false;
}

inline TransitionMatrix
random_essential(Rng& rng, std::size_t max_dim = 5, std::int64_t max_entry = 3) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<std::int64_t> entry(0, max_entry);
    for (;;) {
        const auto n = dim(rng);
        IntMatrix m(n, n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = entry(rng);
            }
        }
        if (!has_zero_row_or_column(m)) {
            return TransitionMatrix(m);
        }
    }
}

// Each edge of a vertex's list lands in a uniformly chosen block out of at
// most max_blocks; empty blocks are dropped.
inline std::vector<std::vector<std::vector<std::size_t>>>
random_blocks(Rng& rng, const DirectedMultigraph& g, bool out_edges, std::size_t max_blocks) {
    std::vector<std::vector<std::vector<std::size_t>>> all;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& edges = out_edges ? g.out_edges(v) : g.in_edges(v);
        const auto count = std::min(edges.size(), max_blocks);
        std::uniform_int_distribution<std::size_t> pick(0, count - 1);
        std::vector<std::vector<std::size_t>> blocks(count);
        for (auto e : edges) {
            blocks[pick(rng)].push_back(e);
        }
        std::erase_if(blocks, [](const auto& b) { return b.empty(); });
        all.push_back(std::move(blocks));
    }
    return all;
}

inline OutPartition
random_out_partition(Rng& rng, const DirectedMultigraph& g, std::size_t max_blocks = SIZE_MAX) {
    return OutPartition(g, random_blocks(rng, g, true, max_blocks));
}

inline InPartition
random_in_partition(Rng& rng, const DirectedMultigraph& g, std::size_t max_blocks = SIZE_MAX) {
    return InPartition(g, random_blocks(rng, g, false, max_blocks));
}

inline BigInt
cofactor_det(const BigMatrix& m) {
    const auto n = m.rows();
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return m(0, 0);
    }
    BigInt det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0) {
            continue;
        }
        BigMatrix minor(n - 1, n - 1, BigInt(0));
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t j = 0, k = 0; j < n; ++j) {
                if (j != c) {
                    minor(i - 1, k++) = m(i, j);
                }
            }
        }
        const BigInt term = m(0, c) * cofactor_det(minor);
        det += (c % 2 == 0) ? term : BigInt(-term);
    }
    return det;
}

inline std::vector<std::vector<std::size_t>>
subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask[i]) {
                s.push_back(i);
            }
        }
        out.push_back(std::move(s));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

// Invariant factors from determinantal divisors: d_k = g_k / g_{k-1} where
// g_k is the gcd of all k x k minors.
inline std::vector<BigInt>
minor_divisors(const BigMatrix& m) {
    std::vector<BigInt> out;
    BigInt previous = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        BigInt g = 0;
        for (const auto& rs : subsets(m.rows(), k)) {
            for (const auto& cs : subsets(m.cols(), k)) {
                BigMatrix sub(k, k, BigInt(0));
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j) {
                        sub(i, j) = m(rs[i], cs[j]);
                    }
                }
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cofactor_det(sub).get_mpz_t());
            }
        }
        if (g == 0) {
            break;
        }
        out.push_back(g / previous);
        previous = g;
    }
    return out;
}

// Plain elimination: take the first nonzero entry in column-major order as
// pivot, clear by Euclid on rows then columns, restart until diagonal, and
// finally repair divisibility with gcd/lcm on the diagonal.
inline std::vector<BigInt>
row_reduction_divisors(BigMatrix m) {
    const auto rows = m.rows();
    const auto cols = m.cols();
    std::vector<BigInt> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        std::size_t pr = rows;
        std::size_t pc = cols;
        for (std::size_t j = t; j < cols && pr == rows; ++j) {
            for (std::size_t i = t; i < rows; ++i) {
                if (m(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
            }
        }
        if (pr == rows) {
            break;
        }
        for (std::size_t j = 0; j < cols; ++j) {
            std::swap(m(t, j), m(pr, j));
        }
        for (std::size_t i = 0; i < rows; ++i) {
            std::swap(m(i, t), m(i, pc));
        }
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                while (m(i, t) != 0) {
                    const BigInt q = m(i, t) / m(t, t);
                    for (std::size_t j = t; j < cols; ++j) {
                        m(i, j) -= q * m(t, j);
                    }
                    if (m(i, t) != 0) {
                        for (std::size_t j = t; j < cols; ++j) {
                            std::swap(m(i, j), m(t, j));
                        }
                    }
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                while (m(t, j) != 0) {
                    const BigInt q = m(t, j) / m(t, t);
                    for (std::size_t i = t; i < rows; ++i) {
                        m(i, j) -= q * m(i, t);
                    }
                    if (m(t, j) != 0) {
                        for (std::size_t i = t; i < rows; ++i) {
                            std::swap(m(i, j), m(i, t));
                        }
                    }
                }
            }
            for (std::size_t i = t + 1; i < rows && !dirty; ++i) {
                dirty = m(i, t) != 0;
            }
        }
        diag.push_back(abs(m(t, t)));
        ++t;
    }
    for (std::size_t i = 0; i < diag.size(); ++i) {
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            BigInt g;
            BigInt l;
            mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
            mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
            diag[i] = g;
            diag[j] = l;
        }
    }
    return diag;
}

// Number of closed walks of length n by explicit enumeration of vertex
// sequences, weighted by edge multiplicities.
inline std::int64_t
closed_walks(const TransitionMatrix& a, std::size_t n) {
    const auto dim = a.dim();
    std::int64_t total = 0;
    std::vector<std::size_t> path(n, 0);
    for (;;) {
        std::int64_t weight = 1;
        for (std::size_t i = 0; i < n && weight != 0; ++i) {
            weight *= a(path[i], path[(i + 1) % n]);
        }
        total += weight;
        std::size_t pos = 0;
        while (pos < n && ++path[pos] == dim) {
            path[pos++] = 0;
        }
        if (pos == n) {
            return total;
        }
    }
}

inline BigMatrix
random_integer_matrix(Rng& rng, std::size_t max_dim = 6, std::int64_t bound = 9) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<std::int64_t> entry(-bound, bound);
    const auto r = dim(rng);
    const auto c = dim(rng);
    BigMatrix m(r, c, BigInt(0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            m(i, j) = entry(rng);
        }
    }
    return m;
}

inline bool
is_diagonal_chain(const BigMatrix& d, const std::vector<BigInt>& divisors) {
    for (std::size_t i = 0; i < d.rows(); ++i) {
        for (std::size_t j = 0; j < d.cols(); ++j) {
            const BigInt expected = (i == j && i < divisors.size()) ? divisors[i] : BigInt(0);
            if (d(i, j) != expected) {
                return false;
            }
        }
    }
    for (std::size_t i = 0; i + 1 < divisors.size(); ++i) {
        if (divisors[i] <= 0 || divisors[i + 1] % divisors[i] != 0) {
            return false;
        }
    }
    return divisors.empty() || divisors.back() > 0;
}

}  // namespace ssw::testing
