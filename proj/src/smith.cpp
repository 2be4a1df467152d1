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


#include "ssw/smith.hpp"

#include <optional>
#include <utility>

namespace ssw {

namespace {

class Reducer {
public:
    explicit Reducer(const BigMatrix& m)
        : a_(m), u_(BigMatrix::identity(m.rows())), v_(BigMatrix::identity(m.cols())) {
    }

    SmithForm
    run() {
        const auto limit = std::min(a_.rows(), a_.cols());
        std::vector<BigInt> divisors;
        for (std::size_t t = 0; t < limit; ++t) {
            if (!settle_pivot(t)) {
                break;
            }
            divisors.push_back(a_(t, t));
        }
        return {std::move(u_), std::move(v_), std::move(divisors)};
    }

private:
    std::optional<std::pair<std::size_t, std::size_t>>
    smallest(std::size_t t) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        BigInt best_abs;
        for (std::size_t i = t; i < a_.rows(); ++i) {
            for (std::size_t j = t; j < a_.cols(); ++j) {
                if (sgn(a_(i, j)) == 0) {
                    continue;
                }
                BigInt x = abs(a_(i, j));
                if (!best || x < best_abs) {
                    best = {i, j};
                    best_abs = x;
                }
            }
        }
        return best;
    }

    void
    swap_rows(std::size_t i, std::size_t k) {
        if (i == k) {
            return;
        }
        for (std::size_t j = 0; j < a_.cols(); ++j) {
            std::swap(a_(i, j), a_(k, j));
        }
        for (std::size_t j = 0; j < u_.cols(); ++j) {
            std::swap(u_(i, j), u_(k, j));
        }
    }

    void
    swap_cols(std::size_t j, std::size_t k) {
        if (j == k) {
            return;
        }
        for (std::size_t i = 0; i < a_.rows(); ++i) {
            std::swap(a_(i, j), a_(i, k));
        }
        for (std::size_t i = 0; i < v_.rows(); ++i) {
            std::swap(v_(i, j), v_(i, k));
        }
    }

    // row_i += q * row_k
    void
    add_row(std::size_t i, std::size_t k, const BigInt& q) {
        for (std::size_t j = 0; j < a_.cols(); ++j) {
            a_(i, j) += q * a_(k, j);
        }
        for (std::size_t j = 0; j < u_.cols(); ++j) {
            u_(i, j) += q * u_(k, j);
        }
    }

    // col_j += q * col_k
    void
    add_col(std::size_t j, std::size_t k, const BigInt& q) {
        for (std::size_t i = 0; i < a_.rows(); ++i) {
            a_(i, j) += q * a_(i, k);
        }
        for (std::size_t i = 0; i < v_.rows(); ++i) {
            v_(i, j) += q * v_(i, k);
        }
    }

    void
    negate_row(std::size_t i) {
        for (std::size_t j = 0; j < a_.cols(); ++j) {
            a_(i, j) = -a_(i, j);
        }
        for (std::size_t j = 0; j < u_.cols(); ++j) {
            u_(i, j) = -u_(i, j);
        }
    }

    // Brings a pivot to (t,t) that clears row t, column t and divides the
    // rest of the active block. Returns false when the block is zero.
    bool
    settle_pivot(std::size_t t) {
        while (true) {
            const auto pos = smallest(t);
            if (!pos) {
                return false;
            }
            swap_rows(t, pos->first);
            swap_cols(t, pos->second);
            if (sgn(a_(t, t)) < 0) {
                negate_row(t);
            }
            const BigInt p = a_(t, t);
            bool clean = true;
            BigInt q;
            for (std::size_t i = t + 1; i < a_.rows(); ++i) {
                if (sgn(a_(i, t)) != 0) {
                    mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), p.get_mpz_t());
                    add_row(i, t, -q);
                    clean = clean && sgn(a_(i, t)) == 0;
                }
            }
            for (std::size_t j = t + 1; j < a_.cols(); ++j) {
                if (sgn(a_(t, j)) != 0) {
                    mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), p.get_mpz_t());
                    add_col(j, t, -q);
                    clean = clean && sgn(a_(t, j)) == 0;
                }
            }
            if (!clean) {
                continue;  // a smaller remainder now exists
            }
            bool divides = true;
            for (std::size_t i = t + 1; i < a_.rows() && divides; ++i) {
                for (std::size_t j = t + 1; j < a_.cols(); ++j) {
                    if (!mpz_divisible_p(a_(i, j).get_mpz_t(), p.get_mpz_t())) {
                        add_row(t, i, BigInt(1));
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                return true;
            }
        }
    }

    BigMatrix a_;
    BigMatrix u_;
    BigMatrix v_;
};

}  // namespace

SmithForm
smith_normal_form(const BigMatrix& m) {
    return Reducer(m).run();
}

BigInt
determinant(const BigMatrix& m) {
    if (!m.is_square()) {
        throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    }
    const auto n = m.rows();
    if (n == 0) {
        return BigInt(1);
    }
    BigMatrix a = m;
    BigInt sign(1);
    BigInt prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && sgn(a(swap, k)) == 0) {
                ++swap;
            }
            if (swap == n) {
                return BigInt(0);
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(swap, j));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace ssw
