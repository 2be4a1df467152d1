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
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "ssw/checked.hpp"
#include "ssw/error.hpp"

namespace ssw {

/// Dense row-major integer matrix. Shapes may be 0 in either direction.
template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) {
                throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
            }
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix
    identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    std::size_t
    rows() const noexcept {
        return rows_;
    }
    std::size_t
    cols() const noexcept {
        return cols_;
    }
    bool
    is_square() const noexcept {
        return rows_ == cols_;
    }

    T&
    operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    const T&
    operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    std::span<T>
    row(std::size_t i) {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<const T>
    row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }

    const std::vector<T>&
    data() const noexcept {
        return data_;
    }

    Matrix
    transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    friend bool
    operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using BigMatrix = Matrix<BigInt>;

template <class T>
Matrix<T>
multiply(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j) != 0) {
                    if constexpr (std::is_same_v<T, BigInt>) {
                        c(i, j) += aik * b(k, j);
                    } else {
                        c(i, j) = add(c(i, j), mul(aik, b(k, j)));
                    }
                }
            }
        }
    }
    return c;
}

template <class T>
Matrix<T>
subtract(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "subtracting matrices of different shapes");
    }
    Matrix<T> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(i, j) = sub(a(i, j), b(i, j));
        }
    }
    return c;
}

template <class T>
T
trace(const Matrix<T>& a) {
    T t(0);
    for (std::size_t i = 0; i < a.rows() && i < a.cols(); ++i) {
        t = add(t, a(i, i));
    }
    return t;
}

/// I - M^t, the relation matrix of the Bowen-Franks cokernel.
template <class T>
Matrix<T>
identity_minus_transpose(const Matrix<T>& m) {
    return subtract(Matrix<T>::identity(m.rows()), m.transposed());
}

BigMatrix
to_big(const IntMatrix& m);
IntMatrix
to_int64(const BigMatrix& m);

/// Single-line rendering "[[a,b],[c,d]]" used in diagnostics.
template <class T>
std::string
render(const Matrix<T>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) {
                s += ",";
            }
            s += to_decimal(m(i, j));
        }
        s += "]";
    }
    return s + "]";
}

template <class T>
std::ostream&
operator<<(std::ostream& os, const Matrix<T>& m) {
    return os << render(m);
}

}  // namespace ssw
