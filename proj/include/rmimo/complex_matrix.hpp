// SPDX-License-Identifier: Apache-2.0
//
// rmimo: capacity toolkit for reconfigurable-antenna mmWave MIMO links
// Copyright (C) 2026 The rmimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RMIMO_COMPLEX_MATRIX_HPP
#define RMIMO_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>

#include <Eigen/Dense>

namespace rmimo
{
    using cplx = std::complex<double>;

    // Dense complex matrix with finite entries. Immutable once built; arithmetic is done on
    // the underlying Eigen matrix and the result wrapped again, which re-checks finiteness.
    class ComplexMatrix
    {
    public:
        using storage_type = Eigen::MatrixXcd;

        // Throws validation_error on an empty shape or non-finite entries
        explicit ComplexMatrix(storage_type values);

        // Row-major nested list, e.g. from_rows({{1, 1}, {1, -1}}); rows must be equal length
        static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
        static ComplexMatrix filled(std::size_t rows, std::size_t cols, cplx value);
        static ComplexMatrix ones(std::size_t rows, std::size_t cols) { return filled(rows, cols, cplx(1.0, 0.0)); }
        static ComplexMatrix identity(std::size_t n);

        std::size_t rows() const noexcept { return static_cast<std::size_t>(values_.rows()); }
        std::size_t cols() const noexcept { return static_cast<std::size_t>(values_.cols()); }
        std::size_t size() const noexcept { return rows() * cols(); }

        cplx operator()(std::size_t row, std::size_t col) const { return values_(Eigen::Index(row), Eigen::Index(col)); }
        const storage_type &eigen() const noexcept { return values_; }

        bool same_shape(const ComplexMatrix &other) const noexcept
        {
            return rows() == other.rows() && cols() == other.cols();
        }

        double frobenius_norm() const { return values_.norm(); }

        friend bool operator==(const ComplexMatrix &a, const ComplexMatrix &b)
        {
            return a.same_shape(b) && a.values_ == b.values_;
        }

    private:
        storage_type values_;
    };
}

#endif
