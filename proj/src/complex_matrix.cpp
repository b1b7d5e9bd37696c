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

#include "rmimo/complex_matrix.hpp"

#include <cmath>
#include <string>

#include "rmimo/errors.hpp"

namespace rmimo
{
    ComplexMatrix::ComplexMatrix(storage_type values) : values_(std::move(values))
    {
        if (values_.rows() == 0 || values_.cols() == 0)
            throw validation_error("ComplexMatrix: rows and cols must be positive");

        for (Eigen::Index c = 0; c < values_.cols(); ++c)
            for (Eigen::Index r = 0; r < values_.rows(); ++r)
            {
                const cplx v = values_(r, c);
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                    throw validation_error("ComplexMatrix: non-finite entry at (" + std::to_string(r) + ", " +
                                           std::to_string(c) + ")");
            }
    }

    ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows)
    {
        const std::size_t n_rows = rows.size();
        const std::size_t n_cols = n_rows == 0 ? 0 : rows.begin()->size();
        storage_type values(static_cast<Eigen::Index>(n_rows), static_cast<Eigen::Index>(n_cols));

        Eigen::Index r = 0;
        for (const auto &row : rows)
        {
            if (row.size() != n_cols)
                throw validation_error("ComplexMatrix::from_rows: ragged rows");
            Eigen::Index c = 0;
            for (const cplx &v : row)
                values(r, c++) = v;
            ++r;
        }
        return ComplexMatrix(std::move(values));
    }

    ComplexMatrix ComplexMatrix::filled(std::size_t rows, std::size_t cols, cplx value)
    {
        return ComplexMatrix(storage_type::Constant(Eigen::Index(rows), Eigen::Index(cols), value));
    }

    ComplexMatrix ComplexMatrix::identity(std::size_t n)
    {
        return ComplexMatrix(storage_type::Identity(Eigen::Index(n), Eigen::Index(n)));
    }
}
