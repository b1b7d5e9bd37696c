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

#ifndef RMIMO_RECONFIG_HPP
#define RMIMO_RECONFIG_HPP

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "complex_matrix.hpp"

namespace rmimo
{
    // Phase-only states: every entry on the unit circle
    struct UnitModulus
    {
        static constexpr double tolerance = 1e-9;
    };

    // Amplitude-tapered states: |g| <= max_amplitude
    struct BoundedAmplitude
    {
        double max_amplitude = 1.0;
    };

    using ConstraintMode = std::variant<UnitModulus, BoundedAmplitude>;

    struct StateViolation
    {
        std::size_t row = 0;
        std::size_t col = 0;
        cplx value;
    };

    // Empty violation list means the state is admissible
    struct StateReport
    {
        std::vector<StateViolation> violations;

        bool valid() const noexcept { return violations.empty(); }
        explicit operator bool() const noexcept { return valid(); }
    };

    StateReport validate_state(const ComplexMatrix &state, const ConstraintMode &mode);

    // Reconfigurable antenna state matrix G (N x M). Construction validates against the mode.
    class StateMatrix
    {
    public:
        // Throws validation_error listing the first offending entry
        StateMatrix(ComplexMatrix matrix, ConstraintMode mode);

        const ComplexMatrix &matrix() const noexcept { return matrix_; }
        const ConstraintMode &mode() const noexcept { return mode_; }

    private:
        ComplexMatrix matrix_;
        ConstraintMode mode_;
    };

    // Hadamard product H o G; throws dimension_error on shape mismatch
    ComplexMatrix apply_state(const ComplexMatrix &channel, const ComplexMatrix &state);
    ComplexMatrix apply_state(const ComplexMatrix &channel, const StateMatrix &state);

    // [[1, 1], [1, e^{j*pi}]] with e^{j*pi} stored as exactly -1
    StateMatrix canonical_state_2x2();
}

#endif
