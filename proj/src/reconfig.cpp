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

#include "rmimo/reconfig.hpp"

#include <cmath>
#include <sstream>

#include "rmimo/errors.hpp"

namespace rmimo
{
    namespace
    {
        struct EntryCheck
        {
            double modulus;

            bool operator()(const UnitModulus &) const { return std::abs(modulus - 1.0) < UnitModulus::tolerance; }
            bool operator()(const BoundedAmplitude &b) const { return modulus <= b.max_amplitude; }
        };
    }

    StateReport validate_state(const ComplexMatrix &state, const ConstraintMode &mode)
    {
        if (const auto *bounded = std::get_if<BoundedAmplitude>(&mode))
            if (!(bounded->max_amplitude > 0.0) || !std::isfinite(bounded->max_amplitude))
                throw validation_error("bounded amplitude limit must be positive and finite");

        StateReport report;
        for (std::size_t i = 0; i < state.rows(); ++i)
            for (std::size_t j = 0; j < state.cols(); ++j)
                if (!std::visit(EntryCheck{std::abs(state(i, j))}, mode))
                    report.violations.push_back({i, j, state(i, j)});
        return report;
    }

    StateMatrix::StateMatrix(ComplexMatrix matrix, ConstraintMode mode)
        : matrix_(std::move(matrix)), mode_(mode)
    {
        const StateReport report = validate_state(matrix_, mode_);
        if (!report.valid())
        {
            const StateViolation &v = report.violations.front();
            std::ostringstream msg;
            msg << "state matrix violates its constraint at (" << v.row << ", " << v.col << "), value " << v.value
                << " (" << report.violations.size() << " violation(s) total)";
            throw validation_error(msg.str());
        }
    }

    ComplexMatrix apply_state(const ComplexMatrix &channel, const ComplexMatrix &state)
    {
        if (!channel.same_shape(state))
            throw dimension_error("apply_state: channel and state matrix differ in shape");
        return ComplexMatrix(channel.eigen().cwiseProduct(state.eigen()));
    }

    ComplexMatrix apply_state(const ComplexMatrix &channel, const StateMatrix &state)
    {
        return apply_state(channel, state.matrix());
    }

    StateMatrix canonical_state_2x2()
    {
        return StateMatrix(ComplexMatrix::from_rows({{1.0, 1.0}, {1.0, -1.0}}), UnitModulus{});
    }
}
