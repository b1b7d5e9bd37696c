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

#ifndef RMIMO_OPTIMIZER_HPP
#define RMIMO_OPTIMIZER_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "capacity.hpp"
#include "complex_matrix.hpp"
#include "reconfig.hpp"

namespace rmimo
{
    // Uniform phase alphabet {exp(j*2*pi*k/L)}, k = 0..L-1
    class PhaseAlphabet
    {
    public:
        explicit PhaseAlphabet(unsigned levels); // throws validation_error for L < 2

        unsigned levels() const noexcept { return static_cast<unsigned>(symbols_.size()); }
        double phase(unsigned k) const;
        cplx symbol(unsigned k) const { return symbols_.at(k); }

    private:
        std::vector<cplx> symbols_;
    };

    struct SearchResult
    {
        StateMatrix best_state;
        double best_capacity = 0.0;
        std::uint64_t candidates_evaluated = 0;
        std::uint64_t best_index = 0; // position in enumeration order
    };

    // Limits of the exhaustive search
    inline constexpr std::size_t max_search_entries = 16;
    inline constexpr std::uint64_t max_search_candidates = std::uint64_t(1) << 24;

    // Number of candidates with g(0,0) pinned to 1: L^(N*M - 1). Throws search_space_error beyond limits.
    std::uint64_t search_space_size(std::size_t rows, std::size_t cols, unsigned levels);

    // Builds candidate `index` of the enumeration: entries after (0,0) in row-major order take
    // the base-L digits of index, most significant first; g(0,0) = 1
    ComplexMatrix candidate_state(std::size_t rows, std::size_t cols, const PhaseAlphabet &alphabet, std::uint64_t index);

    // Maximises capacity(H o G) over all unit-modulus G drawn from the alphabet with g(0,0) = 1.
    // Ties go to the smallest candidate index, so the result does not depend on exec.workers.
    SearchResult exhaustive_state_search(const ComplexMatrix &channel, const PhaseAlphabet &alphabet,
                                         const CapacityParams &params, Execution exec = {});

    // lambda * R / N_max: the separation product d_t * d_r that makes LoS columns orthogonal
    double optimal_separation_product(double wavelength, double link_distance, std::size_t max_count);
}

#endif
