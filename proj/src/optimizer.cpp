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

#include "rmimo/optimizer.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "parallel.hpp"
#include "rmimo/errors.hpp"

namespace rmimo
{
    PhaseAlphabet::PhaseAlphabet(unsigned levels)
    {
        if (levels < 2)
            throw validation_error("phase alphabet needs at least 2 levels");
        symbols_.reserve(levels);
        for (unsigned k = 0; k < levels; ++k)
        {
            // quarter turns are stored exactly so that L = 2 gives {1, -1}
            if ((4 * k) % levels == 0)
            {
                constexpr cplx quarter[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
                symbols_.push_back(quarter[(4 * k) / levels]);
            }
            else
                symbols_.push_back(std::polar(1.0, 2.0 * std::numbers::pi * double(k) / double(levels)));
        }
    }

    double PhaseAlphabet::phase(unsigned k) const
    {
        if (k >= levels())
            throw validation_error("phase index out of range");
        return 2.0 * std::numbers::pi * double(k) / double(levels());
    }

    std::uint64_t search_space_size(std::size_t rows, std::size_t cols, unsigned levels)
    {
        if (rows == 0 || cols == 0)
            throw validation_error("search_space_size: empty shape");
        if (levels < 2)
            throw validation_error("search_space_size: alphabet needs at least 2 levels");

        const std::size_t entries = rows * cols;
        if (entries > max_search_entries)
            throw search_space_error("exhaustive search supports at most " + std::to_string(max_search_entries) +
                                     " state entries, got " + std::to_string(entries));

        std::uint64_t count = 1;
        for (std::size_t k = 1; k < entries; ++k)
        {
            count *= levels;
            if (count > max_search_candidates)
                throw search_space_error("exhaustive search over L = " + std::to_string(levels) + " phases for a " +
                                         std::to_string(rows) + "x" + std::to_string(cols) +
                                         " state exceeds 2^24 candidates; use a smaller phase alphabet");
        }
        return count;
    }

    ComplexMatrix candidate_state(std::size_t rows, std::size_t cols, const PhaseAlphabet &alphabet, std::uint64_t index)
    {
        const std::size_t entries = rows * cols;
        const unsigned levels = alphabet.levels();

        Eigen::MatrixXcd g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
        // least significant digit belongs to the last entry in row-major order
        for (std::size_t k = entries; k-- > 1;)
        {
            g(Eigen::Index(k / cols), Eigen::Index(k % cols)) = alphabet.symbol(unsigned(index % levels));
            index /= levels;
        }
        g(0, 0) = cplx(1.0, 0.0);
        return ComplexMatrix(std::move(g));
    }

    SearchResult exhaustive_state_search(const ComplexMatrix &channel, const PhaseAlphabet &alphabet,
                                         const CapacityParams &params, Execution exec)
    {
        const std::size_t rows = channel.rows();
        const std::size_t cols = channel.cols();
        const std::uint64_t candidates = search_space_size(rows, cols, alphabet.levels());

        struct Best
        {
            double capacity = -std::numeric_limits<double>::infinity();
            std::uint64_t index = 0;
        };

        const unsigned workers = detail::resolve_workers(exec.workers);
        std::vector<Best> per_worker(workers);
        detail::parallel_chunks(std::size_t(candidates), workers, [&](std::size_t begin, std::size_t end, unsigned w) {
            Best local;
            for (std::size_t c = begin; c < end; ++c)
            {
                const ComplexMatrix g = candidate_state(rows, cols, alphabet, c);
                const double value = capacity(apply_state(channel, g), params);
                if (value > local.capacity)
                    local = {value, c};
            }
            per_worker[w] = local;
        });

        Best best;
        for (const Best &b : per_worker)
            if (b.capacity > best.capacity || (b.capacity == best.capacity && b.index < best.index))
                best = b;

        return SearchResult{StateMatrix(candidate_state(rows, cols, alphabet, best.index), UnitModulus{}), best.capacity,
                            candidates, best.index};
    }

    double optimal_separation_product(double wavelength, double link_distance, std::size_t max_count)
    {
        if (!(wavelength > 0.0) || !(link_distance > 0.0) || max_count == 0)
            throw validation_error("optimal_separation_product: arguments must be positive");
        return wavelength * link_distance / double(max_count);
    }
}
