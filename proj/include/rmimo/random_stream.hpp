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

#ifndef RMIMO_RANDOM_STREAM_HPP
#define RMIMO_RANDOM_STREAM_HPP

#include <array>
#include <cstdint>
#include <limits>

#include "complex_matrix.hpp"

namespace rmimo
{
    // Philox4x32-10 counter-based generator (Salmon et al., SC'11). A block is a pure function of
    // (key, counter), so any sample of any stream can be produced without touching the others.
    class Philox4x32
    {
    public:
        using counter_type = std::array<std::uint32_t, 4>;
        using key_type = std::array<std::uint32_t, 2>;

        static counter_type block(counter_type counter, key_type key) noexcept;
    };

    // Identifies one reproducible sample sequence. The master seed is the Philox key, the stream
    // index fills the upper half of the 128-bit counter and the lower half counts blocks.
    struct RandomStream
    {
        std::uint64_t master_seed = 0;
        std::uint64_t stream_index = 0;

        friend bool operator==(const RandomStream &, const RandomStream &) = default;
    };

    // Sweep points and trials share one index space: trial t of point p reads stream (p << 32) | t
    constexpr std::uint64_t trial_stream_index(std::uint32_t point, std::uint32_t trial) noexcept
    {
        return (std::uint64_t(point) << 32) | std::uint64_t(trial);
    }

    // Sequential reader over a RandomStream. Satisfies UniformRandomBitGenerator so it can also
    // drive <random> distributions, though the samplers below avoid them for portability.
    class StreamEngine
    {
    public:
        using result_type = std::uint64_t;

        explicit StreamEngine(RandomStream stream) noexcept;

        static constexpr result_type min() noexcept { return 0; }
        static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

        result_type operator()() noexcept;

        double uniform() noexcept;          // [0, 1), 53-bit resolution
        double uniform_open_low() noexcept; // (0, 1]

        // Circularly-symmetric complex Gaussian, zero mean, E|z|^2 = 1 (Box-Muller)
        cplx complex_normal() noexcept;

    private:
        void refill() noexcept;

        Philox4x32::key_type key_{};
        std::uint64_t stream_index_ = 0;
        std::uint64_t block_index_ = 0;
        Philox4x32::counter_type buffer_{};
        unsigned used_ = 4; // 32-bit words consumed from buffer_
    };
}

#endif
