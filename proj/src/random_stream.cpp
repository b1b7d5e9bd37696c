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

#include "rmimo/random_stream.hpp"

#include <cmath>
#include <numbers>

namespace rmimo
{
    namespace
    {
        constexpr std::uint32_t philox_m0 = 0xD2511F53u;
        constexpr std::uint32_t philox_m1 = 0xCD9E8D57u;
        constexpr std::uint32_t philox_w0 = 0x9E3779B9u;
        constexpr std::uint32_t philox_w1 = 0xBB67AE85u;

        inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t &hi, std::uint32_t &lo) noexcept
        {
            const std::uint64_t p = std::uint64_t(a) * std::uint64_t(b);
            hi = std::uint32_t(p >> 32);
            lo = std::uint32_t(p);
        }
    }

    Philox4x32::counter_type Philox4x32::block(counter_type ctr, key_type key) noexcept
    {
        for (int round = 0; round < 10; ++round)
        {
            std::uint32_t hi0, lo0, hi1, lo1;
            mulhilo(philox_m0, ctr[0], hi0, lo0);
            mulhilo(philox_m1, ctr[2], hi1, lo1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += philox_w0;
            key[1] += philox_w1;
        }
        return ctr;
    }

    StreamEngine::StreamEngine(RandomStream stream) noexcept
        : key_{std::uint32_t(stream.master_seed), std::uint32_t(stream.master_seed >> 32)},
          stream_index_(stream.stream_index)
    {
    }

    void StreamEngine::refill() noexcept
    {
        const Philox4x32::counter_type ctr = {std::uint32_t(block_index_), std::uint32_t(block_index_ >> 32),
                                              std::uint32_t(stream_index_), std::uint32_t(stream_index_ >> 32)};
        buffer_ = Philox4x32::block(ctr, key_);
        ++block_index_;
        used_ = 0;
    }

    StreamEngine::result_type StreamEngine::operator()() noexcept
    {
        if (used_ >= 4)
            refill();
        const std::uint64_t lo = buffer_[used_];
        const std::uint64_t hi = buffer_[used_ + 1];
        used_ += 2;
        return lo | (hi << 32);
    }

    double StreamEngine::uniform() noexcept
    {
        return double((*this)() >> 11) * 0x1.0p-53;
    }

    double StreamEngine::uniform_open_low() noexcept
    {
        return 1.0 - uniform();
    }

    cplx StreamEngine::complex_normal() noexcept
    {
        // |z|^2 = -ln(u1) is Exp(1), so E|z|^2 = 1 and each quadrature has variance 1/2
        const double radius = std::sqrt(-std::log(uniform_open_low()));
        const double angle = 2.0 * std::numbers::pi * uniform();
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }
}
