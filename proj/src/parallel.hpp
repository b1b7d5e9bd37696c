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

#ifndef RMIMO_PARALLEL_HPP
#define RMIMO_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rmimo::detail
{
    inline unsigned resolve_workers(unsigned requested) noexcept
    {
        if (requested == 0)
            requested = std::max(1u, std::thread::hardware_concurrency());
        return requested;
    }

    // Calls body(begin, end, worker) on contiguous chunks of [0, n). The first exception thrown
    // by any worker is rethrown after all threads have joined.
    template <typename Body>
    void parallel_chunks(std::size_t n, unsigned workers, Body &&body)
    {
        workers = resolve_workers(workers);
        if (workers <= 1 || n < 2)
        {
            body(std::size_t(0), n, 0u);
            return;
        }
        workers = unsigned(std::min<std::size_t>(workers, n));

        std::exception_ptr failure;
        std::mutex failure_lock;
        std::vector<std::thread> pool;
        pool.reserve(workers);

        const std::size_t chunk = (n + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w)
        {
            const std::size_t begin = std::min(n, std::size_t(w) * chunk);
            const std::size_t end = std::min(n, begin + chunk);
            pool.emplace_back([&, begin, end, w] {
                try
                {
                    body(begin, end, w);
                }
                catch (...)
                {
                    std::lock_guard<std::mutex> guard(failure_lock);
                    if (!failure)
                        failure = std::current_exception();
                }
            });
        }
        for (auto &t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }
}

#endif
