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

#ifndef RMIMO_RECORDS_HPP
#define RMIMO_RECORDS_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sweep.hpp"

namespace rmimo
{
    inline constexpr std::string_view records_header =
        "mode,sweep_var,sweep_value,system,capacity_mean_bits,capacity_stderr_bits,trials,snr_db,M,N,eta,k_factor,master_seed";

    // %.9g for reals, literal `inf` for infinities
    std::string format_real(double value);

    void write_records(std::ostream &out, const std::vector<SweepRecord> &records);

    // Whole-file write via a temporary sibling renamed into place; throws io_error naming the path
    void write_records(const std::vector<SweepRecord> &records, const std::string &path);

    // Inverse of write_records; throws io_error on a bad header or malformed row
    std::vector<SweepRecord> read_records(std::istream &in);
    std::vector<SweepRecord> read_records(const std::string &path);
}

#endif
