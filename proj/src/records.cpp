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

#include "rmimo/records.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>

#include "rmimo/errors.hpp"

namespace rmimo
{
    namespace
    {
        std::vector<std::string_view> split(std::string_view line)
        {
            std::vector<std::string_view> fields;
            std::size_t start = 0;
            while (true)
            {
                const std::size_t comma = line.find(',', start);
                fields.push_back(line.substr(start, comma - start));
                if (comma == std::string_view::npos)
                    return fields;
                start = comma + 1;
            }
        }

        template <typename T>
        T parse_field(std::string_view token, std::size_t line_no)
        {
            T value{};
            const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || end != token.data() + token.size() || token.empty())
                throw io_error("records line " + std::to_string(line_no) + ": malformed field '" + std::string(token) + "'");
            return value;
        }
    }

    std::string format_real(double value)
    {
        if (std::isinf(value))
            return value > 0 ? "inf" : "-inf";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.9g", value);
        return buf;
    }

    void write_records(std::ostream &out, const std::vector<SweepRecord> &records)
    {
        out << records_header << '\n';
        for (const SweepRecord &r : records)
        {
            out << r.mode << ',' << r.sweep_var << ',' << format_real(r.sweep_value) << ',' << r.system << ','
                << format_real(r.capacity_mean_bits) << ',' << format_real(r.capacity_stderr_bits) << ',' << r.trials
                << ',' << format_real(r.snr_db) << ',' << r.tx_count << ',' << r.rx_count << ','
                << format_real(r.eta) << ',' << format_real(r.k_factor) << ',' << r.master_seed << '\n';
        }
    }

    void write_records(const std::vector<SweepRecord> &records, const std::string &path)
    {
        const std::string staging = path + ".partial";
        {
            std::ofstream out(staging, std::ios::binary | std::ios::trunc);
            if (!out)
                throw io_error("cannot open '" + path + "' for writing");
            write_records(out, records);
            out.flush();
            if (!out)
                throw io_error("failed writing '" + path + "'");
        }
        std::error_code ec;
        std::filesystem::rename(staging, path, ec);
        if (ec)
        {
            std::filesystem::remove(staging, ec);
            throw io_error("cannot move results into '" + path + "'");
        }
    }

    std::vector<SweepRecord> read_records(std::istream &in)
    {
        std::string line;
        if (!std::getline(in, line) || line != records_header)
            throw io_error("records: missing or unexpected header");

        std::vector<SweepRecord> records;
        std::size_t line_no = 1;
        while (std::getline(in, line))
        {
            ++line_no;
            if (line.empty())
                continue;
            const auto f = split(line);
            if (f.size() != 13)
                throw io_error("records line " + std::to_string(line_no) + ": expected 13 fields");

            SweepRecord r;
            r.mode = std::string(f[0]);
            r.sweep_var = std::string(f[1]);
            r.sweep_value = parse_field<double>(f[2], line_no);
            r.system = std::string(f[3]);
            r.capacity_mean_bits = parse_field<double>(f[4], line_no);
            r.capacity_stderr_bits = parse_field<double>(f[5], line_no);
            r.trials = parse_field<std::size_t>(f[6], line_no);
            r.snr_db = parse_field<double>(f[7], line_no);
            r.tx_count = parse_field<std::size_t>(f[8], line_no);
            r.rx_count = parse_field<std::size_t>(f[9], line_no);
            r.eta = parse_field<double>(f[10], line_no);
            r.k_factor = parse_field<double>(f[11], line_no);
            r.master_seed = parse_field<std::uint64_t>(f[12], line_no);
            records.push_back(std::move(r));
        }
        return records;
    }

    std::vector<SweepRecord> read_records(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw io_error("cannot open '" + path + "' for reading");
        return read_records(in);
    }
}
