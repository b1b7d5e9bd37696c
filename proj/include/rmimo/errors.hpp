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

#ifndef RMIMO_ERRORS_HPP
#define RMIMO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rmimo
{
    // Argument outside its admissible domain (non-positive length, bad index, ...)
    class validation_error : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Arguments are individually valid but leave the regime where the model holds
    class model_validity_error : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    class dimension_error : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Desired beam direction not reachable by any feed
    class coverage_error : public std::out_of_range
    {
    public:
        using std::out_of_range::out_of_range;
    };

    // Two desired directions resolve to the same feed
    class conflict_error : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Exhaustive search would exceed the candidate budget
    class search_space_error : public std::length_error
    {
    public:
        using std::length_error::length_error;
    };

    // Malformed or inconsistent experiment configuration. Carries the offending key when known.
    class config_error : public std::runtime_error
    {
    public:
        config_error(const std::string &field, const std::string &message)
            : std::runtime_error(field.empty() ? message : field + ": " + message), field_(field) {}

        const std::string &field() const noexcept { return field_; }

    private:
        std::string field_;
    };

    class io_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif
