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

#ifndef RMIMO_CHANNEL_HPP
#define RMIMO_CHANNEL_HPP

#include <cstddef>
#include <utility>

#include "complex_matrix.hpp"
#include "random_stream.hpp"

namespace rmimo
{
    // Uniform linear arrays facing each other at broadside over a distance R.
    // All lengths in meters.
    class LosGeometry
    {
    public:
        double wavelength() const noexcept { return wavelength_; }
        double link_distance() const noexcept { return link_distance_; }
        std::size_t tx_count() const noexcept { return tx_count_; }
        std::size_t rx_count() const noexcept { return rx_count_; }
        double tx_spacing() const noexcept { return tx_spacing_; }
        double rx_spacing() const noexcept { return rx_spacing_; }

        double separation_product() const noexcept { return tx_spacing_ * rx_spacing_; }

        // Optimal separation product over the actual one; 1 means orthogonal LoS columns
        double eta() const noexcept { return eta_; }

        friend LosGeometry make_los_geometry(double wavelength, double link_distance, std::size_t tx_count,
                                             std::size_t rx_count, double tx_spacing, double rx_spacing);

    private:
        LosGeometry() = default;

        double wavelength_ = 0.0;
        double link_distance_ = 0.0;
        std::size_t tx_count_ = 0;
        std::size_t rx_count_ = 0;
        double tx_spacing_ = 0.0;
        double rx_spacing_ = 0.0;
        double eta_ = 0.0;
    };

    // Throws validation_error for non-positive arguments and model_validity_error when
    // R < 100 wavelengths (the paraxial phase model is no longer meaningful there).
    LosGeometry make_los_geometry(double wavelength, double link_distance, std::size_t tx_count,
                                  std::size_t rx_count, double tx_spacing, double rx_spacing);

    // Symmetric spacings d_t = d_r realising a given eta; returns (d_t, d_r)
    std::pair<double, double> spacing_for_eta(double wavelength, double link_distance, std::size_t max_count, double eta);

    // Convenience: geometry whose eta equals the argument, with symmetric spacings
    LosGeometry geometry_for_eta(double wavelength, double link_distance, std::size_t tx_count,
                                 std::size_t rx_count, double eta);

    // Rician K factor. Infinite K is a distinct state, not a large number.
    class RicianSpec
    {
    public:
        static RicianSpec finite(double k_factor); // throws validation_error for K < 0 or NaN
        static RicianSpec infinite() noexcept;

        bool is_infinite() const noexcept { return infinite_; }
        double k_factor() const noexcept; // +inf for the pure-LoS state

        double los_weight() const noexcept { return los_weight_; }
        double nlos_weight() const noexcept { return nlos_weight_; }

    private:
        RicianSpec(double k, bool inf, double w_los, double w_nlos) noexcept
            : k_(k), infinite_(inf), los_weight_(w_los), nlos_weight_(w_nlos) {}

        double k_ = 0.0;
        bool infinite_ = false;
        double los_weight_ = 0.0;
        double nlos_weight_ = 1.0;
    };

    // Geometry plus Rician mixing; what one Monte Carlo capacity point needs to draw H
    struct ChannelSpec
    {
        LosGeometry geometry;
        RicianSpec rician;
    };

    // N x M, h(i,j) = exp(j*pi*(i*d_r - j*d_t)^2 / (lambda*R)); common exp(-j*2*pi*R/lambda) dropped
    ComplexMatrix los_channel(const LosGeometry &geometry);

    // N x M i.i.d. CN(0, 1) entries, filled row-major from the stream
    ComplexMatrix nlos_sample(std::size_t tx_count, std::size_t rx_count, RandomStream stream);

    // sqrt(K/(K+1)) H_los + sqrt(1/(K+1)) H_nlos; throws dimension_error on shape mismatch
    ComplexMatrix rician_compose(const RicianSpec &spec, const ComplexMatrix &los, const ComplexMatrix &nlos);

    // One realisation of the full channel for the given stream
    ComplexMatrix draw_channel(const ChannelSpec &spec, RandomStream stream);
}

#endif
