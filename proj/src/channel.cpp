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

#include "rmimo/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rmimo/errors.hpp"

namespace rmimo
{
    namespace
    {
        void require_positive(double value, const char *name)
        {
            if (!(value > 0.0) || !std::isfinite(value))
                throw validation_error(std::string(name) + " must be positive and finite");
        }

        void require_count(std::size_t value, const char *name)
        {
            if (value == 0)
                throw validation_error(std::string(name) + " must be at least 1");
        }
    }

    LosGeometry make_los_geometry(double wavelength, double link_distance, std::size_t tx_count,
                                  std::size_t rx_count, double tx_spacing, double rx_spacing)
    {
        require_positive(wavelength, "wavelength");
        require_positive(link_distance, "link distance");
        require_count(tx_count, "tx count");
        require_count(rx_count, "rx count");
        require_positive(tx_spacing, "tx spacing");
        require_positive(rx_spacing, "rx spacing");

        if (link_distance < 100.0 * wavelength)
            throw model_validity_error("link distance must be at least 100 wavelengths");

        LosGeometry g;
        g.wavelength_ = wavelength;
        g.link_distance_ = link_distance;
        g.tx_count_ = tx_count;
        g.rx_count_ = rx_count;
        g.tx_spacing_ = tx_spacing;
        g.rx_spacing_ = rx_spacing;
        const double max_count = double(std::max(tx_count, rx_count));
        g.eta_ = (wavelength * link_distance / max_count) / (tx_spacing * rx_spacing);
        return g;
    }

    std::pair<double, double> spacing_for_eta(double wavelength, double link_distance, std::size_t max_count, double eta)
    {
        require_positive(wavelength, "wavelength");
        require_positive(link_distance, "link distance");
        require_count(max_count, "max count");
        require_positive(eta, "eta");

        const double d = std::sqrt(wavelength * link_distance / (double(max_count) * eta));
        return {d, d};
    }

    LosGeometry geometry_for_eta(double wavelength, double link_distance, std::size_t tx_count,
                                 std::size_t rx_count, double eta)
    {
        require_count(tx_count, "tx count");
        require_count(rx_count, "rx count");
        const auto [d_t, d_r] = spacing_for_eta(wavelength, link_distance, std::max(tx_count, rx_count), eta);
        return make_los_geometry(wavelength, link_distance, tx_count, rx_count, d_t, d_r);
    }

    RicianSpec RicianSpec::finite(double k_factor)
    {
        if (!(k_factor >= 0.0) || !std::isfinite(k_factor))
            throw validation_error("Rician K must be finite and non-negative; use RicianSpec::infinite() for pure LoS");
        return RicianSpec(k_factor, false, std::sqrt(k_factor / (k_factor + 1.0)), std::sqrt(1.0 / (k_factor + 1.0)));
    }

    RicianSpec RicianSpec::infinite() noexcept
    {
        return RicianSpec(std::numeric_limits<double>::infinity(), true, 1.0, 0.0);
    }

    double RicianSpec::k_factor() const noexcept
    {
        return infinite_ ? std::numeric_limits<double>::infinity() : k_;
    }

    ComplexMatrix los_channel(const LosGeometry &geometry)
    {
        const Eigen::Index n_rx = Eigen::Index(geometry.rx_count());
        const Eigen::Index n_tx = Eigen::Index(geometry.tx_count());
        const double scale = std::numbers::pi / (geometry.wavelength() * geometry.link_distance());

        ComplexMatrix::storage_type h(n_rx, n_tx);
        for (Eigen::Index i = 0; i < n_rx; ++i)
            for (Eigen::Index j = 0; j < n_tx; ++j)
            {
                const double offset = double(i) * geometry.rx_spacing() - double(j) * geometry.tx_spacing();
                h(i, j) = std::polar(1.0, scale * offset * offset);
            }
        return ComplexMatrix(std::move(h));
    }

    ComplexMatrix nlos_sample(std::size_t tx_count, std::size_t rx_count, RandomStream stream)
    {
        require_count(tx_count, "tx count");
        require_count(rx_count, "rx count");

        StreamEngine engine(stream);
        ComplexMatrix::storage_type h(static_cast<Eigen::Index>(rx_count), static_cast<Eigen::Index>(tx_count));
        for (Eigen::Index i = 0; i < h.rows(); ++i)
            for (Eigen::Index j = 0; j < h.cols(); ++j)
                h(i, j) = engine.complex_normal();
        return ComplexMatrix(std::move(h));
    }

    ComplexMatrix rician_compose(const RicianSpec &spec, const ComplexMatrix &los, const ComplexMatrix &nlos)
    {
        if (!los.same_shape(nlos))
            throw dimension_error("rician_compose: LoS and NLoS components differ in shape");

        if (spec.is_infinite())
            return los;
        if (spec.k_factor() == 0.0)
            return nlos;
        return ComplexMatrix(spec.los_weight() * los.eigen() + spec.nlos_weight() * nlos.eigen());
    }

    ComplexMatrix draw_channel(const ChannelSpec &spec, RandomStream stream)
    {
        ComplexMatrix los = los_channel(spec.geometry);
        if (spec.rician.is_infinite())
            return los;
        return rician_compose(spec.rician, los,
                              nlos_sample(spec.geometry.tx_count(), spec.geometry.rx_count(), stream));
    }
}
