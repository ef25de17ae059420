// SPDX-License-Identifier: Apache-2.0
//
// steersim: link-level simulation of transmitter-side interference steering
// for multi-BSS MIMO WLANs
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

#ifndef STEERSIM_MIMO_HPP
#define STEERSIM_MIMO_HPP

#include <armadillo>
#include <cmath>
#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "steersim/errors.hpp"
#include "steersim/rng.hpp"

namespace steersim {

using cx = std::complex<double>;

/// Complex spatial channel between one transmitter (n_t antennas, columns)
/// and one receiver (n_r antennas, rows). Receivers never have more
/// antennas than transmitters; n_r = 1 is allowed for the single-antenna
/// zero-forcing baseline.
struct ChannelMatrix {
    arma::cx_mat entries;

    explicit ChannelMatrix(arma::cx_mat e) : entries(std::move(e)) {
        if (entries.n_rows < 1 || entries.n_cols < entries.n_rows) {
            throw dimension_error("channel must satisfy n_t >= n_r >= 1, got " +
                                  std::to_string(entries.n_rows) + "x" +
                                  std::to_string(entries.n_cols));
        }
        if (!entries.is_finite()) {
            throw dimension_error("channel has non-finite entries");
        }
    }

    arma::uword n_r() const { return entries.n_rows; }
    arma::uword n_t() const { return entries.n_cols; }
};

/// Principal transmit/receive pair of a channel: unit-norm precoder (right
/// singular vector), unit-norm receive filter (left singular vector) and
/// the corresponding largest singular value.
struct BeamformPair {
    arma::cx_vec precoder;
    arma::cx_vec filter;
    double principal_gain = 0.0;
};

enum class SignalLabel { desired, interference, steering, noise };

/// A vector in the receive antenna domain, in units of sqrt(power).
struct SpatialSignal {
    arma::cx_vec vector;
    SignalLabel label = SignalLabel::desired;
};

/// Additive white Gaussian noise power per receive antenna.
struct NoiseModel {
    double variance;

    explicit NoiseModel(double v) : variance(v) {
        if (!(v > 0.0)) {
            throw domain_error("noise variance must be positive");
        }
    }
};

/// One transmission: radiated power, unit-norm precoder and the (unit
/// mean-square) data symbol it carries.
struct TransmitIntent {
    double power;
    arma::cx_vec precoder;
    cx symbol;

    TransmitIntent(double p, arma::cx_vec prec, cx sym = cx{1.0, 0.0})
        : power(p), precoder(std::move(prec)), symbol(sym) {
        if (power < 0.0) {
            throw infeasible_power_error("transmit power is negative (overhead "
                                         "exceeds the power budget)");
        }
        if (std::abs(arma::norm(precoder) - 1.0) > 1e-9 && power > 0.0) {
            throw normalization_error("precoder must be unit-norm");
        }
    }
};

/// A transmission seen through a propagation channel.
struct Link {
    ChannelMatrix channel;
    TransmitIntent intent;
};

/// Draw an n_r x n_t channel with i.i.d. CN(0,1) entries (spatially
/// uncorrelated Rayleigh flat fading). Deterministic given the stream.
inline ChannelMatrix sample_rayleigh(RngStream& rng, int n_r, int n_t) {
    if (n_r < 1 || n_t < n_r) {
        throw dimension_error("sample_rayleigh requires n_t >= n_r >= 1");
    }
    arma::cx_mat h(static_cast<arma::uword>(n_r), static_cast<arma::uword>(n_t));
    for (arma::uword r = 0; r < h.n_rows; ++r) {
        for (arma::uword c = 0; c < h.n_cols; ++c) {
            h(r, c) = rng.complex_gaussian();
        }
    }
    return ChannelMatrix(std::move(h));
}

/// Principal singular triple of a channel, with a fixed phase convention:
/// the largest-magnitude precoder entry is rotated to zero phase (the
/// filter is rotated by the same amount, keeping filter^H H precoder real
/// and nonnegative). Ties between equal singular values resolve to the
/// lowest column index, so repeated calls are bitwise identical.
inline BeamformPair svd_beamform(const ChannelMatrix& H) {
    if (arma::norm(H.entries, "fro") == 0.0) {
        throw degenerate_channel_error("svd_beamform on an all-zero channel");
    }
    arma::cx_mat U, V;
    arma::vec s;
    if (!arma::svd(U, s, V, H.entries)) {
        throw degenerate_channel_error("svd failed to converge");
    }
    arma::cx_vec p = V.col(0);
    arma::cx_vec f = U.col(0);
    const arma::uword imax = arma::abs(p).index_max();
    const cx entry = p(imax);
    if (std::abs(entry) > 0.0) {
        const cx rot = std::conj(entry) / std::abs(entry);
        p *= rot;
        f *= rot;
    }
    return BeamformPair{std::move(p), std::move(f), s(0)};
}

/// Split a signal into the component along a unit reference direction and
/// the exactly complementary orthogonal remainder. Hermitian inner product
/// throughout: reference^H * quadrature == 0.
inline std::pair<SpatialSignal, SpatialSignal>
decompose_against(const arma::cx_vec& reference, const SpatialSignal& v) {
    if (std::abs(arma::norm(reference) - 1.0) > 1e-9) {
        throw normalization_error("reference direction must be unit-norm");
    }
    if (reference.n_elem != v.vector.n_elem) {
        throw dimension_error("reference/signal dimension mismatch");
    }
    arma::cx_vec in_phase = reference * arma::cdot(reference, v.vector);
    arma::cx_vec quadrature = v.vector - in_phase;
    return {SpatialSignal{std::move(in_phase), v.label},
            SpatialSignal{std::move(quadrature), v.label}};
}

/// Received-signal model: sqrt(P_d) H_d p_d x_d  +  sum_m sqrt(P_T) H_m p_m x_m
/// + sqrt(P_s) H_s p_s x_s + z. Every omitted part contributes zero.
/// The desired link's power is the budget remaining after any steering
/// overhead; a negative remainder already fails at TransmitIntent
/// construction with infeasible_power_error.
inline SpatialSignal assemble_rx(const Link& desired,
                                 std::span<const Link> interferers,
                                 const std::optional<Link>& steering,
                                 const std::optional<arma::cx_vec>& noise_sample) {
    const arma::uword n_r = desired.channel.n_r();
    auto term = [n_r](const Link& l) -> arma::cx_vec {
        if (l.channel.n_r() != n_r) {
            throw dimension_error("all links must share the receiver dimension");
        }
        return std::sqrt(l.intent.power) * (l.channel.entries * l.intent.precoder) *
               l.intent.symbol;
    };
    arma::cx_vec y = term(desired);
    for (const Link& l : interferers) {
        y += term(l);
    }
    if (steering) {
        y += term(*steering);
    }
    if (noise_sample) {
        if (noise_sample->n_elem != n_r) {
            throw dimension_error("noise sample dimension mismatch");
        }
        y += *noise_sample;
    }
    return SpatialSignal{std::move(y), SignalLabel::desired};
}

/// Draw z ~ CN(0, variance * I) of length n_r.
inline arma::cx_vec sample_noise(RngStream& rng, const NoiseModel& noise,
                                 arma::uword n_r) {
    arma::cx_vec z(n_r);
    const double sd = std::sqrt(noise.variance);
    for (arma::uword k = 0; k < n_r; ++k) {
        z(k) = sd * rng.complex_gaussian();
    }
    return z;
}

/// Spectral efficiency of a link at a given post-processing SNR, bps/Hz.
inline double shannon_se(double snr) {
    if (snr < 0.0) {
        throw domain_error("shannon_se requires snr >= 0");
    }
    return std::log2(1.0 + snr);
}

} // namespace steersim

#endif
