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

#include <catch2/catch_amalgamated.hpp>

#include "steersim/baselines.hpp"
#include "steersim/scenario.hpp"

using namespace steersim;
using Catch::Approx;

namespace {

arma::cx_vec random_unit(RngStream& rng, int dim) {
    arma::cx_vec v(dim);
    for (int k = 0; k < dim; ++k) v(k) = rng.complex_gaussian();
    return v / arma::norm(v);
}

} // namespace

TEST_CASE("method labels round-trip") {
    for (MethodLabel m : {MethodLabel::IS, MethodLabel::IN, MethodLabel::IA,
                          MethodLabel::ZFBF, MethodLabel::P2P}) {
        REQUIRE(method_from_string(to_string(m)) == m);
    }
    REQUIRE_THROWS_AS(method_from_string("CoMP"), config_error);
}

TEST_CASE("p2p_bf_se on reference channels") {
    const NoiseModel unit_noise(1.0);
    REQUIRE(p2p_bf_se(ChannelMatrix(arma::cx_mat(2, 2, arma::fill::eye)), 1.0,
                      unit_noise) == Approx(1.0));
    arma::cx_mat d(2, 2, arma::fill::zeros);
    d(0, 0) = 2.0;
    d(1, 1) = 1.0;
    REQUIRE(p2p_bf_se(ChannelMatrix(d), 1.0, unit_noise) == Approx(std::log2(5.0)));
}

TEST_CASE("principal-mode beamforming beats any fixed precoder") {
    RngStream rng(71);
    const NoiseModel noise(0.1);
    for (int k = 0; k < 100; ++k) {
        const ChannelMatrix h = sample_rayleigh(rng, 2, 2);
        const double best = p2p_bf_se(h, 1.0, noise);
        const arma::cx_vec q = random_unit(rng, 2);
        const double other =
            shannon_se(std::pow(arma::norm(h.entries * q), 2) / noise.variance);
        REQUIRE(best >= other - 1e-12);
    }
}

TEST_CASE("zfbf_precoder axis example") {
    arma::cx_mat cross(1, 2, arma::fill::zeros);
    cross(0, 0) = 1.0; // e1 row
    arma::cx_mat own(1, 2);
    own(0, 0) = cx{1.0, 0.0} / std::sqrt(2.0);
    own(0, 1) = cx{1.0, 0.0} / std::sqrt(2.0);
    const arma::cx_vec p = zfbf_precoder(ChannelMatrix(own), ChannelMatrix(cross));
    REQUIRE(std::abs(p(0)) < 1e-12);
    REQUIRE(std::abs(std::abs(p(1)) - 1.0) < 1e-12);
}

TEST_CASE("zfbf costs nothing when the channels are orthogonal") {
    RngStream rng(72);
    arma::cx_mat cross(1, 2);
    cross(0, 0) = rng.complex_gaussian();
    cross(0, 1) = rng.complex_gaussian();
    // own = orthogonal complement of cross
    arma::cx_mat own(1, 2);
    own(0, 0) = -std::conj(cross(0, 1));
    own(0, 1) = std::conj(cross(0, 0));
    const arma::cx_vec p = zfbf_precoder(ChannelMatrix(own), ChannelMatrix(cross));
    const cx gain = arma::as_scalar(own * p);
    REQUIRE(std::abs(gain) == Approx(arma::norm(own, "fro")).epsilon(1e-10));
}

TEST_CASE("zfbf null-space property on random draws") {
    RngStream rng(73);
    for (int k = 0; k < 300; ++k) {
        const ChannelMatrix own = sample_rayleigh(rng, 1, 2);
        const ChannelMatrix cross = sample_rayleigh(rng, 1, 2);
        const arma::cx_vec p = zfbf_precoder(own, cross);
        REQUIRE(arma::norm(p) == Approx(1.0).margin(1e-12));
        REQUIRE(std::abs(arma::as_scalar(cross.entries * p)) < 1e-10);
    }
}

TEST_CASE("zfbf falls back to a null-space direction for collinear channels") {
    RngStream rng(74);
    arma::cx_mat cross(1, 2);
    cross(0, 0) = rng.complex_gaussian();
    cross(0, 1) = rng.complex_gaussian();
    const arma::cx_mat own = cx{0.3, 0.7} * cross;
    const arma::cx_vec p = zfbf_precoder(ChannelMatrix(own), ChannelMatrix(cross));
    REQUIRE(arma::norm(p) == Approx(1.0).margin(1e-12));
    REQUIRE(std::abs(arma::as_scalar(cross * p)) < 1e-10);
    REQUIRE(std::abs(arma::as_scalar(own * p)) < 1e-10); // zero-gain link
}

TEST_CASE("ia_precoder identity example") {
    arma::cx_mat victim(2, 2, arma::fill::zeros);
    victim(0, 0) = 3.0; // second left-singular direction is e2
    victim(1, 1) = 1.0;
    const ChannelMatrix cross(arma::cx_mat(2, 2, arma::fill::eye));
    const arma::cx_vec p = ia_precoder(cross, ChannelMatrix(victim));
    REQUIRE(std::abs(p(0)) < 1e-12);
    REQUIRE(std::abs(std::abs(p(1)) - 1.0) < 1e-12);
}

TEST_CASE("aligned interference vanishes behind the victim's filter") {
    RngStream rng(75);
    for (int k = 0; k < 300; ++k) {
        const ChannelMatrix victim = sample_rayleigh(rng, 2, 2);
        const ChannelMatrix cross = sample_rayleigh(rng, 2, 2);
        const BeamformPair vbf = svd_beamform(victim);
        const arma::cx_vec p = ia_precoder(cross, victim);
        const cx through = arma::cdot(vbf.filter, cross.entries * p);
        REQUIRE(std::abs(through) < 1e-10);
    }
}

TEST_CASE("ia_precoder rejects rank-deficient cross channels") {
    RngStream rng(76);
    const ChannelMatrix victim = sample_rayleigh(rng, 2, 2);
    arma::cx_mat low(2, 2);
    low.col(0) = arma::cx_vec{cx{1, 0}, cx{0, 1}};
    low.col(1) = low.col(0);
    REQUIRE_THROWS_AS(ia_precoder(ChannelMatrix(low), victim),
                      singular_channel_error);
}

TEST_CASE("under alignment the victim keeps the interference-free SE") {
    const NoiseModel noise(0.1);
    for (int M : {1, 3}) {
        RngStream local(900 + M);
        const StarScenario sc = sample_star(local, M, 2, 2);
        const SeBreakdown b = system_se(MethodLabel::IA, sc, noise);
        REQUIRE(b.victim_se ==
                Approx(p2p_bf_se(sc.victim_direct, 1.0, noise)).epsilon(1e-12));
        REQUIRE(b.interferer_se.size() == static_cast<std::size_t>(M));
    }
}

TEST_CASE("system_se with no interferers reduces to the reference link") {
    RngStream rng(78);
    const NoiseModel noise(0.2);
    const StarScenario sc = sample_star(rng, 0, 2, 2);
    const double rbf = p2p_bf_se(sc.victim_direct, 1.0, noise);
    for (MethodLabel m :
         {MethodLabel::IS, MethodLabel::IN, MethodLabel::IA, MethodLabel::P2P}) {
        const SeBreakdown b = system_se(m, sc, noise);
        REQUIRE(b.system_se == Approx(rbf).epsilon(1e-12));
        REQUIRE(b.victim_se == Approx(rbf).epsilon(1e-12));
    }
    RngStream rngz(79);
    const StarScenario scz = sample_star(rngz, 0, 1, 2);
    const SeBreakdown bz = system_se(MethodLabel::ZFBF, scz, noise);
    REQUIRE(bz.system_se ==
            Approx(p2p_bf_se(scz.victim_direct, 1.0, noise)).epsilon(1e-12));
}

TEST_CASE("an unpayable overhead zeroes the victim and leaves the rest") {
    RngStream rng(80);
    const NoiseModel noise(0.1);
    int seen = 0;
    for (int k = 0; k < 400 && seen < 5; ++k) {
        const StarScenario sc = sample_star(rng, 2, 2, 2);
        const SeBreakdown b = system_se(MethodLabel::IN, sc, noise);
        if (!b.victim_infeasible) continue;
        ++seen;
        REQUIRE(b.victim_se == 0.0);
        double rest = 0.0;
        for (std::size_t m = 0; m < sc.interferer_direct.size(); ++m) {
            rest += p2p_bf_se(sc.interferer_direct[m], 1.0, noise);
        }
        REQUIRE(b.system_se == Approx(rest).epsilon(1e-12));
    }
    REQUIRE(seen == 5);
}

TEST_CASE("the breakdown total always matches its parts") {
    RngStream rng(81);
    const NoiseModel noise(0.05);
    for (int k = 0; k < 50; ++k) {
        const StarScenario sc = sample_star(rng, 3, 2, 2);
        for (MethodLabel m : {MethodLabel::IS, MethodLabel::IN, MethodLabel::IA,
                              MethodLabel::P2P}) {
            const SeBreakdown b = system_se(m, sc, noise);
            double total = b.victim_se;
            for (double r : b.interferer_se) total += r;
            REQUIRE(b.system_se == Approx(total).margin(1e-12));
        }
    }
}

TEST_CASE("no method beats the interference-free bound per realization") {
    RngStream rng(82);
    const NoiseModel noise(0.0316);
    for (int k = 0; k < 200; ++k) {
        const StarScenario sc = sample_star(rng, 2, 2, 2);
        const double bound = p2p_bf_se(sc.victim_direct, 1.0, noise);
        for (MethodLabel m : {MethodLabel::IS, MethodLabel::IN, MethodLabel::IA,
                              MethodLabel::P2P}) {
            const SeBreakdown b = system_se(m, sc, noise);
            REQUIRE(b.victim_se >= 0.0);
            REQUIRE(b.victim_se <= bound + 1e-12);
        }
    }
}

TEST_CASE("every protected interferer pays with its own-link SE") {
    RngStream rng(83);
    const NoiseModel noise(0.0316);
    for (int k = 0; k < 200; ++k) {
        const StarScenario sc = sample_star(rng, 2, 2, 2);
        const SeBreakdown bia = system_se(MethodLabel::IA, sc, noise);
        for (std::size_t m = 0; m < 2; ++m) {
            REQUIRE(bia.interferer_se[m] <=
                    p2p_bf_se(sc.interferer_direct[m], 1.0, noise) + 1e-12);
        }
        RngStream local(1000 + k);
        const StarScenario scz = sample_star(local, 2, 1, 2);
        const SeBreakdown bz = system_se(MethodLabel::ZFBF, scz, noise);
        for (std::size_t m = 0; m < 2; ++m) {
            REQUIRE(bz.interferer_se[m] <=
                    p2p_bf_se(scz.interferer_direct[m], 1.0, noise) + 1e-12);
        }
    }
}
