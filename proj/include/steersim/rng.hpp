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

#ifndef STEERSIM_RNG_HPP
#define STEERSIM_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace steersim {

/// SplitMix64 finalizer. Used to spread master seeds into per-trial and
/// per-lane stream seeds so that trials are independently addressable.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

/// Seed of the index-th derived stream of a master seed. Random access:
/// stream i can be created without generating streams 0..i-1.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
    constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;
    return mix64(master + (index + 1) * golden);
}

/// Seed of lane `lane` inside trial `trial` of a master seed. Lanes keep
/// draw sequences stable when a trial samples several unrelated objects.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t trial,
                                std::uint64_t lane) {
    return split_seed(split_seed(master, trial), lane);
}

/// Deterministic random stream. The Gaussian mappings are spelled out
/// (rather than using std::normal_distribution) so that sequences are
/// identical across standard library implementations.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : eng_(seed) {}

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Standard real Gaussian N(0, 1) via the Box-Muller map.
    /// Consumes exactly two uniforms.
    double gaussian() {
        const double u1 = 1.0 - uniform(); // (0, 1], keeps log finite
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::acos(-1.0) * u2);
    }

    /// Circularly-symmetric complex Gaussian CN(0, 1): unit-mean-square
    /// magnitude, real and imaginary parts each N(0, 1/2).
    /// Consumes exactly two uniforms.
    std::complex<double> complex_gaussian() {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-std::log(u1));
        const double phi = 2.0 * std::acos(-1.0) * u2;
        return {r * std::cos(phi), r * std::sin(phi)};
    }

  private:
    std::mt19937_64 eng_;
};

} // namespace steersim

#endif
