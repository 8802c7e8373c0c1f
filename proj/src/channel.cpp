// SPDX-License-Identifier: Apache-2.0

#include "sstkf/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sstkf {

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

SnrPoint snr_point(double ebn0_db, double rate) {
    if (!(rate > 0.0 && rate <= 1.0)) throw std::invalid_argument("rate must lie in (0, 1]");
    if (!std::isfinite(ebn0_db)) throw std::invalid_argument("Eb/N0 must be finite");
    SnrPoint p;
    p.ebn0_db = ebn0_db;
    p.rate = rate;
    p.rho = std::pow(10.0, ebn0_db / 10.0) * 2.0 * rate;
    p.c = std::sqrt(p.rho);
    p.epsilon = q_function(p.c);
    return p;
}

std::vector<double> default_db_grid() {
    std::vector<double> grid;
    for (int db = -10; db <= 10; ++db) grid.push_back(db);
    return grid;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(splitmix64(seed ^ splitmix64(stream))) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform_open0();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

ReceivedBlocks transmit_with_noise(const BitPairs& bits, const SnrPoint& point,
                                   const std::vector<std::array<double, 2>>& noise) {
    if (noise.size() != bits.size()) throw std::invalid_argument("noise length must match the bit sequence");
    ReceivedBlocks out(bits.size());
    for (std::size_t k = 0; k < bits.size(); ++k) {
        for (int l = 0; l < 2; ++l) {
            const double x = bits[k][l] ? -1.0 : 1.0;
            const double z = point.c * x + noise[k][l];
            out[k].z[l] = z;
            out[k].z_hard[l] = hard_decision(z);
        }
    }
    return out;
}

ReceivedBlocks transmit(const BitPairs& bits, const SnrPoint& point, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::array<double, 2>> noise(bits.size());
    for (auto& w : noise) {
        w[0] = rng.normal();
        w[1] = rng.normal();
    }
    return transmit_with_noise(bits, point, noise);
}

}  // namespace sstkf
