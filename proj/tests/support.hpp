// SPDX-License-Identifier: Apache-2.0
//
// Small helpers shared by the unit tests: seeded generators for random
// instances of the library types.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sstkf/gf2.hpp"

namespace sstkf::testkit {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : engine_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    bool coin() { return integer(0, 1) == 1; }

    BinaryPoly poly(int max_degree) {
        const std::uint64_t span = max_degree >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (max_degree + 1)) - 1;
        return BinaryPoly{engine_() & span};
    }

    BinaryPolyMatrix polymat(int rows, int cols, int max_degree) {
        std::vector<BinaryPoly> e;
        for (int i = 0; i < rows * cols; ++i) e.push_back(poly(max_degree));
        return BinaryPolyMatrix(rows, cols, std::move(e));
    }

    std::vector<std::uint8_t> bits(std::size_t n) {
        std::vector<std::uint8_t> out(n);
        for (auto& b : out) b = static_cast<std::uint8_t>(integer(0, 1));
        return out;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace sstkf::testkit
