// SPDX-License-Identifier: Apache-2.0

#include "sstkf/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sstkf/channel.hpp"
#include "sstkf/sstdec.hpp"

namespace sstkf {

namespace {

constexpr std::uint64_t kSegment = 65536;

enum Stat { kWeight, kPreErr, kPostErr, kPostN, kV1, kV2, kV11, kR1, kR2, kR11, kR12, kR22, kStats };

using Batch = std::array<double, kStats>;

double total(const std::vector<Batch>& b, Stat s) {
    double t = 0.0;
    for (const auto& x : b) t += x[s];
    return t;
}

/// Ratio estimator sum(num)/sum(weight) with a batch-means standard error.
Estimate ratio(const std::vector<Batch>& batches, Stat num, Stat weight = kWeight) {
    const double w = total(batches, weight);
    Estimate e;
    if (w <= 0.0) return e;
    e.value = total(batches, num) / w;
    if (batches.size() < 2) return e;
    double ss = 0.0;
    for (const auto& b : batches) ss += std::pow(b[num] - e.value * b[weight], 2);
    const double nb = static_cast<double>(batches.size());
    e.std_error = std::sqrt(ss * nb / (nb - 1.0)) / w;
    return e;
}

/// Covariance of r_i, r_j with the standard error of its influence function.
Estimate covariance(const std::vector<Batch>& batches, Stat ri, Stat rj, Stat rij) {
    const double w = total(batches, kWeight);
    const double mi = total(batches, ri) / w, mj = total(batches, rj) / w;
    Estimate e;
    e.value = total(batches, rij) / w - mi * mj;
    double ss = 0.0;
    for (const auto& b : batches) {
        const double d = b[rij] - mi * b[rj] - mj * b[ri] + mi * mj * b[kWeight] - e.value * b[kWeight];
        ss += d * d;
    }
    const double nb = static_cast<double>(batches.size());
    e.std_error = nb > 1 ? std::sqrt(ss * nb / (nb - 1.0)) / w : 0.0;
    return e;
}

}  // namespace

SimulationResult simulate(const ConvCode& code, const SimulationOptions& opt) {
    if (opt.branches < 1000) throw std::invalid_argument("simulate needs at least 1000 branches");
    if (opt.batch <= 0) throw std::invalid_argument("batch size must be positive");
    const bool qli = opt.mode == DecoderMode::Qli;
    if (qli && !code.is_qli()) throw std::invalid_argument("QLI mode needs a quick-look-in code");
    const int L = qli ? *code.qli_delay() : 0;
    const SnrPoint point = snr_point(opt.ebn0_db, code.rate());
    const int truncation = opt.truncation > 0 ? opt.truncation : default_truncation(code, opt.mode);
    const auto warmup = static_cast<std::size_t>(4 * code.nu() + 2 * L + 16);

    std::vector<Batch> batches;
    std::uint64_t done = 0;
    for (std::uint64_t segment = 0; done < opt.branches; ++segment) {
        const std::size_t counted = static_cast<std::size_t>(std::min(kSegment, opt.branches - done));
        const std::size_t n = warmup + counted;
        Rng rng(opt.seed, segment);
        Bits info(n);
        for (auto& b : info) b = static_cast<std::uint8_t>(rng.next_u64() >> 63);
        const BitPairs y = encode(code, info);
        std::vector<std::array<double, 2>> noise(n);
        for (auto& w : noise) w = {rng.normal(), rng.normal()};
        const ReceivedBlocks z = transmit_with_noise(y, point, noise);

        BitPairs z_hard(n);
        for (std::size_t k = 0; k < n; ++k) z_hard[k] = z[k].z_hard;
        const Bits pre = predecode(z_hard, code, opt.mode);
        const SoftInputs main = qli ? main_input_qli(z, code) : main_input_general(z, code);
        const Bits out = sst_decode(z, code, opt.mode, truncation);

        const std::size_t first_batch = batches.size();
        batches.resize(first_batch + (counted + static_cast<std::size_t>(opt.batch) - 1) / static_cast<std::size_t>(opt.batch),
                       Batch{});
        for (std::size_t k = warmup; k < n; ++k) {
            Batch& b = batches[first_batch + (k - warmup) / static_cast<std::size_t>(opt.batch)];
            b[kWeight] += 1.0;
            // Pre-decoder output k estimates i_{k-L}; decoder output j is i_j.
            const std::uint8_t truth_pre = info[k - static_cast<std::size_t>(L)];
            b[kPreErr] += pre[k] != truth_pre;
            if (k < out.size()) {
                b[kPostN] += 1.0;
                b[kPostErr] += out[k] != info[k];
            }
            // Channel error carried by the main-decoder input at k.
            const std::size_t src = k - static_cast<std::size_t>(L);
            std::array<std::uint8_t, 2> v{};
            for (int l = 0; l < 2; ++l) {
                const std::uint8_t e = z[src].z_hard[l] ^ y[src][l];
                v[l] = main[k].r_hard[l] ^ e;
            }
            b[kV1] += v[0];
            b[kV2] += v[1];
            b[kV11] += v[0] & v[1];
            const double r1 = main[k].r[0], r2 = main[k].r[1];
            b[kR1] += r1;
            b[kR2] += r2;
            b[kR11] += r1 * r1;
            b[kR12] += r1 * r2;
            b[kR22] += r2 * r2;
        }
        done += counted;
    }

    SimulationResult res;
    res.ebn0_db = opt.ebn0_db;
    res.branches = opt.branches;
    res.pre_ber = ratio(batches, kPreErr);
    res.post_ber = ratio(batches, kPostErr, kPostN);
    res.alpha1 = ratio(batches, kV1);
    res.alpha2 = ratio(batches, kV2);
    res.alpha11 = ratio(batches, kV11);
    const Estimate c11 = covariance(batches, kR1, kR1, kR11);
    const Estimate c12 = covariance(batches, kR1, kR2, kR12);
    const Estimate c22 = covariance(batches, kR2, kR2, kR22);
    res.sigma_r << c11.value, c12.value, c12.value, c22.value;
    res.sigma_r_se << c11.std_error, c12.std_error, c12.std_error, c22.std_error;
    return res;
}

}  // namespace sstkf
