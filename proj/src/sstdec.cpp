// SPDX-License-Identifier: Apache-2.0

#include "sstkf/sstdec.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sstkf {

namespace {

BitPairs hard_of(const ReceivedBlocks& z) {
    BitPairs out(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) out[k] = z[k].z_hard;
    return out;
}

double signed_magnitude(double magnitude, std::uint8_t hard) { return hard ? -magnitude : magnitude; }

}  // namespace

Bits predecode(const BitPairs& z_hard, const ConvCode& code, DecoderMode mode) {
    Bits z1(z_hard.size()), z2(z_hard.size());
    for (std::size_t k = 0; k < z_hard.size(); ++k) {
        z1[k] = z_hard[k][0];
        z2[k] = z_hard[k][1];
    }
    if (mode == DecoderMode::Qli) {
        for (std::size_t k = 0; k < z1.size(); ++k) z1[k] ^= z2[k];
        return z1;
    }
    Bits out = apply_poly(code.ginv().at(0, 0), z1);
    const Bits second = apply_poly(code.ginv().at(1, 0), z2);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] ^= second[k];
    return out;
}

SoftInputs main_input_general(const ReceivedBlocks& z, const ConvCode& code) {
    const BitPairs reencoded = encode(code, predecode(hard_of(z), code, DecoderMode::General));
    SoftInputs out(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) {
        for (int l = 0; l < 2; ++l) {
            const std::uint8_t h = reencoded[k][l] ^ z[k].z_hard[l];
            out[k].r_hard[l] = h;
            out[k].r[l] = signed_magnitude(std::abs(z[k].z[l]), h);
        }
    }
    return out;
}

SoftInputs main_input_qli(const ReceivedBlocks& z, const ConvCode& code) {
    if (!code.is_qli()) throw std::invalid_argument("main_input_qli needs a code with g1 + g2 = D^L");
    const auto delay = static_cast<std::size_t>(*code.qli_delay());
    const BitPairs reencoded = encode(code, predecode(hard_of(z), code, DecoderMode::Qli));
    SoftInputs out(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) {
        for (int l = 0; l < 2; ++l) {
            std::uint8_t h = reencoded[k][l];
            double magnitude = kKnownReliable;
            if (k >= delay) {
                h ^= z[k - delay].z_hard[l];
                magnitude = std::abs(z[k - delay].z[l]);
            }
            out[k].r_hard[l] = h;
            out[k].r[l] = signed_magnitude(magnitude, h);
        }
    }
    return out;
}

ViterbiDecoder::ViterbiDecoder(const ConvCode& code, int depth)
    : code_(&code), nu_(code.nu()), states_(1 << code.nu()), depth_(depth) {
    if (depth < 1) throw std::invalid_argument("traceback depth must be positive");
    if (nu_ > 16) throw std::invalid_argument("constraint length too large for the Viterbi decoder");
    label_sign_.resize(static_cast<std::size_t>(states_) * 2);
    for (std::uint64_t reg = 0; reg < label_sign_.size(); ++reg) {
        const unsigned y1 = std::popcount(reg & code.g1().bits()) & 1u;
        const unsigned y2 = std::popcount(reg & code.g2().bits()) & 1u;
        label_sign_[reg] = {y1 ? -1.0 : 1.0, y2 ? -1.0 : 1.0};
    }
    metric_.resize(states_);
    next_metric_.resize(states_);
    ring_.resize(static_cast<std::size_t>(depth_) * states_);
}

Bits ViterbiDecoder::decode(const SoftInputs& r) {
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    const std::size_t n = r.size();
    const unsigned high = nu_ > 0 ? 1u << (nu_ - 1) : 0u;
    std::fill(metric_.begin(), metric_.end(), kNegInf);
    metric_[0] = 0.0;
    Bits out(n, 0);

    auto best_state = [&] {
        int best = 0;
        for (int s = 1; s < states_; ++s) {
            if (metric_[s] > metric_[best]) best = s;
        }
        return best;
    };
    // Walks back from `state` at stage `t`, writing inputs for stages in
    // [stop, t] when `write_all`, otherwise only stage `stop`.
    auto trace = [&](unsigned state, std::size_t t, std::size_t stop, bool write_all) {
        for (std::size_t s = t + 1; s-- > stop;) {
            if (write_all || s == stop) out[s] = static_cast<std::uint8_t>(state & 1u);
            const std::uint8_t choice = ring_[(s % depth_) * states_ + state];
            state = nu_ > 0 ? ((state >> 1) | (choice ? high : 0u)) : 0u;
        }
    };

    for (std::size_t t = 0; t < n; ++t) {
        std::uint8_t* choices = &ring_[(t % depth_) * states_];
        for (int next = 0; next < states_; ++next) {
            const unsigned u = static_cast<unsigned>(next) & 1u;
            double best = kNegInf;
            std::uint8_t pick = 0;
            for (unsigned b = 0; b < (nu_ > 0 ? 2u : 1u); ++b) {
                const unsigned prev = nu_ > 0 ? ((static_cast<unsigned>(next) >> 1) | (b ? high : 0u)) : 0u;
                if (metric_[prev] == kNegInf) continue;
                const unsigned reg = (prev << 1) | u;
                const auto& sign = label_sign_[reg];
                const double m = metric_[prev] + sign[0] * r[t].r[0] + sign[1] * r[t].r[1];
                if (m > best) {
                    best = m;
                    pick = static_cast<std::uint8_t>(b);
                }
            }
            next_metric_[next] = best;
            choices[next] = pick;
        }
        metric_.swap(next_metric_);
        const double top = metric_[best_state()];
        for (double& m : metric_) {
            if (m != kNegInf) m -= top;
        }
        if (t + 1 >= static_cast<std::size_t>(depth_)) {
            trace(static_cast<unsigned>(best_state()), t, t + 1 - depth_, false);
        }
    }
    if (n > 0) {
        const std::size_t start = n >= static_cast<std::size_t>(depth_) ? n - depth_ + 1 : 0;
        trace(static_cast<unsigned>(best_state()), n - 1, start, true);
    }
    return out;
}

Bits viterbi_main(const SoftInputs& r, const ConvCode& code, int truncation) {
    if (truncation < 5 * code.nu()) throw std::invalid_argument("truncation must be at least 5 nu");
    ViterbiDecoder decoder(code, truncation);
    return decoder.decode(r);
}

double path_metric(const SoftInputs& r, const ConvCode& code, const Bits& info) {
    if (info.size() != r.size()) throw std::invalid_argument("path_metric: length mismatch");
    const BitPairs y = encode(code, info);
    double total = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
        for (int l = 0; l < 2; ++l) total += (y[k][l] ? -1.0 : 1.0) * r[k].r[l];
    }
    return total;
}

int default_truncation(const ConvCode& code, DecoderMode mode) {
    const int delay = mode == DecoderMode::Qli && code.is_qli() ? *code.qli_delay() : 0;
    return 5 * code.nu() + delay;
}

Bits sst_decode(const ReceivedBlocks& z, const ConvCode& code, DecoderMode mode, int truncation) {
    if (truncation <= 0) truncation = default_truncation(code, mode);
    const Bits pre = predecode(hard_of(z), code, mode);
    if (mode == DecoderMode::General) {
        const Bits correction = viterbi_main(main_input_general(z, code), code, truncation);
        Bits out(pre.size());
        for (std::size_t k = 0; k < pre.size(); ++k) out[k] = pre[k] ^ correction[k];
        return out;
    }
    const Bits correction = viterbi_main(main_input_qli(z, code), code, truncation);
    const auto delay = static_cast<std::size_t>(*code.qli_delay());
    Bits out;
    if (pre.size() > delay) out.resize(pre.size() - delay);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = pre[j + delay] ^ correction[j + delay];
    return out;
}

Bits classical_decode(const ReceivedBlocks& z, const ConvCode& code, int truncation) {
    if (truncation <= 0) truncation = default_truncation(code, DecoderMode::General);
    SoftInputs r(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) r[k] = {z[k].z, z[k].z_hard};
    return viterbi_main(r, code, truncation);
}

}  // namespace sstkf
