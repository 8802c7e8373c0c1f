// SPDX-License-Identifier: Apache-2.0
//
// Scarce-state-transition decoding: a pre-decoder (right inverse of G, or
// (1,1)^T for QLI codes), re-encoding to form the main-decoder input, a
// max-correlation Viterbi main decoder, and recombination.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sstkf/channel.hpp"
#include "sstkf/convcode.hpp"

namespace sstkf {

struct SoftInputBlock {
    std::array<double, 2> r{};
    BitPair r_hard{};
};

using SoftInputs = std::vector<SoftInputBlock>;

/// Magnitude assigned to the L leading QLI positions that precede the first
/// received branch. Those positions are known error-free.
inline constexpr double kKnownReliable = 1e6;

/// z^h Ginv(D) in general mode, z1 + z2 in QLI mode.
Bits predecode(const BitPairs& z_hard, const ConvCode& code, DecoderMode mode);

/// Hard part (re-encoded pre-decoder output) XOR z^h = v + e with
/// v = e Ginv G. Soft part |z| carrying the sign of the hard part.
SoftInputs main_input_general(const ReceivedBlocks& z, const ConvCode& code);

/// eta_{k-L}: hard part (re-encoded pre-decoder output at k) XOR z^h_{k-L}
/// = v_k + e_{k-L}, soft magnitude |z_{k-L}|. Positions k < L have no
/// received branch and carry kKnownReliable. Element k of the result is the
/// block aligned with v_k. Throws std::invalid_argument for non-QLI codes.
SoftInputs main_input_qli(const ReceivedBlocks& z, const ConvCode& code);

/// Max-correlation Viterbi search over the code trellis, starting in the zero
/// state. Survivors are kept in a ring of `depth` stages; each completed
/// stage releases the oldest symbol of the best survivor, and the tail is
/// flushed from the best final state.
class ViterbiDecoder {
public:
    ViterbiDecoder(const ConvCode& code, int depth);

    Bits decode(const SoftInputs& r);

    int depth() const { return depth_; }
    int states() const { return states_; }

private:
    const ConvCode* code_;
    int nu_;
    int states_;
    int depth_;
    std::vector<std::array<double, 2>> label_sign_;  // by register value
    std::vector<double> metric_;
    std::vector<double> next_metric_;
    std::vector<std::uint8_t> ring_;  // depth_ x states_ predecessor choices
};

/// Throws std::invalid_argument if truncation < 5 nu.
Bits viterbi_main(const SoftInputs& r, const ConvCode& code, int truncation);

/// Sum over branches of r . (+1 for bit 0, -1 for bit 1) along encode(info).
double path_metric(const SoftInputs& r, const ConvCode& code, const Bits& info);

int default_truncation(const ConvCode& code, DecoderMode mode);

/// Pre-decoder output XOR main-decoder output. Returns N bits in general mode
/// and N - L bits (i_0 .. i_{N-L-1}) in QLI mode. truncation <= 0 selects
/// default_truncation.
Bits sst_decode(const ReceivedBlocks& z, const ConvCode& code, DecoderMode mode, int truncation = 0);

/// Conventional Viterbi decoding of z itself.
Bits classical_decode(const ReceivedBlocks& z, const ConvCode& code, int truncation = 0);

}  // namespace sstkf
