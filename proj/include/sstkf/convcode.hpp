// SPDX-License-Identifier: Apache-2.0
//
// Rate-1/2 convolutional codes: generator, right inverse, optional check
// matrix, encoder, syndrome former and the quick-look-in (QLI) family.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sstkf/gf2.hpp"

namespace sstkf {

using Bits = std::vector<std::uint8_t>;
using BitPair = std::array<std::uint8_t, 2>;
using BitPairs = std::vector<BitPair>;

/// Which pre-inverse the main encoded block map is built from.
enum class DecoderMode { General, Qli };

DecoderMode parse_mode(std::string_view text);
std::string_view to_string(DecoderMode mode);

/// Immutable (2, 1) code. Construction validates G * Ginv = 1 and, when a
/// check matrix is supplied, G * H^T = 0.
class ConvCode {
public:
    ConvCode(std::string name, BinaryPolyMatrix g, BinaryPolyMatrix ginv,
             std::optional<BinaryPolyMatrix> h = std::nullopt);

    const std::string& name() const { return name_; }
    int n0() const { return 2; }
    int k0() const { return 1; }
    double rate() const { return 0.5; }
    int nu() const { return nu_; }

    const BinaryPolyMatrix& g() const { return g_; }
    const BinaryPolyMatrix& ginv() const { return ginv_; }
    const std::optional<BinaryPolyMatrix>& h() const { return h_; }

    BinaryPoly g1() const { return g_.at(0, 0); }
    BinaryPoly g2() const { return g_.at(0, 1); }

    /// L with g1 + g2 = D^L, when the code is quick-look-in.
    std::optional<int> qli_delay() const { return qli_delay_; }
    bool is_qli() const { return qli_delay_.has_value(); }

private:
    std::string name_;
    BinaryPolyMatrix g_;
    BinaryPolyMatrix ginv_;
    std::optional<BinaryPolyMatrix> h_;
    int nu_ = 0;
    std::optional<int> qli_delay_;
};

struct QliCode {
    ConvCode base;
    int delay = 1;
    std::optional<BinaryPoly> gprime;
};

/// G = (1 + D g', 1 + D + D g'), Ginv = (1 + g', g')^T. Throws
/// std::invalid_argument if g' is zero or has a constant term.
QliCode make_qli(BinaryPoly gprime);

/// Right inverse (1 + g', g')^T of the make_qli generator.
BinaryPolyMatrix right_inverse_qli(BinaryPoly gprime);

/// Built-in codes "c1" (nu = 2) and "c2" (nu = 6).
ConvCode builtin_code(std::string_view id);

/// Parses a JSON code definition:
/// { "name": ..., "g": ["111","101"], "ginv": ["01","11"], "h": [...], "qli": bool }.
ConvCode parse_code_json(std::string_view json_text);

/// Built-in id or path to a JSON definition.
ConvCode load_code(std::string_view id_or_path);

std::string code_to_json(const ConvCode& code);

/// y_k = i_k G(D) with zero initial state.
BitPairs encode(const ConvCode& code, const Bits& info);

/// zeta_k = z_k^h H^T(D). `h` must be 1 x 2.
Bits syndrome(const BinaryPolyMatrix& h, const BitPairs& z_hard);

/// G^{-1} G (general view) or (1,1)^T G (QLI view). Row r, column l holds
/// the contribution of error component r to main-decoder symbol l.
BinaryPolyMatrix main_encoded_block_map(const ConvCode& code, DecoderMode mode);

/// Number of length-`length` sub-paths starting from any of the 2^nu states,
/// by explicit enumeration.
std::uint64_t trellis_subpath_count(const ConvCode& code, int length);

/// Number of distinct branch-label sequences over those sub-paths.
std::uint64_t distinct_label_sequences(const ConvCode& code, int length);

}  // namespace sstkf
